#include "superwalk/walk_oracle.hpp"

#include <algorithm>
#include <functional>

namespace superwalk {

std::string_view to_string(WalkKind kind) {
    switch (kind) {
        case WalkKind::Walk:
            return "walk";
        case WalkKind::Super:
            return "super";
        case WalkKind::EdgeSuper:
            return "edge-super";
    }
    return "?";
}

std::vector<SuperStep> super_steps(const Graph& g, int u) {
    std::vector<SuperStep> steps;
    steps.reserve(2 * g.incident_edges(u).size());
    for (int e : g.incident_edges(u)) {
        steps.push_back(SuperStep{e, g.opposite(e, u), -1});  // move towards the neighbor
        steps.push_back(SuperStep{e, u, +1});                 // head out, turn back
    }
    return steps;
}

std::vector<EdgeSuperStep> edge_super_steps(const Graph& g, int e) {
    const OrientedEdge& ed = g.edge(e);
    std::vector<EdgeSuperStep> steps;
    for (int v : {std::min(ed.tail, ed.head), std::max(ed.tail, ed.head)}) {
        std::vector<EdgeSuperStep> at_v;
        at_v.push_back(EdgeSuperStep{v, e, +1});  // through the endpoint and back
        for (int f : g.incident_edges(v)) {
            if (f == e) {
                continue;
            }
            int sign = g.incidence_sign(v, e) == g.incidence_sign(v, f) ? +1 : -1;
            at_v.push_back(EdgeSuperStep{v, f, sign});
        }
        std::sort(at_v.begin(), at_v.end(),
                  [](const EdgeSuperStep& a, const EdgeSuperStep& b) {
                      return a.destination < b.destination;
                  });
        steps.insert(steps.end(), at_v.begin(), at_v.end());
    }
    return steps;
}

namespace {

// Depth-first listing over any step relation: steps_of(position) yields the
// expansion order, which makes the output deterministic.
std::vector<WalkRecord> enumerate_generic(
    WalkKind kind, int from, int to, int length, int listing_cap,
    const std::function<std::vector<Step>(int)>& steps_of) {
    if (length < 0) {
        throw std::out_of_range("walk length must be nonnegative");
    }
    if (length > listing_cap) {
        throw EnumerationCapError("walk listing of length " + std::to_string(length) +
                                  " exceeds the cap of " + std::to_string(listing_cap) +
                                  " (signed counts without listings are uncapped)");
    }

    std::vector<WalkRecord> out;
    std::vector<Step> trail;
    trail.reserve(static_cast<std::size_t>(length));

    std::function<void(int, int)> dfs = [&](int position, int sign) {
        if (static_cast<int>(trail.size()) == length) {
            if (position == to) {
                out.push_back(WalkRecord{kind, from, trail, sign});
            }
            return;
        }
        for (const Step& s : steps_of(position)) {
            trail.push_back(s);
            dfs(s.to, sign * s.sign);
            trail.pop_back();
        }
    };
    dfs(from, +1);
    return out;
}

std::vector<Step> walk_steps(const Graph& g, int u) {
    std::vector<Step> steps;
    steps.reserve(g.incident_edges(u).size());
    for (int e : g.incident_edges(u)) {
        steps.push_back(Step{e, g.opposite(e, u), +1});
    }
    return steps;
}

std::vector<Step> super_steps_generic(const Graph& g, int u) {
    std::vector<Step> steps;
    for (const SuperStep& s : super_steps(g, u)) {
        steps.push_back(Step{s.via_edge, s.destination, s.sign});
    }
    return steps;
}

std::vector<Step> edge_super_steps_generic(const Graph& g, int e) {
    std::vector<Step> steps;
    for (const EdgeSuperStep& s : edge_super_steps(g, e)) {
        steps.push_back(Step{s.via_vertex, s.destination, s.sign});
    }
    return steps;
}

BigInt sum_of_signs(const std::vector<WalkRecord>& walks) {
    BigInt sum = 0;
    for (const WalkRecord& w : walks) {
        sum += w.sign;
    }
    return sum;
}

// Signed counts by iterating the step relation on a coefficient vector.
std::vector<BigInt> counts_from_generic(int domain_size, int from, int length,
                                        const std::function<std::vector<Step>(int)>& steps_of) {
    if (length < 0) {
        throw std::out_of_range("walk length must be nonnegative");
    }
    std::vector<BigInt> cur(static_cast<std::size_t>(domain_size), BigInt(0));
    cur[static_cast<std::size_t>(from)] = 1;
    for (int round = 0; round < length; ++round) {
        std::vector<BigInt> next(static_cast<std::size_t>(domain_size), BigInt(0));
        for (int pos = 0; pos < domain_size; ++pos) {
            const BigInt& c = cur[static_cast<std::size_t>(pos)];
            if (c == 0) {
                continue;
            }
            for (const Step& s : steps_of(pos)) {
                next[static_cast<std::size_t>(s.to)] += s.sign * c;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::vector<WalkRecord> enumerate_walks(const Graph& g, int from, int to, int length,
                                        int listing_cap) {
    g.vertex_label(from);  // bounds check
    g.vertex_label(to);
    return enumerate_generic(WalkKind::Walk, from, to, length, listing_cap,
                             [&](int u) { return walk_steps(g, u); });
}

SignedWalks signed_super_walks(const Graph& g, int from, int to, int length, int listing_cap) {
    g.vertex_label(from);
    g.vertex_label(to);
    SignedWalks result;
    result.walks = enumerate_generic(WalkKind::Super, from, to, length, listing_cap,
                                     [&](int u) { return super_steps_generic(g, u); });
    result.signed_count = sum_of_signs(result.walks);
    return result;
}

SignedWalks signed_edge_super_walks(const Graph& g, int from, int to, int length,
                                    int listing_cap) {
    g.edge(from);
    g.edge(to);
    SignedWalks result;
    result.walks = enumerate_generic(WalkKind::EdgeSuper, from, to, length, listing_cap,
                                     [&](int e) { return edge_super_steps_generic(g, e); });
    result.signed_count = sum_of_signs(result.walks);
    return result;
}

std::vector<BigInt> walk_counts_from(const Graph& g, int from, int length) {
    g.vertex_label(from);
    return counts_from_generic(g.vertex_count(), from, length,
                               [&](int u) { return walk_steps(g, u); });
}

std::vector<BigInt> super_walk_signed_counts_from(const Graph& g, int from, int length) {
    g.vertex_label(from);
    return counts_from_generic(g.vertex_count(), from, length,
                               [&](int u) { return super_steps_generic(g, u); });
}

std::vector<BigInt> edge_super_walk_signed_counts_from(const Graph& g, int from, int length) {
    g.edge(from);
    return counts_from_generic(g.edge_count(), from, length,
                               [&](int e) { return edge_super_steps_generic(g, e); });
}

BigInt walk_count(const Graph& g, int from, int to, int length) {
    g.vertex_label(to);
    return walk_counts_from(g, from, length)[static_cast<std::size_t>(to)];
}

BigInt super_walk_signed_count(const Graph& g, int from, int to, int length) {
    g.vertex_label(to);
    return super_walk_signed_counts_from(g, from, length)[static_cast<std::size_t>(to)];
}

BigInt edge_super_walk_signed_count(const Graph& g, int from, int to, int length) {
    g.edge(to);
    return edge_super_walk_signed_counts_from(g, from, length)[static_cast<std::size_t>(to)];
}

}  // namespace superwalk
