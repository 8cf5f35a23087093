#pragma once

#include <string_view>
#include <vector>

#include "superwalk/graph.hpp"

namespace superwalk {

/// Thrown when a full walk listing is requested for a length beyond the
/// configured cap. Signed-count queries have no cap.
class EnumerationCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class WalkKind { Walk, Super, EdgeSuper };

std::string_view to_string(WalkKind kind);

/// One step of a walk of any kind. For vertex walks `via` is an edge index
/// and `to` a vertex index; for edge walks `via` is a vertex index and `to`
/// an edge index. Plain walk steps always have sign +1.
struct Step {
    int via = -1;
    int to = -1;
    int sign = +1;

    bool operator==(const Step&) const = default;
};

struct WalkRecord {
    WalkKind kind = WalkKind::Walk;
    int start = -1;
    std::vector<Step> steps;
    int sign = +1;  // product of step signs

    bool operator==(const WalkRecord&) const = default;
};

struct SuperStep {
    int via_edge = -1;
    int destination = -1;  // the neighbor for a move step, the origin for a stay step
    int sign = 0;          // -1 move, +1 stay

    bool operator==(const SuperStep&) const = default;
};

struct EdgeSuperStep {
    int via_vertex = -1;
    int destination = -1;  // destination edge; equal to the origin for a self step
    int sign = 0;

    bool operator==(const EdgeSuperStep&) const = default;
};

/// All length-1 super-walk steps out of vertex u: for each incident edge in
/// ascending index order, the move step (sign -1) followed by the stay step
/// (sign +1). 2*valence(u) steps in total.
std::vector<SuperStep> super_steps(const Graph& g, int u);

/// All length-1 edge super-walk steps out of edge e, ordered by endpoint
/// vertex index, then destination edge index. The two self steps have sign
/// +1; a step to another edge through a shared vertex has sign +1 exactly
/// when the vertex carries the same incidence sign in both edges.
std::vector<EdgeSuperStep> edge_super_steps(const Graph& g, int e);

inline constexpr int kDefaultListingCap = 12;

/// All plain walks from `from` to `to` of exactly `length` steps, depth-first
/// with steps expanded in index order (so the output order is lexicographic
/// in the step sequence). Length 0 yields the single empty walk when
/// from == to. Listing lengths above `listing_cap` are refused.
std::vector<WalkRecord> enumerate_walks(const Graph& g, int from, int to, int length,
                                        int listing_cap = kDefaultListingCap);

struct SignedWalks {
    std::vector<WalkRecord> walks;
    BigInt signed_count;  // sum of the record signs
};

SignedWalks signed_super_walks(const Graph& g, int from, int to, int length,
                               int listing_cap = kDefaultListingCap);
SignedWalks signed_edge_super_walks(const Graph& g, int from, int to, int length,
                                    int listing_cap = kDefaultListingCap);

// Count-only routes: iterate the step relation on a coefficient vector
// instead of materializing walks. No listing cap; cost is polynomial in the
// graph size and the length.
std::vector<BigInt> walk_counts_from(const Graph& g, int from, int length);
std::vector<BigInt> super_walk_signed_counts_from(const Graph& g, int from, int length);
std::vector<BigInt> edge_super_walk_signed_counts_from(const Graph& g, int from, int length);

BigInt walk_count(const Graph& g, int from, int to, int length);
BigInt super_walk_signed_count(const Graph& g, int from, int to, int length);
BigInt edge_super_walk_signed_count(const Graph& g, int from, int to, int length);

}  // namespace superwalk
