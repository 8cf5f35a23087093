// Acceptance suite: every check prints one PASS/FAIL line; the process exits
// with the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "superwalk/counting.hpp"
#include "superwalk/graph.hpp"
#include "superwalk/graph_io.hpp"
#include "superwalk/random_graph.hpp"
#include "superwalk/spectral.hpp"
#include "superwalk/walk_oracle.hpp"
#include "test_graphs.hpp"

using namespace superwalk;
using namespace superwalk::testgraphs;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int number, const std::string& name, bool ok, double seconds) {
    std::printf("criterion %d [%s]: %s (%.3f s)\n", number, name.c_str(),
                ok ? "PASS" : "FAIL", seconds);
    if (!ok) {
        ++failures;
    }
}

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool()>& body) {
    Timer timer;
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("criterion %d threw: %s\n", number, e.what());
        ok = false;
    }
    double elapsed = timer.seconds();
    if (budget_seconds > 0 && elapsed >= budget_seconds) {
        std::printf("criterion %d exceeded its %.0f s budget\n", number, budget_seconds);
        ok = false;
    }
    report(number, name, ok, elapsed);
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string command = std::string(SUPERWALK_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    CliResult result;
    if (pipe == nullptr) {
        return result;
    }
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

Graph seeded_graph(std::uint64_t seed) {
    int n = 2 + static_cast<int>(seed % 6);  // |V| in 2..7
    double p = 0.15 + 0.1 * static_cast<double>(seed % 8);
    return random_graph(n, p, seed);
}

}  // namespace

int main() {
    const std::string fixture = std::string(SUPERWALK_DATA_DIR) + "/two_triangles.graph";
    Graph worked = load_graph_file(fixture);

    // 1. Squared even Laplacian against the enumerated signed super-walks
    //    v1 -> v2 of length 2: the five known walks, four negative and one
    //    positive, summing to -3.
    criterion(1, "even-Laplacian square equals signed super-walk sum", 1.0, [&] {
        IntMatrix squared = super_walk_matrix(worked, 2);
        SignedWalks oracle = signed_super_walks(worked, worked.vertex_index("v1"),
                                                worked.vertex_index("v2"), 2);
        std::vector<WalkRecord> expected{
            {WalkKind::Super, 0, {{0, 1, -1}, {0, 1, +1}}, -1},
            {WalkKind::Super, 0, {{0, 1, -1}, {2, 1, +1}}, -1},
            {WalkKind::Super, 0, {{0, 0, +1}, {0, 1, -1}}, -1},
            {WalkKind::Super, 0, {{1, 3, -1}, {2, 1, -1}}, +1},
            {WalkKind::Super, 0, {{1, 0, +1}, {0, 1, -1}}, -1},
        };
        return squared(0, 1) == -3 && oracle.signed_count == -3 && oracle.walks == expected;
    });

    // 2. Squared odd Laplacian against the enumerated edge super-walks
    //    e1 -> e2 of length 2 (four positive, one negative, sum 3), plus the
    //    all-2 diagonal at length 1.
    criterion(2, "odd-Laplacian square equals signed edge super-walk sum", 1.0, [&] {
        IntMatrix squared = edge_super_walk_matrix(worked, 2);
        SignedWalks oracle = signed_edge_super_walks(worked, 0, 1, 2);
        std::vector<WalkRecord> expected{
            {WalkKind::EdgeSuper, 0, {{0, 0, +1}, {0, 1, +1}}, +1},
            {WalkKind::EdgeSuper, 0, {{0, 1, +1}, {0, 1, +1}}, +1},
            {WalkKind::EdgeSuper, 0, {{0, 1, +1}, {3, 1, +1}}, +1},
            {WalkKind::EdgeSuper, 0, {{1, 0, +1}, {0, 1, +1}}, +1},
            {WalkKind::EdgeSuper, 0, {{1, 2, -1}, {3, 1, +1}}, -1},
        };
        IntMatrix one = edge_super_walk_matrix(worked, 1);
        for (int e = 0; e < worked.edge_count(); ++e) {
            if (one(e, e) != 2) {
                return false;
            }
        }
        return squared(0, 1) == 3 && oracle.signed_count == 3 && oracle.walks == expected;
    });

    // 3. Fifth adjacency power against the walk enumeration v1 -> v6; the
    //    listing must contain both displayed length-5 routes.
    criterion(3, "adjacency power equals the walk count", 1.0, [&] {
        IntMatrix fifth = walk_count_matrix(worked, 5);
        std::vector<WalkRecord> walks =
            enumerate_walks(worked, worked.vertex_index("v1"), worked.vertex_index("v6"), 5);
        WalkRecord via_upper{WalkKind::Walk, 0,
                             {{0, 1, +1}, {2, 3, +1}, {3, 4, +1}, {6, 2, +1}, {5, 5, +1}},
                             +1};
        WalkRecord via_lower{WalkKind::Walk, 0,
                             {{1, 3, +1}, {3, 4, +1}, {4, 5, +1}, {5, 2, +1}, {5, 5, +1}},
                             +1};
        return fifth(0, 5) == BigInt(walks.size()) &&
               std::find(walks.begin(), walks.end(), via_upper) != walks.end() &&
               std::find(walks.begin(), walks.end(), via_lower) != walks.end();
    });

    // 4. Exhaustive desk-scale verification: golden set plus 200 seeded
    //    random simple graphs, all three matrix routes against the oracle for
    //    every entry and every length up to 4.
    criterion(4, "entrywise verification over golden and random graphs", 60.0, [&] {
        for (const Graph& g : golden_set()) {
            if (!verify(g, 4).pass()) {
                return false;
            }
        }
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            if (!verify(seeded_graph(seed), 4).pass()) {
                return false;
            }
        }
        return true;
    });

    // 5. Orientation laws under single-edge flips.
    criterion(5, "flip invariance and conjugation laws", 0, [&] {
        std::vector<Graph> graphs{worked};
        for (std::uint64_t seed = 1000; seed < 1020; ++seed) {
            graphs.push_back(seeded_graph(seed));
        }
        for (const Graph& g : graphs) {
            IntMatrix even = even_laplacian(g);
            for (int flip = 0; flip < g.edge_count(); ++flip) {
                Graph h = g.flipped(flip);
                if (even_laplacian(h) != even) {
                    return false;
                }
                for (int k = 1; k <= 4; ++k) {
                    IntMatrix conjugated = edge_super_walk_matrix(g, k);
                    for (int i = 0; i < g.edge_count(); ++i) {
                        for (int j = 0; j < g.edge_count(); ++j) {
                            int sign = (i == flip ? -1 : 1) * (j == flip ? -1 : 1);
                            conjugated(i, j) *= sign;
                        }
                    }
                    if (edge_super_walk_matrix(h, k) != conjugated) {
                        return false;
                    }
                }
            }
        }
        return true;
    });

    // 6. Matrix-engine properties: squaring-based powers match naive
    //    powering, and an entry far beyond 64 bits survives both wire
    //    formats byte-exactly.
    criterion(6, "exact powering and beyond-64-bit round trips", 0, [&] {
        std::mt19937_64 rng(99);
        for (int round = 0; round < 30; ++round) {
            int dim = 1 + static_cast<int>(rng() % 6);
            IntMatrix m(dim, dim);
            for (int r = 0; r < dim; ++r) {
                for (int c = 0; c < dim; ++c) {
                    m(r, c) = static_cast<long long>(rng() % 19) - 9;
                }
            }
            IntMatrix naive = IntMatrix::identity(dim);
            for (unsigned k = 0; k <= 8; ++k) {
                if (pow(m, k) != naive) {
                    return false;
                }
                naive = naive * m;
            }
        }

        IntMatrix big = pow(even_laplacian(k4()), 40);
        BigInt limit = pow(BigInt(2), 64);
        return big.max_abs_entry() > limit &&
               parse_int_matrix_csv(write_matrix_csv(big)) == big &&
               parse_int_matrix_json(write_matrix_json(big)) == big;
    });

    // 7. Spectral identities at the pinned tolerances.
    criterion(7, "supertrace, semigroup, and derivative checks", 0, [&] {
        for (const Graph& g : golden_set()) {
            double expected = g.vertex_count() - g.edge_count();
            for (double t : {0.0, 0.1, 0.25, 0.5, 1.0, 2.0}) {
                if (std::abs(supertrace(g, t, 1e-12) - expected) > 1e-9) {
                    return false;
                }
            }
            for (const IntMatrix& lap : {even_laplacian(g), odd_laplacian(g)}) {
                if (lap.rows() == 0) {
                    continue;
                }
                FloatMatrix a = matrix_exponential(lap, 0.7, 1e-13).matrix;
                FloatMatrix b = matrix_exponential(lap, 0.6, 1e-13).matrix;
                FloatMatrix c = matrix_exponential(lap, 1.3, 1e-13).matrix;
                if (max_abs_diff(a * b, c) > 1e-10) {
                    return false;
                }
                const double h = 1e-5;
                FloatMatrix generator = to_float(lap);
                for (double t : {0.1, 0.5, 1.0}) {
                    FloatMatrix ahead = matrix_exponential(lap, t + h, 1e-13).matrix;
                    FloatMatrix here = matrix_exponential(lap, t, 1e-13).matrix;
                    FloatMatrix drift = generator * here;
                    for (int r = 0; r < here.rows(); ++r) {
                        for (int cidx = 0; cidx < here.cols(); ++cidx) {
                            double fd = (ahead(r, cidx) - here(r, cidx)) / h;
                            if (std::abs(fd + drift(r, cidx)) > 1e-4) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        return true;
    });

    // 8. Sign-rule regression: e1 -> e2 through the shared start vertex is
    //    positive (both edges carry the same incidence sign there). The
    //    tempting all-moves-are-negative convention is ruled out by the
    //    matrix entry (+1) and the length-2 sum (3).
    criterion(8, "sign-rule regression for the shared-start step", 0, [&] {
        bool found = false;
        for (const EdgeSuperStep& s : edge_super_steps(worked, 0)) {
            if (s.destination == 1) {
                found = s.via_vertex == worked.vertex_index("v1") && s.sign == +1;
            }
        }
        return found && odd_laplacian(worked)(0, 1) == 1 &&
               signed_edge_super_walks(worked, 0, 1, 2).signed_count == 3;
    });

    // 9. CLI contract: the dual-route counts agree and the deliberately
    //    corrupted verification exits through the falsification channel.
    criterion(9, "CLI dual-route agreement and falsification channel", 0, [&] {
        CliResult super_count =
            run_cli("count super --graph " + fixture + " --from v1 --to v2 --length 2 --method both");
        CliResult edge_count = run_cli("count edge-super --graph " + fixture +
                                       " --from e1 --to e2 --length 2 --method both");
        CliResult walk_count =
            run_cli("count walks --graph " + fixture + " --from v1 --to v6 --length 5 --method both");
        CliResult faulted = run_cli("verify --graph " + fixture + " --max-length 3 --inject-fault");
        return super_count.exit_code == 0 && contains(super_count.output, "matrix: -3, oracle: -3") &&
               edge_count.exit_code == 0 && contains(edge_count.output, "matrix: 3, oracle: 3") &&
               walk_count.exit_code == 0 && contains(walk_count.output, "matrix: 8, oracle: 8") &&
               faulted.exit_code == 4;
    });

    if (failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", failures);
    }
    return failures;
}
