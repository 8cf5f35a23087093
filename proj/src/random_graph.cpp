#include "superwalk/random_graph.hpp"

#include <random>
#include <stdexcept>

#include "superwalk/graph_io.hpp"

namespace superwalk {

std::string random_edge_list(int vertices, double edge_prob, std::uint64_t seed) {
    if (vertices < 1) {
        throw std::out_of_range("need at least one vertex");
    }
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
        throw std::out_of_range("edge probability must be in [0, 1]");
    }

    std::mt19937_64 rng(seed);
    auto next_unit = [&rng]() {
        // 53 uniform bits in [0, 1); mt19937_64 output is fully specified,
        // unlike std::uniform_real_distribution.
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    std::string out;
    for (int v = 1; v <= vertices; ++v) {
        out += "vertex v" + std::to_string(v) + "\n";
    }
    for (int i = 1; i <= vertices; ++i) {
        for (int j = i + 1; j <= vertices; ++j) {
            if (next_unit() < edge_prob) {
                bool reversed = (rng() & 1u) != 0;
                int tail = reversed ? j : i;
                int head = reversed ? i : j;
                out += "v" + std::to_string(tail) + " v" + std::to_string(head) + "\n";
            }
        }
    }
    return out;
}

Graph random_graph(int vertices, double edge_prob, std::uint64_t seed) {
    return parse_edge_list(random_edge_list(vertices, edge_prob, seed));
}

}  // namespace superwalk
