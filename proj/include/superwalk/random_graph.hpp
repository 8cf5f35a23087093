#pragma once

#include <cstdint>
#include <string>

#include "superwalk/graph.hpp"

namespace superwalk {

/// Edge-list document for a seeded Erdos-Renyi simple graph on vertices
/// v1..vn with each edge orientation chosen uniformly. The same
/// (vertices, edge_prob, seed) always yields byte-identical output: the
/// generator consumes a mt19937_64 stream directly and never goes through
/// implementation-defined distributions.
std::string random_edge_list(int vertices, double edge_prob, std::uint64_t seed);

/// The parsed form of random_edge_list with identical arguments.
Graph random_graph(int vertices, double edge_prob, std::uint64_t seed);

}  // namespace superwalk
