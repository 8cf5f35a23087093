#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superwalk/int_matrix.hpp"

namespace superwalk {

class GraphError : public std::runtime_error {
public:
    enum class Code {
        DuplicateVertex,
        UnknownVertex,
        SelfLoop,
        ParallelEdge,
        NotIncident,
        UnknownEdge,
        EmptyGraph,
    };

    /// `item` is the position of the offending vertex declaration or edge pair
    /// in the construction input, or -1 when not applicable. Parsers use it to
    /// attribute validation failures to source lines.
    GraphError(Code code, const std::string& what, int item = -1)
        : std::runtime_error(what), code_(code), item_(item) {}

    Code code() const { return code_; }
    int item() const { return item_; }

private:
    Code code_;
    int item_;
};

struct OrientedEdge {
    std::string label;  // "e1", "e2", ... in input order
    int tail = -1;      // the edge points tail -> head
    int head = -1;

    bool operator==(const OrientedEdge&) const = default;
};

/// Simple oriented graph: no self-loops, no parallel edges. Vertex and edge
/// order is the input order and fixes the row/column order of every matrix
/// derived from the graph. Immutable after construction, so values are safe
/// to share across threads.
class Graph {
public:
    Graph(std::vector<std::string> vertex_labels,
          const std::vector<std::pair<std::string, std::string>>& edge_pairs);

    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_label(int v) const;
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const OrientedEdge& edge(int e) const;
    const std::vector<OrientedEdge>& edges() const { return edges_; }

    /// Label lookup; the find_* forms return -1 when absent, the *_index
    /// forms throw UnknownVertex / UnknownEdge.
    int find_vertex(std::string_view label) const;
    int find_edge(std::string_view label) const;
    int vertex_index(std::string_view label) const;
    int edge_index(std::string_view label) const;

    /// Indices of edges incident to v, ascending.
    const std::vector<int>& incident_edges(int v) const;
    int valence(int v) const;
    bool adjacent(int u, int v) const;

    /// The endpoint of e other than v.
    int opposite(int e, int v) const;

    /// Incidence sign of vertex v in edge e: -1 when e starts at v, +1 when
    /// e ends at v. Throws NotIncident otherwise.
    int incidence_sign(int v, int e) const;

    /// Copy of the graph with the orientation of edge e reversed.
    Graph flipped(int e) const;

    bool operator==(const Graph& other) const {
        return vertex_labels_ == other.vertex_labels_ && edges_ == other.edges_;
    }

    std::string summary() const;

private:
    void check_vertex(int v) const;
    void check_edge(int e) const;

    std::vector<std::string> vertex_labels_;
    std::vector<OrientedEdge> edges_;
    std::unordered_map<std::string, int> vertex_by_label_;
    std::unordered_map<std::string, int> edge_by_label_;
    std::vector<std::vector<int>> incidence_;  // per vertex, ascending edge indices
};

/// |V| x |V| symmetric 0/1 matrix with zero diagonal.
IntMatrix adjacency_matrix(const Graph& g);

/// |V| x |E| matrix with -1 at the tail and +1 at the head of each edge.
IntMatrix incidence_matrix(const Graph& g);

/// Vertex Laplacian I*I^t, equal to diag(valence) - adjacency. Both
/// constructions are computed and cross-checked. Orientation-independent.
IntMatrix even_laplacian(const Graph& g);

/// Edge Laplacian I^t*I. Diagonal is 2 everywhere; an off-diagonal entry is
/// +-1 when the two edges share a vertex (sign from the incidence signs at
/// the shared vertex), 0 otherwise. Depends on the orientation.
IntMatrix odd_laplacian(const Graph& g);

}  // namespace superwalk
