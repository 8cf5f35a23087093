#include "superwalk/graph.hpp"

#include <algorithm>
#include <set>

namespace superwalk {

Graph::Graph(std::vector<std::string> vertex_labels,
             const std::vector<std::pair<std::string, std::string>>& edge_pairs)
    : vertex_labels_(std::move(vertex_labels)) {
    if (vertex_labels_.empty()) {
        throw GraphError(GraphError::Code::EmptyGraph, "graph needs at least one vertex");
    }
    for (int v = 0; v < vertex_count(); ++v) {
        auto [it, inserted] = vertex_by_label_.emplace(vertex_labels_[static_cast<std::size_t>(v)], v);
        if (!inserted) {
            throw GraphError(GraphError::Code::DuplicateVertex,
                             "duplicate vertex '" + vertex_labels_[static_cast<std::size_t>(v)] + "'", v);
        }
    }

    incidence_.resize(vertex_labels_.size());
    std::set<std::pair<int, int>> seen;  // unordered endpoint pairs, stored sorted
    edges_.reserve(edge_pairs.size());
    for (int e = 0; e < static_cast<int>(edge_pairs.size()); ++e) {
        const auto& [tail_label, head_label] = edge_pairs[static_cast<std::size_t>(e)];
        auto tail_it = vertex_by_label_.find(tail_label);
        if (tail_it == vertex_by_label_.end()) {
            throw GraphError(GraphError::Code::UnknownVertex,
                             "edge references unknown vertex '" + tail_label + "'", e);
        }
        auto head_it = vertex_by_label_.find(head_label);
        if (head_it == vertex_by_label_.end()) {
            throw GraphError(GraphError::Code::UnknownVertex,
                             "edge references unknown vertex '" + head_label + "'", e);
        }
        int tail = tail_it->second;
        int head = head_it->second;
        if (tail == head) {
            throw GraphError(GraphError::Code::SelfLoop,
                             "self-loop at vertex '" + tail_label + "'", e);
        }
        if (!seen.insert(std::minmax(tail, head)).second) {
            throw GraphError(GraphError::Code::ParallelEdge,
                             "parallel edge between '" + tail_label + "' and '" + head_label + "'", e);
        }
        std::string label = "e" + std::to_string(e + 1);
        edge_by_label_.emplace(label, e);
        edges_.push_back(OrientedEdge{std::move(label), tail, head});
        incidence_[static_cast<std::size_t>(tail)].push_back(e);
        incidence_[static_cast<std::size_t>(head)].push_back(e);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    }
}

void Graph::check_edge(int e) const {
    if (e < 0 || e >= edge_count()) {
        throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
    }
}

const std::string& Graph::vertex_label(int v) const {
    check_vertex(v);
    return vertex_labels_[static_cast<std::size_t>(v)];
}

const OrientedEdge& Graph::edge(int e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e)];
}

int Graph::find_vertex(std::string_view label) const {
    auto it = vertex_by_label_.find(std::string(label));
    return it == vertex_by_label_.end() ? -1 : it->second;
}

int Graph::find_edge(std::string_view label) const {
    auto it = edge_by_label_.find(std::string(label));
    return it == edge_by_label_.end() ? -1 : it->second;
}

int Graph::vertex_index(std::string_view label) const {
    int v = find_vertex(label);
    if (v < 0) {
        throw GraphError(GraphError::Code::UnknownVertex,
                         "unknown vertex '" + std::string(label) + "'");
    }
    return v;
}

int Graph::edge_index(std::string_view label) const {
    int e = find_edge(label);
    if (e < 0) {
        throw GraphError(GraphError::Code::UnknownEdge,
                         "unknown edge '" + std::string(label) + "'");
    }
    return e;
}

const std::vector<int>& Graph::incident_edges(int v) const {
    check_vertex(v);
    return incidence_[static_cast<std::size_t>(v)];
}

int Graph::valence(int v) const {
    return static_cast<int>(incident_edges(v).size());
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(v);
    for (int e : incident_edges(u)) {
        if (opposite(e, u) == v) {
            return true;
        }
    }
    return false;
}

int Graph::opposite(int e, int v) const {
    const OrientedEdge& ed = edge(e);
    if (ed.tail == v) {
        return ed.head;
    }
    if (ed.head == v) {
        return ed.tail;
    }
    throw GraphError(GraphError::Code::NotIncident,
                     "vertex '" + vertex_label(v) + "' is not an endpoint of '" + ed.label + "'");
}

int Graph::incidence_sign(int v, int e) const {
    check_vertex(v);
    const OrientedEdge& ed = edge(e);
    if (ed.tail == v) {
        return -1;
    }
    if (ed.head == v) {
        return +1;
    }
    throw GraphError(GraphError::Code::NotIncident,
                     "vertex '" + vertex_label(v) + "' is not an endpoint of '" + ed.label + "'");
}

Graph Graph::flipped(int e) const {
    check_edge(e);
    Graph copy = *this;
    std::swap(copy.edges_[static_cast<std::size_t>(e)].tail,
              copy.edges_[static_cast<std::size_t>(e)].head);
    return copy;
}

std::string Graph::summary() const {
    return std::to_string(vertex_count()) + " vertices, " + std::to_string(edge_count()) + " edges";
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.vertex_count(), g.vertex_count());
    for (const OrientedEdge& e : g.edges()) {
        a(e.tail, e.head) = 1;
        a(e.head, e.tail) = 1;
    }
    return a;
}

IntMatrix incidence_matrix(const Graph& g) {
    IntMatrix inc(g.vertex_count(), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        inc(g.edge(e).tail, e) = -1;
        inc(g.edge(e).head, e) = +1;
    }
    return inc;
}

IntMatrix even_laplacian(const Graph& g) {
    IntMatrix inc = incidence_matrix(g);
    IntMatrix lap = inc * inc.transpose();

    IntMatrix entrywise = adjacency_matrix(g);
    for (int r = 0; r < entrywise.rows(); ++r) {
        for (int c = 0; c < entrywise.cols(); ++c) {
            entrywise(r, c) = -entrywise(r, c);
        }
        entrywise(r, r) = g.valence(r);
    }
    if (lap != entrywise) {
        throw std::logic_error("even Laplacian constructions disagree");
    }
    return lap;
}

IntMatrix odd_laplacian(const Graph& g) {
    IntMatrix inc = incidence_matrix(g);
    return inc.transpose() * inc;
}

}  // namespace superwalk
