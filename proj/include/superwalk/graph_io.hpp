#pragma once

#include <string>
#include <string_view>

#include "superwalk/graph.hpp"
#include "superwalk/int_matrix.hpp"
#include "superwalk/spectral.hpp"
#include "superwalk/walk_oracle.hpp"

namespace superwalk {

/// Syntax or attributed validation failure in a text document. Lines and
/// columns are 1-based; line 0 refers to the document as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                            std::to_string(column) + ": " + message
                                      : message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class JsonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list format, one item per line:
///   # comment until end of line
///   vertex <label>      optional declaration; declaration order fixes
///                       vertex order
///   <tail> <head>       oriented edge, in line order
/// Labels are non-whitespace tokens. When any vertex is declared, every edge
/// endpoint must be declared; with no declarations, vertices are numbered in
/// first-appearance order. Validation failures carry the offending line.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// {"vertices": ["a", ...], "edges": [["tail", "head"], ...]}
Graph parse_json_graph(std::string_view text);
std::string write_json_graph(const Graph& g);

// Matrix serialization. CSV is one row per line with decimal entries; JSON is
// {"rows": r, "cols": c, "entries": [[...]]}. Integer entries are written as
// decimal strings in JSON so values beyond 53 bits survive any consumer.
std::string write_matrix_csv(const IntMatrix& m);
std::string write_matrix_csv(const FloatMatrix& m);
std::string write_matrix_json(const IntMatrix& m);
std::string write_matrix_json(const FloatMatrix& m);
IntMatrix parse_int_matrix_csv(std::string_view text);
IntMatrix parse_int_matrix_json(std::string_view text);

/// One walk record as a single JSON line, ids rendered as labels:
/// {"kind": ..., "start": ..., "steps": [{"via", "to", "sign"}...], "sign": ...}
std::string walk_record_json(const Graph& g, const WalkRecord& record);

/// Shortest representation of a double that parses back exactly;
/// locale-independent.
std::string format_double(double value);

std::string read_text_file(const std::string& path);

/// Reads a graph file, dispatching on extension: ".json" uses the JSON
/// format, anything else the edge-list format.
Graph load_graph_file(const std::string& path);

}  // namespace superwalk
