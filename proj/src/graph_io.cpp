#include "superwalk/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace superwalk {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back(Token{std::string(line.substr(start, i - start)),
                               static_cast<int>(start) + 1});
    }
    return tokens;
}

struct SourcePos {
    int line = 0;
    int column = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> declared;
    std::vector<SourcePos> declared_pos;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<SourcePos> pair_pos;

    int line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t end = text.find('\n', offset);
        std::string_view line = text.substr(
            offset, end == std::string_view::npos ? std::string_view::npos : end - offset);
        ++line_no;

        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) {
            // blank or comment-only
        } else if (tokens[0].text == "vertex") {
            if (tokens.size() != 2) {
                throw ParseError(line_no, tokens[0].column,
                                 "'vertex' takes exactly one label");
            }
            declared.push_back(tokens[1].text);
            declared_pos.push_back({line_no, tokens[1].column});
        } else if (tokens.size() == 2) {
            pairs.emplace_back(tokens[0].text, tokens[1].text);
            pair_pos.push_back({line_no, tokens[0].column});
        } else {
            throw ParseError(line_no, tokens[0].column,
                             "expected 'vertex <label>' or '<tail> <head>', got " +
                                 std::to_string(tokens.size()) + " token(s)");
        }

        if (end == std::string_view::npos) {
            break;
        }
        offset = end + 1;
    }

    std::vector<std::string> vertices = declared;
    if (declared.empty()) {
        // First-appearance order.
        for (const auto& [tail, head] : pairs) {
            for (const std::string& label : {tail, head}) {
                if (std::find(vertices.begin(), vertices.end(), label) == vertices.end()) {
                    vertices.push_back(label);
                }
            }
        }
    }
    if (vertices.empty()) {
        throw ParseError(0, 0, "empty graph: at least one vertex required");
    }

    try {
        return Graph(std::move(vertices), pairs);
    } catch (const GraphError& e) {
        SourcePos pos{0, 0};
        if (e.item() >= 0) {
            if (e.code() == GraphError::Code::DuplicateVertex && !declared_pos.empty()) {
                pos = declared_pos[static_cast<std::size_t>(e.item())];
            } else if (e.item() < static_cast<int>(pair_pos.size())) {
                pos = pair_pos[static_cast<std::size_t>(e.item())];
            }
        }
        throw ParseError(pos.line, pos.column, e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    std::string out;
    for (const std::string& label : g.vertex_labels()) {
        out += "vertex " + label + "\n";
    }
    for (const OrientedEdge& e : g.edges()) {
        out += g.vertex_label(e.tail) + " " + g.vertex_label(e.head) + "\n";
    }
    return out;
}

Graph parse_json_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw JsonError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
        throw JsonError("graph JSON needs 'vertices' and 'edges' keys");
    }
    try {
        std::vector<std::string> vertices = doc.at("vertices").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& item : doc.at("edges")) {
            if (!item.is_array() || item.size() != 2) {
                throw JsonError("each edge must be a [tail, head] pair");
            }
            pairs.emplace_back(item.at(0).get<std::string>(), item.at(1).get<std::string>());
        }
        return Graph(std::move(vertices), pairs);
    } catch (const nlohmann::json::exception& e) {
        throw JsonError(std::string("malformed graph JSON: ") + e.what());
    }
}

std::string write_json_graph(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = g.vertex_labels();
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const OrientedEdge& e : g.edges()) {
        edges.push_back({g.vertex_label(e.tail), g.vertex_label(e.head)});
    }
    return doc.dump();
}

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

std::string write_matrix_csv(const IntMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += m(r, c).str();
        }
        out += '\n';
    }
    return out;
}

std::string write_matrix_csv(const FloatMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += format_double(m(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string write_matrix_json(const IntMatrix& m) {
    nlohmann::ordered_json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    auto& entries = doc["entries"] = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c).str());
        }
        entries.push_back(std::move(row));
    }
    return doc.dump();
}

std::string write_matrix_json(const FloatMatrix& m) {
    nlohmann::ordered_json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    auto& entries = doc["entries"] = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c));
        }
        entries.push_back(std::move(row));
    }
    return doc.dump();
}

IntMatrix parse_int_matrix_csv(std::string_view text) {
    std::vector<std::vector<BigInt>> rows;
    int line_no = 0;
    std::size_t offset = 0;
    while (offset < text.size()) {
        std::size_t end = text.find('\n', offset);
        std::string_view line = text.substr(
            offset, end == std::string_view::npos ? std::string_view::npos : end - offset);
        ++line_no;
        offset = end == std::string_view::npos ? text.size() : end + 1;

        if (line.empty()) {
            continue;
        }
        std::vector<BigInt> row;
        std::size_t cell_start = 0;
        while (cell_start <= line.size()) {
            std::size_t comma = line.find(',', cell_start);
            std::string_view cell = line.substr(
                cell_start, comma == std::string_view::npos ? std::string_view::npos
                                                            : comma - cell_start);
            std::size_t a = cell.find_first_not_of(" \t\r");
            std::size_t b = cell.find_last_not_of(" \t\r");
            if (a == std::string_view::npos) {
                throw ParseError(line_no, static_cast<int>(cell_start) + 1, "empty cell");
            }
            try {
                row.emplace_back(std::string(cell.substr(a, b - a + 1)));
            } catch (const std::exception&) {
                throw ParseError(line_no, static_cast<int>(cell_start) + 1,
                                 "not an integer: '" + std::string(cell) + "'");
            }
            if (comma == std::string_view::npos) {
                break;
            }
            cell_start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(line_no, 1, "ragged row: expected " +
                                             std::to_string(rows.front().size()) + " entries");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(0, 0, "empty matrix document");
    }
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            m(r, c) = std::move(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

IntMatrix parse_int_matrix_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw JsonError(std::string("invalid JSON: ") + e.what());
    }
    try {
        int rows = doc.at("rows").get<int>();
        int cols = doc.at("cols").get<int>();
        const auto& entries = doc.at("entries");
        if (rows < 0 || cols < 0 || static_cast<int>(entries.size()) != rows) {
            throw JsonError("entry grid does not match the declared shape");
        }
        IntMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            const auto& row = entries.at(static_cast<std::size_t>(r));
            if (static_cast<int>(row.size()) != cols) {
                throw JsonError("entry grid does not match the declared shape");
            }
            for (int c = 0; c < cols; ++c) {
                const auto& cell = row.at(static_cast<std::size_t>(c));
                if (cell.is_string()) {
                    m(r, c) = BigInt(cell.get<std::string>());
                } else if (cell.is_number_integer()) {
                    m(r, c) = BigInt(cell.get<long long>());
                } else {
                    throw JsonError("matrix entries must be decimal strings or integers");
                }
            }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw JsonError(std::string("malformed matrix JSON: ") + e.what());
    }
}

std::string walk_record_json(const Graph& g, const WalkRecord& record) {
    const bool on_edges = record.kind == WalkKind::EdgeSuper;
    auto position_label = [&](int id) {
        return on_edges ? g.edge(id).label : g.vertex_label(id);
    };
    auto via_label = [&](int id) {
        return on_edges ? g.vertex_label(id) : g.edge(id).label;
    };

    nlohmann::ordered_json doc;
    doc["kind"] = to_string(record.kind);
    doc["start"] = position_label(record.start);
    auto& steps = doc["steps"] = nlohmann::ordered_json::array();
    for (const Step& s : record.steps) {
        steps.push_back({{"via", via_label(s.via)}, {"to", position_label(s.to)}, {"sign", s.sign}});
    }
    doc["sign"] = record.sign;
    return doc.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph load_graph_file(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        return parse_json_graph(text);
    }
    return parse_edge_list(text);
}

}  // namespace superwalk
