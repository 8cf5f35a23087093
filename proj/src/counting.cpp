#include "superwalk/counting.hpp"

#include <json.hpp>

#include "superwalk/walk_oracle.hpp"

namespace superwalk {

IntMatrix walk_count_matrix(const Graph& g, int k) {
    return pow(adjacency_matrix(g), static_cast<unsigned>(k));
}

IntMatrix super_walk_matrix(const Graph& g, int k) {
    return pow(even_laplacian(g), static_cast<unsigned>(k));
}

IntMatrix edge_super_walk_matrix(const Graph& g, int k) {
    return pow(odd_laplacian(g), static_cast<unsigned>(k));
}

std::string VerificationReport::to_text() const {
    auto line = [](const std::string& name, bool ok) {
        return name + ": " + (ok ? "pass" : "FAIL") + "\n";
    };
    std::string out = "graph: " + graph_summary + ", lengths 1.." + std::to_string(max_length) + "\n";
    out += line("walk-count", walk_pass);
    out += line("super-walk", super_pass);
    out += line("edge-super-walk", edge_super_pass);
    if (first_mismatch) {
        const Mismatch& m = *first_mismatch;
        out += "first mismatch: " + m.check + " length " + std::to_string(m.length) +
               " entry (" + m.from + ", " + m.to + "): matrix " + m.matrix_value.str() +
               ", oracle " + m.oracle_value.str() + "\n";
    }
    return out;
}

std::string VerificationReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["graph"] = graph_summary;
    j["max_length"] = max_length;
    j["checks"] = {{"walk-count", walk_pass},
                   {"super-walk", super_pass},
                   {"edge-super-walk", edge_super_pass}};
    j["pass"] = pass();
    if (first_mismatch) {
        const Mismatch& m = *first_mismatch;
        j["first_mismatch"] = {{"check", m.check},
                               {"length", m.length},
                               {"from", m.from},
                               {"to", m.to},
                               {"matrix", m.matrix_value.str()},
                               {"oracle", m.oracle_value.str()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    return j.dump();
}

VerificationReport verify(const Graph& g, int max_length, const VerifyOptions& options) {
    if (max_length < 1) {
        throw std::out_of_range("verification needs max_length >= 1");
    }

    VerificationReport report;
    report.graph_summary = g.summary();
    report.max_length = max_length;
    report.walk_pass = true;
    report.super_pass = true;
    report.edge_super_pass = true;

    IntMatrix adjacency = adjacency_matrix(g);
    IntMatrix even = even_laplacian(g);
    IntMatrix odd = odd_laplacian(g);
    if (options.inject_fault && odd.rows() > 0) {
        odd(0, 0) += 1;
    }

    auto record = [&](bool& flag, const std::string& check, int k, int i, int j,
                      const BigInt& matrix_value, const BigInt& oracle_value) {
        if (matrix_value == oracle_value) {
            return;
        }
        flag = false;
        if (!report.first_mismatch) {
            const bool on_edges = check == "edge-super-walk";
            report.first_mismatch =
                Mismatch{check, k, on_edges ? g.edge(i).label : g.vertex_label(i),
                         on_edges ? g.edge(j).label : g.vertex_label(j), matrix_value,
                         oracle_value};
        }
    };

    for (int k = 1; k <= max_length; ++k) {
        IntMatrix ak = pow(adjacency, static_cast<unsigned>(k));
        IntMatrix evk = pow(even, static_cast<unsigned>(k));
        IntMatrix odk = pow(odd, static_cast<unsigned>(k));

        for (int i = 0; i < g.vertex_count(); ++i) {
            std::vector<BigInt> walks = walk_counts_from(g, i, k);
            std::vector<BigInt> supers = super_walk_signed_counts_from(g, i, k);
            for (int j = 0; j < g.vertex_count(); ++j) {
                record(report.walk_pass, "walk-count", k, i, j, ak(i, j),
                       walks[static_cast<std::size_t>(j)]);
                record(report.super_pass, "super-walk", k, i, j, evk(i, j),
                       supers[static_cast<std::size_t>(j)]);
            }
        }
        for (int i = 0; i < g.edge_count(); ++i) {
            std::vector<BigInt> edge_supers = edge_super_walk_signed_counts_from(g, i, k);
            for (int j = 0; j < g.edge_count(); ++j) {
                record(report.edge_super_pass, "edge-super-walk", k, i, j, odk(i, j),
                       edge_supers[static_cast<std::size_t>(j)]);
            }
        }
    }
    return report;
}

}  // namespace superwalk
