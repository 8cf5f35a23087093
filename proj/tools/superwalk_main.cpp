#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "superwalk/counting.hpp"
#include "superwalk/graph.hpp"
#include "superwalk/graph_io.hpp"
#include "superwalk/int_matrix.hpp"
#include "superwalk/random_graph.hpp"
#include "superwalk/spectral.hpp"
#include "superwalk/walk_oracle.hpp"

namespace {

using namespace superwalk;

// Exit contract: 0 success, 2 input error, 3 parameter error, 4 falsification.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitParameter = 3;
constexpr int kExitMismatch = 4;

int listing_cap() {
    if (const char* value = std::getenv("SUPERWALK_ENUM_CAP")) {
        int cap = 0;
        auto [ptr, ec] = std::from_chars(value, value + std::string_view(value).size(), cap);
        if (ec != std::errc{} || *ptr != '\0' || cap < 0) {
            throw std::out_of_range("SUPERWALK_ENUM_CAP must be a nonnegative integer");
        }
        return cap;
    }
    return kDefaultListingCap;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + out_path + "'");
    }
    out << payload;
}

std::optional<Graph> load_graph(const std::string& path) {
    try {
        return load_graph_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::nullopt;
    }
}

struct MatrixArgs {
    std::string graph_path;
    std::string kind;
    int power = 1;
    std::string format = "csv";
    std::string out;
};

int run_matrix(const CLI::App& cmd, const MatrixArgs& args) {
    auto graph = load_graph(args.graph_path);
    if (!graph) {
        return kExitInput;
    }
    if (args.kind == "incidence" && cmd.count("--power") > 0 && args.power != 1) {
        std::cerr << "error: the incidence matrix is not square; --power does not apply\n";
        return kExitParameter;
    }

    IntMatrix m;
    if (args.kind == "adjacency") {
        m = adjacency_matrix(*graph);
    } else if (args.kind == "incidence") {
        m = incidence_matrix(*graph);
    } else if (args.kind == "even-laplacian") {
        m = even_laplacian(*graph);
    } else {
        m = odd_laplacian(*graph);
    }
    if (args.kind != "incidence" && args.power != 1) {
        m = pow(m, static_cast<unsigned>(args.power));
    }
    emit(args.format == "json" ? write_matrix_json(m) : write_matrix_csv(m), args.out);
    return kExitOk;
}

struct CountArgs {
    std::string flavor;
    std::string graph_path;
    std::string from;
    std::string to;
    int length = 0;
    std::string method = "matrix";
    bool list = false;
    std::string format = "text";
    std::string out;
};

int run_count(const CountArgs& args) {
    auto graph = load_graph(args.graph_path);
    if (!graph) {
        return kExitInput;
    }
    const bool on_edges = args.flavor == "edge-super";
    int from = on_edges ? graph->find_edge(args.from) : graph->find_vertex(args.from);
    int to = on_edges ? graph->find_edge(args.to) : graph->find_vertex(args.to);
    if (from < 0 || to < 0) {
        std::cerr << "error: unknown " << (on_edges ? "edge" : "vertex") << " label '"
                  << (from < 0 ? args.from : args.to) << "'\n";
        return kExitParameter;
    }
    if (args.list && args.method == "matrix") {
        std::cerr << "error: --list needs --method enumerate or both\n";
        return kExitParameter;
    }

    const bool want_matrix = args.method != "enumerate";
    const bool want_oracle = args.method != "matrix";

    std::optional<BigInt> matrix_value;
    if (want_matrix) {
        IntMatrix power = args.flavor == "walks"  ? walk_count_matrix(*graph, args.length)
                          : args.flavor == "super" ? super_walk_matrix(*graph, args.length)
                                                    : edge_super_walk_matrix(*graph, args.length);
        matrix_value = power(from, to);
    }

    std::optional<BigInt> oracle_value;
    std::string listing;
    if (want_oracle) {
        if (args.list) {
            std::vector<WalkRecord> records;
            if (args.flavor == "walks") {
                records = enumerate_walks(*graph, from, to, args.length, listing_cap());
                oracle_value = BigInt(records.size());
            } else if (args.flavor == "super") {
                SignedWalks walks = signed_super_walks(*graph, from, to, args.length, listing_cap());
                oracle_value = walks.signed_count;
                records = std::move(walks.walks);
            } else {
                SignedWalks walks =
                    signed_edge_super_walks(*graph, from, to, args.length, listing_cap());
                oracle_value = walks.signed_count;
                records = std::move(walks.walks);
            }
            for (const WalkRecord& record : records) {
                listing += walk_record_json(*graph, record) + "\n";
            }
        } else {
            oracle_value = args.flavor == "walks"
                               ? walk_count(*graph, from, to, args.length)
                           : args.flavor == "super"
                               ? super_walk_signed_count(*graph, from, to, args.length)
                               : edge_super_walk_signed_count(*graph, from, to, args.length);
        }
    }

    std::string payload = listing;
    if (args.format == "json") {
        nlohmann::ordered_json j;
        j["flavor"] = args.flavor;
        j["from"] = args.from;
        j["to"] = args.to;
        j["length"] = args.length;
        if (matrix_value) {
            j["matrix"] = matrix_value->str();
        }
        if (oracle_value) {
            j["oracle"] = oracle_value->str();
        }
        payload += j.dump() + "\n";
    } else if (matrix_value && oracle_value) {
        payload += "matrix: " + matrix_value->str() + ", oracle: " + oracle_value->str() + "\n";
    } else {
        payload += (matrix_value ? *matrix_value : *oracle_value).str() + "\n";
    }
    emit(payload, args.out);

    if (matrix_value && oracle_value && *matrix_value != *oracle_value) {
        std::cerr << "error: matrix and oracle counts disagree\n";
        return kExitMismatch;
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string graph_path;
    int max_length = 4;
    bool flip_sweep = false;
    bool inject_fault = false;
    std::string format = "text";
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    auto graph = load_graph(args.graph_path);
    if (!graph) {
        return kExitInput;
    }
    VerifyOptions options;
    options.inject_fault = args.inject_fault;

    VerificationReport base = verify(*graph, args.max_length, options);
    bool all_pass = base.pass();

    std::vector<std::pair<std::string, VerificationReport>> flips;
    if (args.flip_sweep) {
        for (int e = 0; e < graph->edge_count(); ++e) {
            VerificationReport report = verify(graph->flipped(e), args.max_length, options);
            all_pass = all_pass && report.pass();
            flips.emplace_back(graph->edge(e).label, std::move(report));
        }
    }

    std::string payload;
    if (args.format == "json") {
        nlohmann::ordered_json j;
        j["base"] = nlohmann::ordered_json::parse(base.to_json_string());
        if (args.flip_sweep) {
            auto& sweep = j["flip_sweep"] = nlohmann::ordered_json::array();
            for (const auto& [label, report] : flips) {
                sweep.push_back({{"flipped_edge", label},
                                 {"report", nlohmann::ordered_json::parse(report.to_json_string())}});
            }
        }
        j["pass"] = all_pass;
        payload = j.dump() + "\n";
    } else {
        payload = base.to_text();
        for (const auto& [label, report] : flips) {
            payload += "flip " + label + ": " + (report.pass() ? "pass" : "FAIL") + "\n";
        }
        payload += std::string("overall: ") + (all_pass ? "pass" : "FAIL") + "\n";
    }
    emit(payload, args.out);
    return all_pass ? kExitOk : kExitMismatch;
}

struct HeatArgs {
    std::string graph_path;
    double t = 0.0;
    double tol = 1e-12;
    bool supertrace = false;
    std::string state_path;
    int order_cap = 200;
    std::string format = "csv";
    std::string out;
};

std::string kernel_comment(const char* name, const HeatKernel& kernel) {
    return std::string("# ") + name + ": t=" + format_double(kernel.time) +
           " truncation_order=" + std::to_string(kernel.truncation_order) +
           " remainder_bound=" + format_double(kernel.remainder_bound) + "\n";
}

nlohmann::ordered_json kernel_json(const HeatKernel& kernel) {
    nlohmann::ordered_json j;
    j["t"] = kernel.time;
    j["truncation_order"] = kernel.truncation_order;
    j["remainder_bound"] = kernel.remainder_bound;
    j["matrix"] = nlohmann::ordered_json::parse(write_matrix_json(kernel.matrix));
    return j;
}

int run_heat(const HeatArgs& args) {
    auto graph = load_graph(args.graph_path);
    if (!graph) {
        return kExitInput;
    }
    ExpOptions options;
    options.order_cap = args.order_cap;

    if (args.supertrace) {
        double value = supertrace(*graph, args.t, args.tol, options);
        emit(format_double(value) + "\n", args.out);
        return kExitOk;
    }

    SuperKernel kernel = super_heat_kernel(*graph, args.t, args.tol, options);
    if (!args.state_path.empty()) {
        std::string text;
        try {
            text = read_text_file(args.state_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInput;
        }
        std::vector<double> psi;
        std::size_t i = 0;
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
                   text[i] != ',') {
                ++i;
            }
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
            if (ec != std::errc{} || ptr != text.data() + i) {
                std::cerr << "error: state file entry '" << text.substr(start, i - start)
                          << "' is not a number\n";
                return kExitInput;
            }
            psi.push_back(value);
        }
        std::vector<double> evolved = apply_super_kernel(kernel, psi);

        std::string payload;
        if (args.format == "json") {
            nlohmann::ordered_json j;
            j["t"] = args.t;
            j["even"] = {{"truncation_order", kernel.even.truncation_order},
                         {"remainder_bound", kernel.even.remainder_bound}};
            j["odd"] = {{"truncation_order", kernel.odd.truncation_order},
                        {"remainder_bound", kernel.odd.remainder_bound}};
            j["state"] = evolved;
            payload = j.dump() + "\n";
        } else {
            payload = kernel_comment("even", kernel.even) + kernel_comment("odd", kernel.odd);
            for (std::size_t k = 0; k < evolved.size(); ++k) {
                std::string label = k < static_cast<std::size_t>(graph->vertex_count())
                                        ? graph->vertex_label(static_cast<int>(k))
                                        : graph->edge(static_cast<int>(k) - graph->vertex_count()).label;
                payload += label + " " + format_double(evolved[k]) + "\n";
            }
        }
        emit(payload, args.out);
        return kExitOk;
    }

    std::string payload;
    if (args.format == "json") {
        nlohmann::ordered_json j;
        j["even"] = kernel_json(kernel.even);
        j["odd"] = kernel_json(kernel.odd);
        payload = j.dump() + "\n";
    } else {
        payload = kernel_comment("even", kernel.even) + write_matrix_csv(kernel.even.matrix) +
                  kernel_comment("odd", kernel.odd) + write_matrix_csv(kernel.odd.matrix);
    }
    emit(payload, args.out);
    return kExitOk;
}

struct RandomArgs {
    int vertices = 1;
    double edge_prob = 0.0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_random(const RandomArgs& args) {
    emit(random_edge_list(args.vertices, args.edge_prob, args.seed), args.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed counts of walks, super-walks, and edge super-walks on finite graphs"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"csv", "json", "text"});

    MatrixArgs matrix_args;
    CLI::App* matrix_cmd = app.add_subcommand("matrix", "print a graph matrix or its power");
    matrix_cmd->add_option("--graph", matrix_args.graph_path, "graph file")->required();
    matrix_cmd->add_option("--kind", matrix_args.kind, "which matrix")
        ->required()
        ->check(CLI::IsMember({"adjacency", "incidence", "even-laplacian", "odd-laplacian"}));
    matrix_cmd->add_option("--power", matrix_args.power, "matrix power (default 1)")
        ->check(CLI::NonNegativeNumber);
    matrix_cmd->add_option("--format", matrix_args.format)->check(format_check);
    matrix_cmd->add_option("--out", matrix_args.out, "output path (default stdout)");

    CountArgs count_args;
    CLI::App* count_cmd = app.add_subcommand("count", "count walks between two vertices or edges");
    count_cmd->add_option("flavor", count_args.flavor, "walks | super | edge-super")
        ->required()
        ->check(CLI::IsMember({"walks", "super", "edge-super"}));
    count_cmd->add_option("--graph", count_args.graph_path, "graph file")->required();
    count_cmd->add_option("--from", count_args.from, "start label")->required();
    count_cmd->add_option("--to", count_args.to, "end label")->required();
    count_cmd->add_option("--length", count_args.length, "walk length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--method", count_args.method, "matrix | enumerate | both")
        ->check(CLI::IsMember({"matrix", "enumerate", "both"}));
    count_cmd->add_flag("--list", count_args.list, "emit JSON-lines walk records");
    count_cmd->add_option("--format", count_args.format)->check(format_check);
    count_cmd->add_option("--out", count_args.out);

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check matrix powers against walk enumeration");
    verify_cmd->add_option("--graph", verify_args.graph_path, "graph file")->required();
    verify_cmd->add_option("--max-length", verify_args.max_length, "check lengths 1..K (default 4)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--flip-sweep", verify_args.flip_sweep,
                         "also verify under every single-edge orientation flip");
    verify_cmd->add_flag("--inject-fault", verify_args.inject_fault)->group("");
    verify_cmd->add_option("--format", verify_args.format)->check(format_check);
    verify_cmd->add_option("--out", verify_args.out);

    HeatArgs heat_args;
    CLI::App* heat_cmd = app.add_subcommand("heat", "heat kernels exp(-t L) of both Laplacians");
    heat_cmd->add_option("--graph", heat_args.graph_path, "graph file")->required();
    heat_cmd->add_option("--t", heat_args.t, "evolution time")
        ->required()
        ->check(CLI::NonNegativeNumber);
    heat_cmd->add_option("--tol", heat_args.tol, "certified truncation tolerance (default 1e-12)");
    CLI::Option* st = heat_cmd->add_flag("--supertrace", heat_args.supertrace,
                                         "print trace(even kernel) - trace(odd kernel)");
    heat_cmd->add_option("--state", heat_args.state_path, "evolve the state vector in this file")
        ->excludes(st);
    heat_cmd->add_option("--order-cap", heat_args.order_cap, "max truncation order (default 200)")
        ->check(CLI::PositiveNumber);
    heat_cmd->add_option("--format", heat_args.format)->check(format_check);
    heat_cmd->add_option("--out", heat_args.out);

    RandomArgs random_args;
    CLI::App* random_cmd =
        app.add_subcommand("random-graph", "emit a seeded random simple oriented graph");
    random_cmd->add_option("--vertices", random_args.vertices)->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--edge-prob", random_args.edge_prob)
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    random_cmd->add_option("--seed", random_args.seed, "64-bit seed (default 0)");
    random_cmd->add_option("--out", random_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParameter;
    }

    try {
        if (matrix_cmd->parsed()) {
            return run_matrix(*matrix_cmd, matrix_args);
        }
        if (count_cmd->parsed()) {
            return run_count(count_args);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_args);
        }
        if (heat_cmd->parsed()) {
            return run_heat(heat_args);
        }
        if (random_cmd->parsed()) {
            return run_random(random_args);
        }
    } catch (const std::exception& e) {
        // Everything after a successful graph load is a parameter-level
        // failure: unreachable tolerances, listing caps, bad shapes.
        std::cerr << "error: " << e.what() << "\n";
        return kExitParameter;
    }
    return kExitOk;
}
