#pragma once

#include <optional>
#include <string>

#include "superwalk/graph.hpp"
#include "superwalk/int_matrix.hpp"

namespace superwalk {

/// A^k: entry (i, j) counts the walks of length k from vertex i to vertex j.
IntMatrix walk_count_matrix(const Graph& g, int k);

/// (even Laplacian)^k: entry (i, j) is the signed super-walk count.
IntMatrix super_walk_matrix(const Graph& g, int k);

/// (odd Laplacian)^k: entry (i, j) is the signed edge super-walk count.
IntMatrix edge_super_walk_matrix(const Graph& g, int k);

struct Mismatch {
    std::string check;  // "walk-count" | "super-walk" | "edge-super-walk"
    int length = 0;
    std::string from;  // vertex label, or edge label for the edge check
    std::string to;
    BigInt matrix_value;
    BigInt oracle_value;
};

struct VerificationReport {
    std::string graph_summary;
    int max_length = 0;
    bool walk_pass = false;
    bool super_pass = false;
    bool edge_super_pass = false;
    std::optional<Mismatch> first_mismatch;

    bool pass() const { return walk_pass && super_pass && edge_super_pass; }

    std::string to_text() const;
    std::string to_json_string() const;
};

struct VerifyOptions {
    /// Self-test fault injection: perturbs one entry of the edge Laplacian
    /// before powering, so the mismatch channel can be demonstrated end to
    /// end. Never set in normal operation.
    bool inject_fault = false;
};

/// Sweeps every (from, to) pair and every length 1..max_length, comparing the
/// three matrix-power routes against the enumeration oracle. Mismatches are
/// data, not errors; the first one (in length, from, to order) is reported.
VerificationReport verify(const Graph& g, int max_length, const VerifyOptions& options = {});

}  // namespace superwalk
