#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superwalk/counting.hpp"
#include "superwalk/random_graph.hpp"
#include "test_graphs.hpp"

using namespace superwalk;
using namespace superwalk::testgraphs;

TEST_CASE("walk count matrix") {
    Graph g = two_triangles();
    CHECK(walk_count_matrix(g, 0) == IntMatrix::identity(6));
    CHECK(walk_count_matrix(g, 1) == adjacency_matrix(g));
    CHECK(walk_count_matrix(g, 2)(0, 0) == 2);  // closed 2-walks at v1 via e1 and e2
}

TEST_CASE("super-walk matrix") {
    Graph g = two_triangles();
    CHECK(super_walk_matrix(g, 0) == IntMatrix::identity(6));

    IntMatrix one = super_walk_matrix(g, 1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK(one(v, v) == g.valence(v));
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (v != w) {
                CHECK(one(v, w) == (g.adjacent(v, w) ? -1 : 0));
            }
        }
    }
    CHECK(super_walk_matrix(g, 2)(0, 1) == -3);
}

TEST_CASE("edge super-walk matrix") {
    Graph g = two_triangles();
    CHECK(edge_super_walk_matrix(g, 0) == IntMatrix::identity(7));
    IntMatrix one = edge_super_walk_matrix(g, 1);
    for (int e = 0; e < 7; ++e) {
        CHECK(one(e, e) == 2);
    }
    CHECK(edge_super_walk_matrix(g, 2)(0, 1) == 3);
}

TEST_CASE("verification passes on the worked graph") {
    Graph g = two_triangles();
    VerificationReport report = verify(g, 5);
    CHECK(report.pass());
    CHECK(report.walk_pass);
    CHECK(report.super_pass);
    CHECK(report.edge_super_pass);
    CHECK_FALSE(report.first_mismatch.has_value());

    CHECK(verify(g.flipped(2), 4).pass());
}

TEST_CASE("verification passes on the golden set and seeded random graphs") {
    for (const Graph& g : golden_set()) {
        CHECK(verify(g, 4).pass());
    }
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 2 + static_cast<int>(seed % 6);
        double p = 0.2 + 0.1 * static_cast<double>(seed % 7);
        CHECK(verify(random_graph(n, p, seed), 4).pass());
    }
    for (std::uint64_t seed = 50; seed < 53; ++seed) {
        CHECK(verify(random_graph(8, 0.4, seed), 5).pass());
    }
    CHECK(verify(single_vertex(), 3).pass());
}

TEST_CASE("entry growth stays inside the step-count bound") {
    // Each position has at most 2 * max valence outgoing steps, so no entry
    // of the k-th power can exceed (2 * max valence)^k in magnitude.
    Graph g = two_triangles();
    BigInt bound = 1;
    for (int k = 0; k <= 6; ++k) {
        CHECK(super_walk_matrix(g, k).max_abs_entry() <= bound);
        bound *= 6;  // max valence is 3
    }
}

TEST_CASE("fault injection trips the mismatch channel") {
    Graph g = two_triangles();
    VerifyOptions options;
    options.inject_fault = true;
    VerificationReport report = verify(g, 3, options);
    CHECK_FALSE(report.pass());
    CHECK(report.walk_pass);
    CHECK(report.super_pass);
    CHECK_FALSE(report.edge_super_pass);
    REQUIRE(report.first_mismatch.has_value());
    CHECK(report.first_mismatch->check == "edge-super-walk");
    CHECK(report.first_mismatch->length == 1);
    CHECK(report.first_mismatch->matrix_value != report.first_mismatch->oracle_value);
}

TEST_CASE("super-walk matrix ignores orientation; edge matrix conjugates") {
    Graph g = two_triangles();
    for (int flip = 0; flip < g.edge_count(); ++flip) {
        Graph h = g.flipped(flip);
        for (int k = 1; k <= 4; ++k) {
            CHECK(super_walk_matrix(h, k) == super_walk_matrix(g, k));

            IntMatrix expected = edge_super_walk_matrix(g, k);
            for (int i = 0; i < g.edge_count(); ++i) {
                for (int j = 0; j < g.edge_count(); ++j) {
                    int di = i == flip ? -1 : 1;
                    int dj = j == flip ? -1 : 1;
                    expected(i, j) *= di * dj;
                }
            }
            CHECK(edge_super_walk_matrix(h, k) == expected);
        }
    }
}

TEST_CASE("report rendering") {
    Graph g = path4();
    VerificationReport good = verify(g, 2);
    CHECK(good.to_text().find("walk-count: pass") != std::string::npos);
    CHECK(good.to_json_string().find("\"pass\":true") != std::string::npos);

    VerifyOptions options;
    options.inject_fault = true;
    VerificationReport bad = verify(g, 2, options);
    CHECK(bad.to_text().find("edge-super-walk: FAIL") != std::string::npos);
    CHECK(bad.to_text().find("first mismatch") != std::string::npos);
    CHECK(bad.to_json_string().find("\"first_mismatch\":{") != std::string::npos);
}

TEST_CASE("verification needs a positive length bound") {
    CHECK_THROWS_AS(verify(path4(), 0), std::out_of_range);
}
