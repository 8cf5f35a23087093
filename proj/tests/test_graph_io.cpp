#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>

#include "superwalk/graph_io.hpp"
#include "superwalk/random_graph.hpp"
#include "test_graphs.hpp"

using namespace superwalk;
using namespace superwalk::testgraphs;

TEST_CASE("shipped fixture parses to the worked graph") {
    Graph g = load_graph_file(std::string(SUPERWALK_DATA_DIR) + "/two_triangles.graph");
    CHECK(g == two_triangles());
    CHECK(odd_laplacian(g)(0, 1) == 1);
}

TEST_CASE("edge list round-trips") {
    for (const Graph& g : golden_set()) {
        CHECK(parse_edge_list(write_edge_list(g)) == g);
    }
    // Orientation survives the round trip.
    Graph flipped = two_triangles().flipped(4);
    CHECK(parse_edge_list(write_edge_list(flipped)) == flipped);
}

TEST_CASE("first-appearance order when nothing is declared") {
    Graph g = parse_edge_list("b c\na b\n");
    CHECK(g.vertex_labels() == std::vector<std::string>{"b", "c", "a"});
    CHECK(g.edge(0).tail == 0);
    CHECK(g.edge(0).head == 1);
}

TEST_CASE("comments and blank lines are ignored") {
    Graph g = parse_edge_list("# heading\n\nvertex a\nvertex b # trailing note\n\na b # edge\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse failures carry line positions") {
    auto line_of = [](const std::string& text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };

    CHECK(line_of("") == 0);                             // empty graph
    CHECK(line_of("# only a comment\n") == 0);           // still empty
    CHECK(line_of("a b c\n") == 1);                      // too many tokens
    CHECK(line_of("vertex\n") == 1);                     // missing label
    CHECK(line_of("a b\nv1 v1\n") == 2);                 // self-loop
    CHECK(line_of("a b\n\nb a\n") == 3);                 // parallel edge, reversed
    CHECK(line_of("vertex a\nvertex a\n") == 2);         // duplicate declaration
    CHECK(line_of("vertex a\nvertex b\na c\n") == 3);    // undeclared endpoint

    try {
        parse_edge_list("a b\nv1 v1\n");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
    }
}

TEST_CASE("json graph round-trip") {
    Graph g = parse_json_graph(R"({"vertices":["a","b"],"edges":[["a","b"]]})");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge(0).tail == 0);

    for (const Graph& fixture : golden_set()) {
        CHECK(parse_json_graph(write_json_graph(fixture)) == fixture);
    }

    CHECK_THROWS_AS(parse_json_graph(R"({"vertices":["a"]})"), JsonError);
    CHECK_THROWS_AS(parse_json_graph("not json"), JsonError);
    CHECK_THROWS_AS(parse_json_graph(R"({"vertices":["a","b"],"edges":[["a"]]})"), JsonError);
    CHECK_THROWS_AS(parse_json_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"), GraphError);
}

TEST_CASE("matrix CSV bytes") {
    CHECK(write_matrix_csv(IntMatrix::identity(2)) == "1,0\n0,1\n");
    CHECK(write_matrix_csv(even_laplacian(two_triangles())).substr(0, 14) == "2,-1,0,-1,0,0\n");
}

TEST_CASE("huge entries survive CSV and JSON round trips") {
    IntMatrix m(2, 2);
    m(0, 0) = pow(BigInt(2), 100);
    m(0, 1) = -pow(BigInt(3), 77);
    m(1, 0) = 0;
    m(1, 1) = BigInt("-906694364710971881029632");
    CHECK(parse_int_matrix_csv(write_matrix_csv(m)) == m);
    CHECK(parse_int_matrix_json(write_matrix_json(m)) == m);
}

TEST_CASE("matrix parsers reject malformed documents") {
    CHECK_THROWS_AS(parse_int_matrix_csv("1,2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_int_matrix_csv("1,x\n"), ParseError);
    CHECK_THROWS_AS(parse_int_matrix_csv(""), ParseError);
    CHECK_THROWS_AS(parse_int_matrix_json(R"({"rows":2,"cols":2,"entries":[["1","2"]]})"),
                    JsonError);
    CHECK_THROWS_AS(parse_int_matrix_json("[]"), JsonError);

    // Plain integer entries are accepted on input.
    IntMatrix m = parse_int_matrix_json(R"({"rows":1,"cols":2,"entries":[[1,"2"]]})");
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 1) == 2);
}

TEST_CASE("float matrices serialize losslessly") {
    FloatMatrix m(1, 3);
    m(0, 0) = 1.0 / 3.0;
    m(0, 1) = -2.5e-17;
    m(0, 2) = 1e300;
    std::string csv = write_matrix_csv(m);
    // Each cell must parse back to the identical double.
    std::size_t start = 0;
    int cell = 0;
    while (start < csv.size() && cell < 3) {
        std::size_t stop = csv.find_first_of(",\n", start);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(csv.data() + start, csv.data() + stop, value);
        REQUIRE(ec == std::errc{});
        CHECK(value == m(0, cell));
        start = stop + 1;
        ++cell;
    }
    CHECK(cell == 3);
}

TEST_CASE("walk records render as JSON lines with labels") {
    Graph g = two_triangles();
    SignedWalks walks = signed_super_walks(g, g.vertex_index("v1"), g.vertex_index("v2"), 2);
    REQUIRE(walks.walks.size() == 5);
    CHECK(walk_record_json(g, walks.walks[0]) ==
          R"({"kind":"super","start":"v1","steps":[{"via":"e1","to":"v2","sign":-1},)"
          R"({"via":"e1","to":"v2","sign":1}],"sign":-1})");

    SignedWalks edge_walks = signed_edge_super_walks(g, 0, 1, 2);
    REQUIRE(edge_walks.walks.size() == 5);
    CHECK(walk_record_json(g, edge_walks.walks[4]) ==
          R"({"kind":"edge-super","start":"e1","steps":[{"via":"v2","to":"e3","sign":-1},)"
          R"({"via":"v4","to":"e2","sign":1}],"sign":-1})");
}

TEST_CASE("random graph documents are deterministic and valid") {
    std::string a = random_edge_list(6, 0.5, 42);
    std::string b = random_edge_list(6, 0.5, 42);
    CHECK(a == b);
    CHECK(random_edge_list(6, 0.5, 43) != a);

    Graph g = parse_edge_list(a);
    CHECK(g.vertex_count() == 6);
    CHECK(g == random_graph(6, 0.5, 42));

    CHECK(random_graph(5, 0.0, 1).edge_count() == 0);
    CHECK(random_graph(4, 1.0, 1).edge_count() == 6);

    CHECK_THROWS_AS(random_edge_list(0, 0.5, 1), std::out_of_range);
    CHECK_THROWS_AS(random_edge_list(3, 1.5, 1), std::out_of_range);
}
