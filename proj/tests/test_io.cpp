#include <doctest.h>

#include "ordconflict/io.hpp"
#include "oracles.hpp"

using namespace ordconflict;
using nlohmann::json;

TEST_CASE("graph json round trip") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 50; ++it) {
        OrderedGraph g = oracles::random_graph_window(rng, 3, 8, -20, 20);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}

TEST_CASE("graph json canonicalizes on load") {
    json j = {{"vertices", {3, 1, 2}}, {"edges", {{2, 1}}}};
    OrderedGraph g = graph_from_json(j);
    CHECK(g.vertices() == std::vector<Int>{1, 2, 3});
    CHECK(g.edges()[0] == Edge{1, 2});
}

TEST_CASE("spec json round trip and validation") {
    ConflictSpec s = nest_spec(-3);
    CHECK(spec_from_json(spec_to_json(s)) == s);
    CHECK_THROWS_AS(spec_from_json(json{{"matrix", json::array()}, {"p", 0}}), ValidationError);
    CHECK_THROWS_AS(spec_from_json(json{{"matrix", {{1, 2, 3}}}, {"p", 0}}), ValidationError);
    CHECK_THROWS_AS(graph_from_json(json{{"vertices", {1, 2}}}), ValidationError);
}

TEST_CASE("formula serialization") {
    json e = formula_to_json(FormulaResult::exact(2, "table1.row3"));
    CHECK(e.at("kind") == "exact");
    CHECK(e.at("value") == 2);
    CHECK(e.at("provenance") == "table1.row3");
    json b = formula_to_json(FormulaResult::bounds(Rational::of(6, 4), Rational::whole(3), "x"));
    CHECK(b.at("lower").at("num") == 3);
    CHECK(b.at("lower").at("den") == 2);
    json inf = formula_to_json(FormulaResult::infinite("x"));
    CHECK(inf.at("kind") == "infinite");
}

TEST_CASE("classification serialization") {
    json j = class_to_json(classify_matrix(sign_spec(0, 0, -1, 1, 2)));
    CHECK(j.at("tag") == "table-row");
    CHECK(j.at("row") == 4);
    CHECK(j.at("trace").size() == 1);
    CHECK(j.at("trace").at(0) == "swap_edge_roles");
}

TEST_CASE("report serialization keeps optional fields optional") {
    VerifyReport r;
    r.claim = "x";
    r.counts = 3;
    json j = report_to_json(r);
    CHECK_FALSE(j.contains("witness"));
    CHECK_FALSE(j.contains("scope"));
    r.scope = "window";
    r.witness = json{{"k", 1}};
    json j2 = report_to_json(r);
    CHECK(j2.contains("witness"));
    CHECK(j2.at("scope") == "window");
}

TEST_CASE("matrix signatures") {
    CHECK(matrix_signature(sign_spec(1, 0, -1, 0, 1)) == "+0-0");
    CHECK(matrix_signature(nest_spec(1)) == "+0-0|0-0+");
    CHECK(matrix_signature(ConflictSpec{{{2, 0, -3, 1}}, 0}) == "2,0,-3,1");
}
