#include <doctest.h>

#include "cubecat/errors.hpp"
#include "cubecat/io.hpp"
#include "cubecat/twisted.hpp"

using namespace cubecat;

TEST_CASE("graph JSON layout") {
  const auto c1 = cube(CubeKind::Standard, 1);
  CHECK(graph_to_json(*c1).dump() ==
        R"({"dimension":1,"vertices":["0","1"],"edges":[["0","0"],["0","1"],["1","1"]]})");
  CHECK(graph_to_json(*cube(CubeKind::Twisted, 0)).dump() == R"({"dimension":0,"vertices":[""],"edges":[["",""]]})");
}

TEST_CASE("graph JSON round trip") {
  for (int n = 0; n <= 5; ++n) {
    for (const CubeKind kind : {CubeKind::Standard, CubeKind::Twisted}) {
      const Json j = graph_to_json(*cube(kind, n));
      const Graph back = graph_from_json(Json::parse(j.dump()));
      CHECK(back == *cube(kind, n));
      CHECK(graph_to_json(back).dump() == j.dump());
    }
  }
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[],"edges":[]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"dimension":1,"vertices":["0"],"edges":[["0","1"]]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"dimension":1,"vertices":["00"],"edges":[]})")), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"dimension":1,"vertices":["0"],"edges":[["0"]]})")), ParseError);
}

TEST_CASE("BCH JSON") {
  const BchMorphism f(2, 3, {BchValue::coordinate(0), BchValue::constant(true)});
  const Json j = bch_to_json(f);
  CHECK(j.dump() == R"({"m":2,"n":3,"map":["j0","b1"]})");
  CHECK(bch_from_json(j) == f);
  CHECK_THROWS_AS(bch_from_json(Json::parse(R"({"m":2,"n":3,"map":["j0","j0"]})")), ParseError);
  CHECK_THROWS_AS(bch_from_json(Json::parse(R"({"m":1,"n":3,"map":["x0"]})")), ParseError);
}

TEST_CASE("graph morphism JSON") {
  CHECK(graph_morphism_to_json(unique_surjection(2, 1)).dump() == R"({"00":"0","01":"0","10":"1","11":"1"})");
}

TEST_CASE("check report JSON") {
  CheckReport r;
  r.name = "demo";
  r.parameters = {{"max_dim", "2"}};
  r.counts = {{"arrows", 4}};
  CHECK(report_to_json(r).dump() ==
        R"({"name":"demo","passed":true,"parameters":{"max_dim":"2"},"counts":{"arrows":4},"counterexample":null,"capacity_exceeded":false})");
  r.fail("boom");
  CHECK(report_to_json(r)["counterexample"] == "boom");
}

TEST_CASE("DOT export of the twisted square") {
  const std::string expected =
      "digraph T2 {\n"
      "  rankdir=LR;\n"
      "  \"01\";\n"
      "  \"00\";\n"
      "  \"10\";\n"
      "  \"11\";\n"
      "  \"00\" -> \"10\" [label=\"⟨0, 0⟩\"];\n"
      "  \"01\" -> \"00\" [label=\"⟨1, 0⟩\"];\n"
      "  \"01\" -> \"11\" [label=\"⟨0, 1⟩\"];\n"
      "  \"10\" -> \"11\" [label=\"⟨1, 1⟩\"];\n"
      "}\n";
  CHECK(graph_to_dot(*cube(CubeKind::Twisted, 2), CubeKind::Twisted) == expected);
}

TEST_CASE("DOT export hides loops and keeps canonical order for standard cubes") {
  const std::string dot = graph_to_dot(*cube(CubeKind::Standard, 1), CubeKind::Standard);
  CHECK(dot == "digraph C1 {\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\" [label=\"⟨0, ε⟩\"];\n}\n");
  CHECK(graph_to_dot(*cube(CubeKind::Standard, 0)) == "digraph G0 {\n  \"ε\";\n}\n");
}
