#include <doctest.h>

#include "cubecat/cubes.hpp"
#include "cubecat/errors.hpp"
#include "cubecat/graph.hpp"
#include "reference.hpp"

using namespace cubecat;

namespace {

Vertex v(const char* s) { return Vertex::parse(s); }

std::vector<Edge> nonloop_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (e.first != e.second) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("vertices parse, print and order canonically") {
  CHECK(v("0110").str() == "0110");
  CHECK(v("0110").bit(1));
  CHECK_FALSE(v("0110").bit(0));
  CHECK(v("01") < v("10"));
  CHECK(v("").dim() == 0);
  CHECK(display(v("")) == "ε");
  CHECK(v("0101").count_zeros(0, 3) == 2);
  CHECK(v("101").erase_bit(1) == v("11"));
  CHECK(v("11").insert_bit(1, false) == v("101"));
  CHECK(single_difference(v("010"), v("000")) == 1);
  CHECK(single_difference(v("011"), v("000")) == -1);
  try {
    Vertex::parse("01x1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("standard square: meets and joins are bitwise and/or") {
  const auto c2 = cube(CubeKind::Standard, 2);
  CHECK(meet(*c2, v("01"), v("10")) == v("00"));
  CHECK(join(*c2, v("01"), v("10")) == v("11"));
  for (const auto& a : c2->vertices()) {
    for (const auto& b : c2->vertices()) {
      CHECK(meet(*c2, a, b) == Vertex(2, a.value() & b.value()));
      CHECK(join(*c2, a, b) == Vertex(2, a.value() | b.value()));
    }
  }
}

TEST_CASE("twisted square: free preorder is the total order 01 < 00 < 10 < 11") {
  const auto t2 = cube(CubeKind::Twisted, 2);
  const Preorder p = free_preorder(*t2);
  CHECK(is_total_order(p));
  const std::vector<Vertex> chain{v("01"), v("00"), v("10"), v("11")};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = 0; j < chain.size(); ++j) CHECK(p.leq(chain[i], chain[j]) == (i <= j));
  }
  CHECK(meet(*t2, v("01"), v("10")) == v("01"));
  CHECK(join(*t2, v("01"), v("10")) == v("10"));
  CHECK_FALSE(is_total_order(free_preorder(*cube(CubeKind::Standard, 2))));
}

TEST_CASE("meet is absent unless the greatest lower bound is unique") {
  // a and b have two incomparable lower bounds x, y.
  const std::vector<Vertex> vs{v("00"), v("01"), v("10"), v("11")};
  const std::vector<Edge> es{{v("00"), v("10")}, {v("00"), v("11")}, {v("01"), v("10")}, {v("01"), v("11")}};
  const Graph g(2, vs, es);
  CHECK_FALSE(meet(g, v("10"), v("11")).has_value());
  CHECK_FALSE(join(g, v("00"), v("01")).has_value());
  CHECK(meet(g, v("00"), v("10")) == v("00"));
}

TEST_CASE("the square and the twisted square are not isomorphic") {
  CHECK_FALSE(graph_isomorphic(*cube(CubeKind::Standard, 2), *cube(CubeKind::Twisted, 2)));
  CHECK(graph_isomorphic(undirected(*cube(CubeKind::Standard, 2)), undirected(*cube(CubeKind::Twisted, 2))));
  const auto iso = graph_isomorphic(*cube(CubeKind::Twisted, 3), twisted_cube_rec(3));
  CHECK(iso.has_value());
}

TEST_CASE("base subgraph B2") {
  const Graph b2 = base_subgraph(2);
  CHECK(std::vector<Vertex>(b2.vertices().begin(), b2.vertices().end()) == std::vector<Vertex>{v("00"), v("01"), v("10")});
  CHECK(nonloop_edges(b2) == std::vector<Edge>{{v("00"), v("01")}, {v("00"), v("10")}});
}

TEST_CASE("twisted square edges") {
  const auto edges = nonloop_edges(*cube(CubeKind::Twisted, 2));
  const std::vector<Edge> expected{{v("00"), v("10")}, {v("01"), v("00")}, {v("01"), v("11")}, {v("10"), v("11")}};
  CHECK(edges == expected);
}

TEST_CASE("closed-form twisted cube labels in dimension 3") {
  const auto t3 = twisted_cube_nonrec(3);
  CHECK(t3.source_of(EdgeLabel::along(2, v("01"))).source == v("011"));
  CHECK(t3.source_of(EdgeLabel::along(2, v("01"))).target == v("010"));
  CHECK(t3.source_of(EdgeLabel::along(0, v("11"))).source == v("011"));
  CHECK(t3.source_of(EdgeLabel::along(0, v("11"))).target == v("111"));
  CHECK(EdgeLabel::along(2, v("01")).str() == "⟨2, 01⟩");
  CHECK(EdgeLabel::along(0, Vertex()).str() == "⟨0, ε⟩");
  CHECK(edge_dimension(v("011"), v("010")) == EdgeDimension(2));
  CHECK_FALSE(edge_dimension(v("011"), v("011")).has_value());
}

TEST_CASE("cubes agree with the reference edge relations") {
  for (int n = 0; n <= 4; ++n) {
    for (const CubeKind kind : {CubeKind::Standard, CubeKind::Twisted}) {
      const auto edge = kind == CubeKind::Standard ? ref::standard_edge : ref::twisted_edge;
      for (const Graph& g : {cube_rec(kind, n), cube_nonrec(kind, n).graph()}) {
        REQUIRE(g.size() == ref::pow2(n));
        CHECK(g.edge_count() == ref::pow2(n) + static_cast<std::uint64_t>(n) * (n ? ref::pow2(n - 1) : 0));
        for (unsigned a = 0; a < g.size(); ++a) {
          for (unsigned b = 0; b < g.size(); ++b) {
            CHECK(g.has_edge(Vertex(n, a), Vertex(n, b)) == edge(a, b, n));
          }
        }
      }
    }
  }
}

TEST_CASE("zero-dimensional cube is a point with its loop") {
  const auto c0 = cube(CubeKind::Standard, 0);
  CHECK(c0->size() == 1);
  CHECK(c0->edge_count() == 1);
  CHECK(*c0 == point_graph());
}

TEST_CASE("graph construction rejects foreign endpoints") {
  const std::vector<Edge> es{{v("00"), v("11")}};
  CHECK_THROWS_AS(Graph(2, {v("00")}, es), DimensionError);
  CHECK_THROWS_AS(Graph(2, {v("0")}, {}), DimensionError);
}

TEST_CASE("full subgraph and reversal") {
  const auto c2 = cube(CubeKind::Standard, 2);
  const Graph top = full_subgraph(*c2, [](const Vertex& x) { return x.bit(0); });
  CHECK(top.size() == 2);
  CHECK(top.has_edge(v("10"), v("11")));
  CHECK(reversed(*c2).has_edge(v("11"), v("10")));
  CHECK_FALSE(reversed(*c2).has_edge(v("10"), v("11")));
}
