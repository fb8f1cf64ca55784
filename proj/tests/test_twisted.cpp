#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubecat/cubes.hpp"
#include "cubecat/oracle.hpp"
#include "cubecat/ternary.hpp"
#include "cubecat/twisted.hpp"
#include "reference.hpp"

using namespace cubecat;

namespace {

Vertex v(const char* s) { return Vertex::parse(s); }

GraphPtr T(int n) { return cube(CubeKind::Twisted, n); }

ref::Map as_map(const GraphMorphism& f) {
  ref::Map out;
  for (const auto& x : f.source().vertices()) out.push_back(f(x).value());
  return out;
}

}  // namespace

TEST_CASE("rev complements every bit") {
  CHECK(rev(v("00101")) == v("11010"));
  CHECK(rev(Vertex()) == Vertex());
}

TEST_CASE("f2 and its inverse") {
  CHECK(hamiltonian_f(2, 0) == v("01"));
  CHECK(hamiltonian_f(2, 1) == v("00"));
  CHECK(hamiltonian_f(2, 2) == v("10"));
  CHECK(hamiltonian_f(2, 3) == v("11"));
  for (Bits k = 0; k < 4; ++k) CHECK(order_g(hamiltonian_f(2, k)) == Vertex(2, k));
}

TEST_CASE("the Hamiltonian path of T3") {
  std::vector<std::string> got;
  for (Bits k = 0; k < 8; ++k) got.push_back(hamiltonian_f(3, k).str());
  CHECK(got == std::vector<std::string>{"011", "010", "000", "001", "101", "100", "110", "111"});
  CHECK(hamiltonian_path(2) == std::vector<Edge>{{v("01"), v("00")}, {v("00"), v("10")}, {v("10"), v("11")}});
}

TEST_CASE("order_g matches the reachability order of the reference twisted cube") {
  for (int n = 0; n <= 5; ++n) {
    const auto r = ref::reach(n, ref::twisted_edge);
    for (unsigned a = 0; a < ref::pow2(n); ++a) {
      for (unsigned b = 0; b < ref::pow2(n); ++b) {
        CHECK(r[a][b] == (order_g(Vertex(n, a)).value() <= order_g(Vertex(n, b)).value()));
      }
    }
  }
}

TEST_CASE("brute-force Hamiltonian search agrees with the reference search") {
  for (int n = 0; n <= 3; ++n) {
    for (const CubeKind kind : {CubeKind::Standard, CubeKind::Twisted}) {
      const auto edge = kind == CubeKind::Standard ? ref::standard_edge : ref::twisted_edge;
      std::vector<std::vector<unsigned>> got;
      for (const auto& path : brute_hamiltonian(*cube(kind, n))) {
        auto& p = got.emplace_back();
        for (const auto& x : path) p.push_back(x.value());
      }
      CHECK(got == ref::hamiltonian_paths(n, edge));
    }
  }
  // Only the twisted cube is traceable in dimension 4.
  CHECK(brute_hamiltonian(*T(4)).size() == ref::hamiltonian_paths(4, ref::twisted_edge).size());
  CHECK(ref::hamiltonian_paths(4, ref::twisted_edge).size() == 1);
}

TEST_CASE("outgoing edges count the zeros of the order number") {
  for (int n = 0; n <= 4; ++n) {
    for (unsigned a = 0; a < ref::pow2(n); ++a) {
      int out = 0;
      for (unsigned b = 0; b < ref::pow2(n); ++b) out += a != b && ref::twisted_edge(a, b, n);
      CHECK(out == order_g(Vertex(n, a)).count_zeros());
    }
  }
}

TEST_CASE("unique surjections") {
  const auto s = unique_surjection(2, 1);
  CHECK(s(v("00")) == v("0"));
  CHECK(s(v("01")) == v("0"));
  CHECK(s(v("10")) == v("1"));
  CHECK(s(v("11")) == v("1"));
  CHECK(is_dimension_preserving(s));
  CHECK(s.is_surjective());
  CHECK_THROWS(unique_surjection(1, 2));
}

TEST_CASE("faces") {
  CHECK(face_count(2, 1) == 4);
  std::uint64_t total = 0;
  for (int k = 0; k <= 3; ++k) total += face_count(3, k);
  CHECK(total == 27);
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(face_count(n, k) == ref::binomial(n, k) * ref::pow2(n - k));
  }
  const auto face_1 = face_to_injection(Face::parse("1*"));
  CHECK(face_1(v("0")) == v("10"));
  CHECK(face_1(v("1")) == v("11"));
  const auto face_0 = face_to_injection(Face::parse("0*"));
  CHECK(face_0(v("0")) == v("01"));
  CHECK(face_0(v("1")) == v("00"));
  CHECK(image_face(face_0) == Face::parse("0*"));
}

TEST_CASE("every face gives a graph morphism onto exactly the matching vertices") {
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& face : faces(n, k)) {
        const GraphMorphism f = face_to_injection(face);  // throws unless edges are preserved
        CHECK(f.is_injective());
        CHECK(is_dimension_preserving(f));
        std::set<Vertex> image;
        for (const auto& x : f.source().vertices()) image.insert(f(x));
        for (const auto& y : all_vertices(n)) CHECK(image.count(y) == (face.matches(y) ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("twisted hom-sets match an exhaustive search") {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      std::set<ref::Map> expected;
      for (const auto& f : ref::all_homs(m, n, ref::twisted_edge)) expected.insert(f);
      std::set<ref::Map> got;
      for (const auto& f : enumerate_twcubecat(m, n)) got.insert(as_map(f));
      CHECK(got == expected);
    }
  }
}

TEST_CASE("twgraphdim has as many arrows as the ternary notation") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) CHECK(enumerate_twgraphdim(m, n).size() == ref::ternary_count(m, n));
  }
}

TEST_CASE("factorisation recomposes") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& f : enumerate_twgraphdim(m, n)) {
        const Factorization fac = factorize(f);
        CHECK(compose(fac.injection, fac.surjection) == f);
        CHECK(fac.surjection == unique_surjection(m, fac.k));
      }
    }
  }
}

TEST_CASE("vertex tensor") {
  CHECK(monoidal_tensor(Vertex(), v("01")) == v("01"));
  CHECK(monoidal_tensor(v("0"), v("01")) == v("010"));
  CHECK(monoidal_tensor(v("1"), v("01")) == v("101"));
  CHECK(monoidal_tensor(2, 3) == 5);
  // The formula as stated is not associative.
  CHECK(monoidal_tensor(monoidal_tensor(v("0"), v("0")), v("0")) == v("011"));
  CHECK(monoidal_tensor(v("0"), monoidal_tensor(v("0"), v("0"))) == v("010"));
}

TEST_CASE("standard and twisted cubes share undirected shapes") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(undirected(*cube(CubeKind::Standard, n)) == undirected(*T(n)));
  }
}
