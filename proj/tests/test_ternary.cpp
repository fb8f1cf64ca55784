#include <doctest.h>

#include <cmath>

#include "cubecat/catalog.hpp"
#include "cubecat/errors.hpp"
#include "cubecat/ternary.hpp"
#include "cubecat/twisted.hpp"
#include "reference.hpp"

using namespace cubecat;

namespace {

TernaryMorphism t(int m, const char* s) { return TernaryMorphism::parse(m, s); }

}  // namespace

TEST_CASE("worked compositions") {
  CHECK(ternary_compose(t(2, "0**"), t(1, "1*")) == t(1, "00*"));
  CHECK(untwisted_ternary_compose(t(2, "0**"), t(1, "1*")) == t(1, "01*"));
  CHECK(ternary_compose(t(3, "***"), t(1, "01*")) == t(1, "01*"));
  CHECK(ternary_compose(t(2, "**"), t(0, "00")) == t(0, "00"));
  CHECK(ternary_compose(t(2, "0**"), t(1, "*1")) == t(1, "0*1"));
}

TEST_CASE("hom-set sizes") {
  CHECK(enumerate_ternary(1, 2).size() == 8);
  for (int n = 0; n <= 5; ++n) {
    CHECK(enumerate_ternary(n, n).size() == ref::ternary_count(n, n));
    CHECK(enumerate_ternary(n + 1, n).size() == static_cast<std::size_t>(std::pow(3, n)));
  }
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      CHECK(enumerate_ternary(m, n).size() == ref::ternary_count(m, n));
      CHECK(enumerate_semi(m, n).size() == ref::binomial(n, m) * (m <= n ? ref::pow2(n - m) : 0));
    }
  }
  const auto table = hom_table(CategoryId::Ternary, 2);
  CHECK(table[1] == std::vector<std::uint64_t>{1, 3, 8});
}

TEST_CASE("ternary arrows and dimension-preserving twisted morphisms agree on composition") {
  for (int k = 0; k <= 2; ++k) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        for (const auto& f : enumerate_ternary(k, m)) {
          for (const auto& g : enumerate_ternary(m, n)) {
            CHECK(ternary_to_graphdim(ternary_compose(g, f)) == compose(ternary_to_graphdim(g), ternary_to_graphdim(f)));
          }
        }
      }
    }
  }
}

TEST_CASE("conversion round trips") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& a : enumerate_ternary(m, n)) CHECK(graphdim_to_ternary(ternary_to_graphdim(a)) == a);
      for (const auto& f : enumerate_twgraphdim(m, n)) CHECK(ternary_to_graphdim(graphdim_to_ternary(f)) == f);
    }
    CHECK(ternary_to_graphdim(TernaryMorphism::identity(m)) == identity_morphism(cube(CubeKind::Twisted, m)));
  }
}

TEST_CASE("semi-cube arrows are closed under composition") {
  for (int k = 0; k <= 3; ++k) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        for (const auto& f : enumerate_semi(k, m)) {
          for (const auto& g : enumerate_semi(m, n)) CHECK(semi_ternary_check(ternary_compose(g, f)));
        }
      }
    }
  }
}

TEST_CASE("parse and dimension errors") {
  try {
    TernaryMorphism::parse(2, "0*2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(t(1, "**"), DimensionError);
  CHECK_THROWS_AS(ternary_compose(t(3, "***"), t(1, "*")), DimensionError);
}

TEST_CASE("mutation hook switches the complement off") {
  mutation::set_ternary_xor(false);
  const auto mutated = ternary_compose(t(2, "0**"), t(1, "1*"));
  mutation::set_ternary_xor(true);
  CHECK(mutated == t(1, "01*"));
  CHECK(ternary_compose(t(2, "0**"), t(1, "1*")) == t(1, "00*"));
}
