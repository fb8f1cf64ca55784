#include <doctest.h>

#include "cubecat/catalog.hpp"
#include "cubecat/checks.hpp"
#include "cubecat/oracle.hpp"

using namespace cubecat;

namespace {

/// Integers mod 3 as a one-object-per-n category whose arrows are ints;
/// composition is addition, so the laws hold.
FiniteCategory<int> cyclic() {
  FiniteCategory<int> cat;
  cat.name = "cyclic";
  cat.homs = [](int, int) { return std::vector<int>{0, 1, 2}; };
  cat.identity = [](int) { return 0; };
  cat.compose = [](const int& g, const int& f) { return (g + f) % 3; };
  cat.describe = [](const int& f) { return std::to_string(f); };
  return cat;
}

}  // namespace

TEST_CASE("category laws pass on a lawful category and fail on a broken one") {
  CHECK(check_category_laws(cyclic(), 2, 2).passed);

  auto no_identity = cyclic();
  no_identity.identity = [](int) { return 1; };
  const auto r1 = check_category_laws(no_identity, 1, 1);
  CHECK_FALSE(r1.passed);
  CHECK(r1.counterexample->find("id") != std::string::npos);

  auto not_associative = cyclic();
  not_associative.compose = [](const int& g, const int& f) { return f == 0 ? g : g == 0 ? f : (2 * g + f) % 3; };
  const auto r2 = check_category_laws(not_associative, 1, 1);
  CHECK_FALSE(r2.passed);
  CHECK(r2.counterexample->find("(h∘g)∘f") != std::string::npos);
}

TEST_CASE("isomorphism check notices a non-inverse and a non-functor") {
  const std::function<int(const int&)> id = [](const int& x) { return x; };
  const std::function<int(const int&)> negate = [](const int& x) { return (3 - x) % 3; };
  const std::function<int(const int&)> zero = [](const int&) { return 0; };
  CHECK(check_isomorphism<int, int>(cyclic(), cyclic(), id, id).passed);
  CHECK(check_isomorphism<int, int>(cyclic(), cyclic(), negate, negate).passed);
  CHECK_FALSE(check_isomorphism<int, int>(cyclic(), cyclic(), zero, id).passed);

  auto squash = cyclic();
  squash.homs = [](int, int) { return std::vector<int>{0, 1}; };
  const auto r = check_isomorphism<int, int>(squash, cyclic(), id, id);
  CHECK_FALSE(r.passed);
  CHECK(r.counterexample->find("|") == 0);
}

TEST_CASE("capacity limits surface as capacity failures") {
  CapacityLimits tight;
  tight.max_hom_size = 2;
  const auto r = check_category_laws(cyclic(), 1, 1, tight);
  CHECK_FALSE(r.passed);
  CHECK(r.capacity_exceeded);
  CHECK_THROWS_AS(hom_count(CategoryId::GraphCube, 4, 1), CapacityError);
  CHECK_THROWS_AS(brute_hamiltonian(*cube(CubeKind::Twisted, 5)), CapacityError);
}

TEST_CASE("catalogue names round-trip") {
  for (const auto id : all_categories()) CHECK(parse_category_id(to_string(id)) == id);
  CHECK_THROWS_AS(parse_category_id("cubes"), ParseError);
  CHECK(hom_listing(CategoryId::BchOp, 1, 1).size() == 3);
}

TEST_CASE("suites") {
  for (const char* name : {"all", "standard", "twisted", "laws", "iso", "mutation"}) {
    CHECK(to_string(parse_suite(name)) == name);
  }
  for (const auto& r : run_suite(Suite::Laws, 2)) CHECK_MESSAGE(r.passed, r.name);
  for (const auto& r : run_suite(Suite::Iso, 2)) CHECK_MESSAGE(r.passed, r.name);
}

TEST_CASE("disabling the twisted orientation flip breaks the twisted checks") {
  mutation::set_twisted_parity_flip(false);
  const bool total = check_total_order(3).passed;
  const bool rec = check_rec_nonrec(3).passed;
  mutation::set_twisted_parity_flip(true);
  CHECK_FALSE(total);
  CHECK_FALSE(rec);
  CHECK(check_total_order(3).passed);
}
