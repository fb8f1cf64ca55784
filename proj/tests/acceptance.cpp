// Acceptance run: one PASS/FAIL line per criterion, with its time budget.
// Exit status is the number of failing criteria.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cubecat/checks.hpp"

using namespace cubecat;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<std::vector<CheckReport>()> run;
};

int run(const Criterion& c) {
  detail::Stopwatch clock;
  const auto reports = c.run();
  const double elapsed = clock.seconds();
  std::string why;
  for (const auto& r : reports) {
    if (!r.passed && why.empty()) why = r.name + ": " + r.counterexample.value_or("failed");
  }
  if (why.empty() && elapsed > c.budget_seconds) {
    why = "took " + std::to_string(elapsed) + "s, budget " + std::to_string(c.budget_seconds) + "s";
  }
  std::printf("%s %2d %s (%.3fs / %.0fs)%s%s\n", why.empty() ? "PASS" : "FAIL", c.number, c.title.c_str(), elapsed,
              c.budget_seconds, why.empty() ? "" : " -- ", why.c_str());
  return why.empty() ? 0 : 1;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "recursive and closed-form cubes agree, n <= 4", 10,
       [] { return std::vector{check_rec_nonrec(4)}; }},
      {2, "□ᵒᵖ and graphmeet are isomorphic, objects <= 3", 60,
       [] { return std::vector{check_bchop_graphmeet(3, 2)}; }},
      {3, "graphmeet equals graphdim, objects <= 3", 120,
       [] { return std::vector{check_graphmeet_graphdim(3), check_graphmeet_structured(3)}; }},
      {4, "free preorder of T^n is total and order_g is an order isomorphism, n <= 5", 5,
       [] { return std::vector{check_total_order(5)}; }},
      {5, "T^n has exactly one Hamiltonian path, n <= 4", 30,
       [] { return std::vector{check_hamiltonian(4)}; }},
      {6, "the only surjections in twgraphdim are unique_surjection(m, n), m >= n", 60,
       [] { return std::vector{check_unique_surjection(3)}; }},
      {7, "dimension-preserving twisted morphisms factor uniquely, objects <= 3", 60,
       [] { return std::vector{check_factorisation(3), check_face_injections(3)}; }},
      {8, "ternary notation is isomorphic to twgraphdim, objects <= 3", 120,
       [] { return std::vector{check_ternary_graphdim(3, 2, 10'000)}; }},
      {9, "category laws, identities <= 3 and associativity <= 2", 120,
       [] { return check_all_laws(3, 2); }},
      {10, "dropping the orientation flip or the xor is detected", 120,
       [] { return std::vector{check_mutation_sensitivity(3)}; }},
      {11, "equal fibres iff dimension-preserving for twisted morphisms, objects <= 3", 60,
       [] { return std::vector{check_fibre_sizes(3)}; }},
  };
  int failures = 0;
  for (const auto& c : criteria) failures += run(c);
  return failures;
}
