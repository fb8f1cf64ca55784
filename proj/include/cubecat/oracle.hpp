#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cubecat/errors.hpp"
#include "cubecat/graph.hpp"

namespace cubecat {

/// Outcome of one exhaustive check.
struct CheckReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  bool passed = true;
  /// Set iff the check failed; first failure in canonical order.
  std::optional<std::string> counterexample;
  /// The failure was a CapacityError rather than a wrong answer.
  bool capacity_exceeded = false;
  std::map<std::string, std::uint64_t> counts;
  double elapsed_seconds = 0.0;

  void fail(std::string why) {
    if (passed) counterexample = std::move(why);
    passed = false;
  }
};

struct CapacityLimits {
  std::size_t max_hom_size = 1'000'000;
  std::uint64_t max_compositions = 100'000'000;
};

/// A small category with objects 0..maxDim, presented by enumeration.
/// `compose(outer, inner)` is outer ∘ inner. `contains(m, n, f)` tells
/// whether f is a legal arrow m -> n (used to validate functor images).
template <class Mor>
struct FiniteCategory {
  std::string name;
  std::function<std::vector<Mor>(int, int)> homs;
  std::function<Mor(int)> identity;
  std::function<Mor(const Mor&, const Mor&)> compose;
  std::function<std::string(const Mor&)> describe;
  std::function<bool(int, int, const Mor&)> contains = [](int, int, const Mor&) { return true; };
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Memoised hom-sets of one category for the duration of a check.
template <class Mor>
class HomCache {
 public:
  HomCache(const FiniteCategory<Mor>& cat, const CapacityLimits& limits) : cat_(cat), limits_(limits) {}

  const std::vector<Mor>& operator()(int m, int n) {
    auto it = cache_.find({m, n});
    if (it == cache_.end()) {
      auto homs = cat_.homs(m, n);
      if (homs.size() > limits_.max_hom_size) {
        throw CapacityError(cat_.name + "(" + std::to_string(m) + "," + std::to_string(n) + ") has " +
                            std::to_string(homs.size()) + " arrows, above the limit");
      }
      it = cache_.emplace(std::make_pair(m, n), std::move(homs)).first;
    }
    return it->second;
  }

 private:
  const FiniteCategory<Mor>& cat_;
  const CapacityLimits& limits_;
  std::map<std::pair<int, int>, std::vector<Mor>> cache_;
};

inline std::string hom_name(const std::string& cat, int m, int n) {
  return cat + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

}  // namespace detail

/// Checks id ∘ f = f = f ∘ id for every arrow between objects <= max_dim and
/// (h ∘ g) ∘ f = h ∘ (g ∘ f) for every composable triple between objects
/// <= max_assoc_dim.
template <class Mor>
CheckReport check_category_laws(const FiniteCategory<Mor>& cat, int max_dim, int max_assoc_dim,
                                const CapacityLimits& limits = {}) {
  detail::Stopwatch clock;
  CheckReport report;
  report.name = "category-laws:" + cat.name;
  report.parameters = {{"max_dim", std::to_string(max_dim)}, {"max_assoc_dim", std::to_string(max_assoc_dim)}};
  if (max_assoc_dim > max_dim) throw DimensionError("max_assoc_dim must not exceed max_dim");
  try {
    detail::HomCache<Mor> homs(cat, limits);
    std::uint64_t identity_checks = 0;
    std::uint64_t arrows = 0;
    for (int m = 0; m <= max_dim && report.passed; ++m) {
      const Mor id_m = cat.identity(m);
      for (int n = 0; n <= max_dim && report.passed; ++n) {
        const Mor id_n = cat.identity(n);
        for (const auto& f : homs(m, n)) {
          ++arrows;
          identity_checks += 2;
          if (!(cat.compose(id_n, f) == f)) {
            report.fail("id ∘ f != f for f = " + cat.describe(f) + " in " + detail::hom_name(cat.name, m, n));
            break;
          }
          if (!(cat.compose(f, id_m) == f)) {
            report.fail("f ∘ id != f for f = " + cat.describe(f) + " in " + detail::hom_name(cat.name, m, n));
            break;
          }
        }
      }
    }
    std::uint64_t assoc_checks = 0;
    const int d = max_assoc_dim;
    for (int a = 0; a <= d && report.passed; ++a) {
      for (int b = 0; b <= d && report.passed; ++b) {
        for (int c = 0; c <= d && report.passed; ++c) {
          for (int e = 0; e <= d && report.passed; ++e) {
            const auto& fs = homs(a, b);
            const auto& gs = homs(b, c);
            const auto& hs = homs(c, e);
            assoc_checks += static_cast<std::uint64_t>(fs.size()) * gs.size() * hs.size();
            if (assoc_checks > limits.max_compositions) {
              throw CapacityError("associativity check exceeds " + std::to_string(limits.max_compositions) +
                                  " compositions");
            }
            auto associative = [&] {
              for (const auto& f : fs) {
                for (const auto& g : gs) {
                  const Mor gf = cat.compose(g, f);
                  for (const auto& h : hs) {
                    if (!(cat.compose(cat.compose(h, g), f) == cat.compose(h, gf))) {
                      report.fail("(h∘g)∘f != h∘(g∘f) for f = " + cat.describe(f) + ", g = " + cat.describe(g) +
                                  ", h = " + cat.describe(h) + " over objects " + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(e));
                      return false;
                    }
                  }
                }
              }
              return true;
            };
            associative();
          }
        }
      }
    }
    report.counts = {{"arrows", arrows}, {"identity_checks", identity_checks}, {"associativity_checks", assoc_checks}};
  } catch (const CapacityError& e) {
    report.fail(std::string("capacity: ") + e.what());
    report.capacity_exceeded = true;
  } catch (const std::exception& e) {
    report.fail(std::string("exception: ") + e.what());
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

struct IsomorphismOptions {
  int max_dim = 3;
  /// Composition is checked on every composable pair over objects <= this.
  int max_compose_dim = 2;
  /// Extra composable pairs drawn uniformly over object triples that involve
  /// max_dim. Deterministic for a given seed.
  std::uint64_t sampled_pairs = 0;
  std::uint64_t seed = 0x5eed;
  CapacityLimits limits{};
};

/// Verifies that `forward` and `backward` are mutually inverse on every
/// hom-set, that both land in the right hom-sets, that forward preserves
/// identities, and that forward preserves composition.
template <class A, class B>
CheckReport check_isomorphism(const FiniteCategory<A>& cat_a, const FiniteCategory<B>& cat_b,
                              const std::function<B(const A&)>& forward, const std::function<A(const B&)>& backward,
                              const IsomorphismOptions& options = {}) {
  detail::Stopwatch clock;
  CheckReport report;
  report.name = "isomorphism:" + cat_a.name + "~" + cat_b.name;
  report.parameters = {{"max_dim", std::to_string(options.max_dim)},
                       {"max_compose_dim", std::to_string(options.max_compose_dim)},
                       {"sampled_pairs", std::to_string(options.sampled_pairs)}};
  std::uint64_t arrows = 0;
  std::uint64_t compositions = 0;
  try {
    detail::HomCache<A> homs_a(cat_a, options.limits);
    detail::HomCache<B> homs_b(cat_b, options.limits);
    const int d = options.max_dim;
    for (int m = 0; m <= d && report.passed; ++m) {
      if (!(forward(cat_a.identity(m)) == cat_b.identity(m))) {
        report.fail("identity of object " + std::to_string(m) + " is not preserved");
        break;
      }
      for (int n = 0; n <= d && report.passed; ++n) {
        const auto& as = homs_a(m, n);
        const auto& bs = homs_b(m, n);
        if (as.size() != bs.size()) {
          report.fail("|" + detail::hom_name(cat_a.name, m, n) + "| = " + std::to_string(as.size()) + " but |" +
                      detail::hom_name(cat_b.name, m, n) + "| = " + std::to_string(bs.size()));
          break;
        }
        for (const auto& a : as) {
          ++arrows;
          const B image = forward(a);
          if (!cat_b.contains(m, n, image)) {
            report.fail("forward image of " + cat_a.describe(a) + " is not in " + detail::hom_name(cat_b.name, m, n));
            break;
          }
          if (!(backward(image) == a)) {
            report.fail("backward(forward(f)) != f for f = " + cat_a.describe(a));
            break;
          }
        }
        for (const auto& b : bs) {
          if (!report.passed) break;
          const A pre = backward(b);
          if (!cat_a.contains(m, n, pre)) {
            report.fail("backward image of " + cat_b.describe(b) + " is not in " + detail::hom_name(cat_a.name, m, n));
            break;
          }
          if (!(forward(pre) == b)) {
            report.fail("forward(backward(g)) != g for g = " + cat_b.describe(b));
            break;
          }
        }
      }
    }

    auto check_pair = [&](const A& f, const A& g) {
      ++compositions;
      if (!(forward(cat_a.compose(g, f)) == cat_b.compose(forward(g), forward(f)))) {
        report.fail("composition not preserved for f = " + cat_a.describe(f) + ", g = " + cat_a.describe(g));
        return false;
      }
      return true;
    };
    const int c = options.max_compose_dim;
    for (int k = 0; k <= c && report.passed; ++k) {
      for (int m = 0; m <= c && report.passed; ++m) {
        for (int n = 0; n <= c && report.passed; ++n) {
          for (const auto& f : homs_a(k, m)) {
            bool ok = true;
            for (const auto& g : homs_a(m, n)) {
              if (!(ok = check_pair(f, g))) break;
            }
            if (!ok) break;
          }
        }
      }
    }

    if (report.passed && options.sampled_pairs > 0) {
      std::vector<std::array<int, 3>> triples;
      for (int k = 0; k <= d; ++k) {
        for (int m = 0; m <= d; ++m) {
          for (int n = 0; n <= d; ++n) {
            if ((k == d || m == d || n == d) && !homs_a(k, m).empty() && !homs_a(m, n).empty()) {
              triples.push_back({k, m, n});
            }
          }
        }
      }
      std::mt19937_64 rng(options.seed);
      for (std::uint64_t s = 0; s < options.sampled_pairs && report.passed && !triples.empty(); ++s) {
        const auto& [k, m, n] = triples[rng() % triples.size()];
        const auto& fs = homs_a(k, m);
        const auto& gs = homs_a(m, n);
        check_pair(fs[rng() % fs.size()], gs[rng() % gs.size()]);
      }
    }
  } catch (const CapacityError& e) {
    report.fail(std::string("capacity: ") + e.what());
    report.capacity_exceeded = true;
  } catch (const std::exception& e) {
    report.fail(std::string("exception: ") + e.what());
  }
  report.counts = {{"arrows", arrows}, {"compositions", compositions}};
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Every directed path visiting each vertex exactly once (loops ignored),
/// in canonical order. Throws CapacityError above 16 vertices.
std::vector<std::vector<Vertex>> brute_hamiltonian(const Graph& g);

}  // namespace cubecat
