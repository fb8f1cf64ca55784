#include "cubecat/ternary.hpp"

#include <atomic>
#include <functional>

#include "cubecat/errors.hpp"

namespace cubecat {

TernaryMorphism::TernaryMorphism(int m, std::vector<Trit> seq) : m_(m), seq_(std::move(seq)) {
  if (m < 0 || m > kMaxDimension) throw DimensionError("ternary domain out of range");
  if (seq_.size() > static_cast<std::size_t>(kMaxDimension)) throw DimensionError("ternary codomain out of range");
  if (stars() > m) {
    throw DimensionError("'" + str() + "' has " + std::to_string(stars()) + " stars but the domain is " +
                         std::to_string(m));
  }
}

TernaryMorphism TernaryMorphism::parse(int m, std::string_view text) { return TernaryMorphism(m, parse_trits(text)); }

TernaryMorphism TernaryMorphism::identity(int n) {
  return TernaryMorphism(n, std::vector<Trit>(static_cast<std::size_t>(n), Trit::Star));
}

namespace {

TernaryMorphism compose_impl(const TernaryMorphism& g, const TernaryMorphism& f, bool twist) {
  if (f.n() != g.m()) {
    throw DimensionError("ternary arrows do not compose: inner codomain " + std::to_string(f.n()) +
                         " != outer domain " + std::to_string(g.m()));
  }
  std::vector<Trit> out;
  out.reserve(g.seq().size());
  int stars_seen = 0;  // i'
  bool odd = false;    // parity of zeros in g since its last star
  for (const Trit gi : g.seq()) {
    Trit t = gi;
    if (gi == Trit::Star) {
      t = f[stars_seen++];
      if (t != Trit::Star && twist && odd) t = t == Trit::Zero ? Trit::One : Trit::Zero;
      odd = false;
    } else {
      odd ^= gi == Trit::Zero;
    }
    out.push_back(t);
  }
  return TernaryMorphism(f.m(), std::move(out));
}

std::atomic<bool> xor_enabled{true};

}  // namespace

namespace mutation {

void set_ternary_xor(bool enabled) { xor_enabled = enabled; }
bool ternary_xor() { return xor_enabled; }

}  // namespace mutation

TernaryMorphism ternary_compose(const TernaryMorphism& g, const TernaryMorphism& f) {
  return compose_impl(g, f, xor_enabled);
}

TernaryMorphism untwisted_ternary_compose(const TernaryMorphism& g, const TernaryMorphism& f) {
  return compose_impl(g, f, false);
}

namespace {

std::vector<TernaryMorphism> enumerate_with_stars(int m, int n, int min_stars, int max_stars) {
  if (m < 0 || n < 0 || n > kMaxDimension) throw DimensionError("ternary hom-set dimensions out of range");
  std::vector<TernaryMorphism> out;
  std::vector<Trit> current;
  std::function<void(int)> extend = [&](int stars) {
    if (current.size() == static_cast<std::size_t>(n)) {
      if (stars >= min_stars) out.emplace_back(m, current);
      return;
    }
    const int remaining = n - static_cast<int>(current.size());
    for (const Trit t : {Trit::Zero, Trit::One, Trit::Star}) {
      const int s = stars + (t == Trit::Star ? 1 : 0);
      if (s > max_stars || s + (remaining - 1) < min_stars) continue;
      current.push_back(t);
      extend(s);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

}  // namespace

std::vector<TernaryMorphism> enumerate_ternary(int m, int n) { return enumerate_with_stars(m, n, 0, m); }

bool semi_ternary_check(const TernaryMorphism& t) { return t.stars() == t.m(); }

std::vector<TernaryMorphism> enumerate_semi(int m, int n) { return enumerate_with_stars(m, n, m, m); }

GraphMorphism ternary_to_graphdim(const TernaryMorphism& t) {
  return compose(face_to_injection(Face(t.seq())), unique_surjection(t.m(), t.stars()));
}

TernaryMorphism graphdim_to_ternary(const GraphMorphism& f) {
  if (!f.source().is_full_cube() || !f.target().is_full_cube()) {
    throw DimensionError("graphdim_to_ternary expects a morphism between twisted cubes");
  }
  return TernaryMorphism(f.source().dim(), image_face(f).assignment());
}

}  // namespace cubecat
