#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubecat/graph_hom.hpp"
#include "cubecat/twisted.hpp"

namespace cubecat {

/// An arrow of the ternary category ⊠(m, n): a length-n sequence over
/// {0, 1, ⋆} with at most m stars.
class TernaryMorphism {
 public:
  TernaryMorphism(int m, std::vector<Trit> seq);
  /// "01*0*10"-style notation.
  static TernaryMorphism parse(int m, std::string_view text);

  /// The constantly-⋆ sequence of length n.
  static TernaryMorphism identity(int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return static_cast<int>(seq_.size()); }
  const std::vector<Trit>& seq() const noexcept { return seq_; }
  Trit operator[](int i) const { return seq_.at(static_cast<std::size_t>(i)); }
  int stars() const { return star_count(seq_); }

  std::string str() const { return trits_str(seq_); }

  friend auto operator<=>(const TernaryMorphism&, const TernaryMorphism&) = default;

 private:
  int m_;
  std::vector<Trit> seq_;
};

/// g ∘ f for f : ⊠(k, m), g : ⊠(m, n), computed left to right. A fixed bit of
/// g is copied; at the i-th position where g has its i'-th star, f(i') is
/// copied if it is ⋆ and otherwise complemented when g has an odd number of
/// zeros since its previous star.
TernaryMorphism ternary_compose(const TernaryMorphism& g, const TernaryMorphism& f);

/// The same recursion without the complement step.
TernaryMorphism untwisted_ternary_compose(const TernaryMorphism& g, const TernaryMorphism& f);

/// ⊠(m, n) in lexicographic order with 0 < 1 < ⋆.
std::vector<TernaryMorphism> enumerate_ternary(int m, int n);

/// Membership in the semi-cube category: exactly m stars.
bool semi_ternary_check(const TernaryMorphism& t);
std::vector<TernaryMorphism> enumerate_semi(int m, int n);

/// face_to_injection(t) ∘ unique_surjection(m, stars(t)).
GraphMorphism ternary_to_graphdim(const TernaryMorphism& t);
/// The image face of f, read as an arrow of ⊠(m, n).
TernaryMorphism graphdim_to_ternary(const GraphMorphism& f);

namespace mutation {

/// Test hook: with the complement disabled, ternary_compose behaves like
/// untwisted_ternary_compose.
void set_ternary_xor(bool enabled);
bool ternary_xor();

}  // namespace mutation

}  // namespace cubecat
