#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubecat {

/// An element of Fin n + Fin 2: either a coordinate inl(j) or a constant
/// inr(b). Ordered with all coordinates first, then b0 < b1.
class BchValue {
 public:
  static BchValue coordinate(int j);
  static BchValue constant(bool b);
  /// "j<k>" or "b<k>".
  static BchValue parse(std::string_view text);

  bool is_coordinate() const noexcept { return !is_constant_; }
  bool is_constant() const noexcept { return is_constant_; }
  int coordinate() const;
  bool constant_value() const;

  std::string str() const;

  friend std::strong_ordering operator<=>(const BchValue& a, const BchValue& b) {
    if (a.is_constant_ != b.is_constant_) return a.is_constant_ <=> b.is_constant_;
    return a.value_ <=> b.value_;
  }
  friend bool operator==(const BchValue&, const BchValue&) = default;

 private:
  BchValue(bool is_constant, int value) : is_constant_(is_constant), value_(value) {}

  bool is_constant_ = false;
  int value_ = 0;
};

/// An arrow of □(m, n): a function Fin m -> Fin n + Fin 2 that is injective
/// on the coordinates it hits. Left-injectivity is checked on construction.
class BchMorphism {
 public:
  BchMorphism(int m, int n, std::vector<BchValue> map);

  static BchMorphism identity(int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::vector<BchValue>& map() const noexcept { return map_; }
  const BchValue& operator[](int i) const { return map_.at(static_cast<std::size_t>(i)); }

  /// "[j0,b1]".
  std::string str() const;

  friend auto operator<=>(const BchMorphism&, const BchMorphism&) = default;

 private:
  int m_;
  int n_;
  std::vector<BchValue> map_;
};

/// outer ∘ inner = (outer + id_2) ∘ inner. Throws DimensionError unless
/// inner.n() == outer.m().
BchMorphism bch_compose(const BchMorphism& outer, const BchMorphism& inner);

/// All of □(m, n) in lexicographic order (position 0 most significant, values
/// ordered by BchValue).
std::vector<BchMorphism> enumerate_bch(int m, int n);

/// An injective partial function Fin m -> Fin n, stored as
/// Fin m -> Fin n + Fin 1 with nullopt standing for inr(0).
class PartialInjection {
 public:
  PartialInjection(int m, int n, std::vector<std::optional<int>> map);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::vector<std::optional<int>>& map() const noexcept { return map_; }
  std::optional<int> operator[](int i) const { return map_.at(static_cast<std::size_t>(i)); }

  std::string str() const;

  friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;

 private:
  int m_;
  int n_;
  std::vector<std::optional<int>> map_;
};

/// The inverse partial function, as a map Fin n -> Fin m + Fin 1.
PartialInjection transpose_partial_injection(const PartialInjection& p);

/// Every partial injection Fin m -> Fin n, in lexicographic order with
/// inr(0) last.
std::vector<PartialInjection> enumerate_partial_injections(int m, int n);

}  // namespace cubecat
