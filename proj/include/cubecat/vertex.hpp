#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubecat {

using Bits = std::uint32_t;

/// Largest cube dimension representable by a Vertex.
inline constexpr int kMaxDimension = 24;

/// A binary sequence x_0 x_1 ... x_{n-1} of fixed length.
///
/// Index 0 is the leftmost digit. The sequence is packed big-endian into an
/// integer, so x_0 is the most significant bit and comparing two vertices of
/// the same dimension by value is the same as comparing them as binary
/// numerals. That is the canonical vertex order used everywhere.
class Vertex {
 public:
  constexpr Vertex() = default;
  Vertex(int dim, Bits value);

  /// Parses a string over {0,1}; the empty string is the unique vertex of
  /// dimension 0.
  static Vertex parse(std::string_view text);

  constexpr int dim() const noexcept { return dim_; }
  constexpr Bits value() const noexcept { return value_; }

  bool bit(int i) const;
  Vertex with_bit(int i, bool b) const;

  /// Number of zeros among x_begin ... x_{end-1}.
  int count_zeros(int begin, int end) const;
  int count_zeros() const { return count_zeros(0, dim_); }

  /// Inserts `b` so that it ends up at index `i` of a sequence one longer.
  Vertex insert_bit(int i, bool b) const;
  /// Removes index `i`, yielding a sequence one shorter.
  Vertex erase_bit(int i) const;

  /// x_0 ... x_{len-1}.
  Vertex prefix(int len) const;
  /// `head` followed by this.
  Vertex prepend(bool head) const;
  /// Concatenation of this followed by `tail`.
  Vertex concat(const Vertex& tail) const;

  /// "0110"-style rendering; the empty vertex renders as "".
  std::string str() const;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  int dim_ = 0;
  Bits value_ = 0;
};

/// All 2^n vertices of dimension n in canonical order.
std::vector<Vertex> all_vertices(int n);

/// Position where two equal-dimension vertices differ, if they differ in
/// exactly one position; -1 otherwise.
int single_difference(const Vertex& a, const Vertex& b);

/// Renders the empty sequence as "ε" and everything else as digits.
std::string display(const Vertex& v);

}  // namespace cubecat
