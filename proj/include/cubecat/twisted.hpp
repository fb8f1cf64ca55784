#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubecat/graph_hom.hpp"
#include "cubecat/vertex.hpp"

namespace cubecat {

/// Bitwise complement. As a numeral this sends i to 2^n - 1 - i; it does not
/// reverse the sequence.
Vertex rev(const Vertex& x);

/// The k-th vertex (k given as an n-bit numeral) along the Hamiltonian path
/// of T^n:  f(0·x) = 0·f(rev x),  f(1·x) = 1·f(x).
Vertex hamiltonian_f(const Vertex& k);
Vertex hamiltonian_f(int n, Bits k);

/// Position of v in the total order of T^n:  g(0·x) = 0·rev(g x),
/// g(1·x) = 1·g(x). Inverse to hamiltonian_f.
Vertex order_g(const Vertex& v);

/// The 2^n - 1 edges f(k) -> f(k+1) of the Hamiltonian path through T^n.
std::vector<Edge> hamiltonian_path(int n);

/// The surjective dimension-preserving T^m -> T^n that drops the last m-n
/// coordinates, built as an (m-n)-fold composite of single truncations.
/// Throws DimensionError when m < n.
GraphMorphism unique_surjection(int m, int n);

enum class Trit : std::uint8_t { Zero, One, Star };

char to_char(Trit t);
/// Parses a string over {0,1,*}.
std::vector<Trit> parse_trits(std::string_view text);
std::string trits_str(const std::vector<Trit>& seq);
int star_count(const std::vector<Trit>& seq);

/// A face of T^n: an assignment Fin n -> {0,1,⋆}. It selects the vertices
/// that agree with it wherever it is not ⋆.
class Face {
 public:
  explicit Face(std::vector<Trit> assignment) : assignment_(std::move(assignment)) {}
  static Face parse(std::string_view text) { return Face(parse_trits(text)); }

  int n() const noexcept { return static_cast<int>(assignment_.size()); }
  int dimension() const { return star_count(assignment_); }
  const std::vector<Trit>& assignment() const noexcept { return assignment_; }
  bool matches(const Vertex& v) const;
  std::string str() const { return trits_str(assignment_); }

  friend auto operator<=>(const Face&, const Face&) = default;

 private:
  std::vector<Trit> assignment_;
};

/// All faces of T^n with exactly k stars, lexicographic with 0 < 1 < ⋆.
std::vector<Face> faces(int n, int k);
/// C(n,k) · 2^(n-k).
std::uint64_t face_count(int n, int k);

/// The injective dimension-preserving T^k -> T^n whose image is the face
/// (k = its dimension). Source coordinate j lands on the j-th star position,
/// complemented when the zero counts of the image prefix and of the source
/// prefix differ in parity; this keeps every edge pointing the right way.
GraphMorphism face_to_injection(const Face& face);

/// ⋆ at the coordinates where the image of f varies, the constant bit
/// elsewhere.
Face image_face(const GraphMorphism& f);

struct Factorization {
  int k;
  GraphMorphism surjection;  ///< T^m -> T^k
  GraphMorphism injection;   ///< T^k -> T^n
};

/// f = injection ∘ surjection with the surjection the unique one onto T^k and
/// the injection the one attached to f's image face. Throws DimensionError
/// if f is not dimension-preserving.
Factorization factorize(const GraphMorphism& f);

/// (x_0..x_m) ⊗ (y_0..y_n) = x·y', where y' = y if x has an even number of
/// zeros and rev(y) otherwise.
Vertex monoidal_tensor(const Vertex& x, const Vertex& y);
inline int monoidal_tensor(int m, int n) { return m + n; }

std::vector<GraphMorphism> enumerate_twcubecat(int m, int n, const EnumerationLimits& limits = {});
/// twcubecat(m, n) filtered by dimension preservation.
std::vector<GraphMorphism> enumerate_twgraphdim(int m, int n, const EnumerationLimits& limits = {});

}  // namespace cubecat
