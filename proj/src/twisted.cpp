#include "cubecat/twisted.hpp"

#include <functional>

#include "cubecat/errors.hpp"

namespace cubecat {

Vertex rev(const Vertex& x) {
  const Bits mask = x.dim() == 0 ? 0 : ((Bits{1} << x.dim()) - 1);
  return Vertex(x.dim(), ~x.value() & mask);
}

Vertex hamiltonian_f(const Vertex& k) {
  if (k.dim() == 0) return k;
  const Vertex tail = k.erase_bit(0);
  if (k.bit(0)) return hamiltonian_f(tail).prepend(true);
  return hamiltonian_f(rev(tail)).prepend(false);
}

Vertex hamiltonian_f(int n, Bits k) { return hamiltonian_f(Vertex(n, k)); }

Vertex order_g(const Vertex& v) {
  if (v.dim() == 0) return v;
  const Vertex tail = v.erase_bit(0);
  if (v.bit(0)) return order_g(tail).prepend(true);
  return rev(order_g(tail)).prepend(false);
}

std::vector<Edge> hamiltonian_path(int n) {
  if (n < 0 || n > kMaxDimension) throw DimensionError("dimension out of range");
  std::vector<Edge> out;
  const Bits count = Bits{1} << n;
  for (Bits k = 0; k + 1 < count; ++k) out.emplace_back(hamiltonian_f(n, k), hamiltonian_f(n, k + 1));
  return out;
}

GraphMorphism unique_surjection(int m, int n) {
  if (m < n) {
    throw DimensionError("no surjection T^" + std::to_string(m) + " -> T^" + std::to_string(n) + " exists when m < n");
  }
  GraphMorphism result = identity_morphism(cube(CubeKind::Twisted, m));
  for (int d = m; d > n; --d) {
    const auto drop_last = GraphMorphism::from_function(cube(CubeKind::Twisted, d), cube(CubeKind::Twisted, d - 1),
                                                        [d](const Vertex& v) { return v.prefix(d - 1); });
    result = compose(drop_last, result);
  }
  return result;
}

char to_char(Trit t) {
  switch (t) {
    case Trit::Zero:
      return '0';
    case Trit::One:
      return '1';
    case Trit::Star:
      return '*';
  }
  return '?';
}

std::vector<Trit> parse_trits(std::string_view text) {
  std::vector<Trit> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0':
        out.push_back(Trit::Zero);
        break;
      case '1':
        out.push_back(Trit::One);
        break;
      case '*':
        out.push_back(Trit::Star);
        break;
      default:
        throw ParseError(std::string("expected '0', '1' or '*', found '") + text[i] + "'", i);
    }
  }
  return out;
}

std::string trits_str(const std::vector<Trit>& seq) {
  std::string out;
  out.reserve(seq.size());
  for (const Trit t : seq) out.push_back(to_char(t));
  return out;
}

int star_count(const std::vector<Trit>& seq) {
  int stars = 0;
  for (const Trit t : seq) stars += t == Trit::Star ? 1 : 0;
  return stars;
}

bool Face::matches(const Vertex& v) const {
  if (v.dim() != n()) return false;
  for (int i = 0; i < n(); ++i) {
    const Trit t = assignment_[static_cast<std::size_t>(i)];
    if (t != Trit::Star && (t == Trit::One) != v.bit(i)) return false;
  }
  return true;
}

std::vector<Face> faces(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DimensionError("faces(n, k) needs 0 <= k <= n");
  std::vector<Face> out;
  std::vector<Trit> current;
  std::function<void(int)> extend = [&](int stars_left) {
    const int remaining = n - static_cast<int>(current.size());
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (const Trit t : {Trit::Zero, Trit::One, Trit::Star}) {
      const int left = stars_left - (t == Trit::Star ? 1 : 0);
      if (left < 0 || left > remaining - 1) continue;
      current.push_back(t);
      extend(left);
      current.pop_back();
    }
  };
  extend(k);
  return out;
}

std::uint64_t face_count(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DimensionError("face_count(n, k) needs 0 <= k <= n");
  std::uint64_t binom = 1;
  for (int i = 1; i <= k; ++i) binom = binom * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return binom << (n - k);
}

GraphMorphism face_to_injection(const Face& face) {
  const int n = face.n();
  const int k = face.dimension();
  return GraphMorphism::from_function(cube(CubeKind::Twisted, k), cube(CubeKind::Twisted, n), [&](const Vertex& y) {
    Vertex x(n, 0);
    int image_zeros = 0;
    int source_zeros = 0;
    int j = 0;
    for (int i = 0; i < n; ++i) {
      const Trit t = face.assignment()[static_cast<std::size_t>(i)];
      bool bit = false;
      if (t == Trit::Star) {
        const bool flip = (image_zeros + source_zeros) % 2 == 1;
        const bool yj = y.bit(j++);
        source_zeros += yj ? 0 : 1;
        bit = yj != flip;
      } else {
        bit = t == Trit::One;
      }
      image_zeros += bit ? 0 : 1;
      x = x.with_bit(i, bit);
    }
    return x;
  });
}

Face image_face(const GraphMorphism& f) {
  const int n = f.target().dim();
  const auto images = f.image_indices();
  std::vector<Trit> out(static_cast<std::size_t>(n), Trit::Star);
  for (int i = 0; i < n; ++i) {
    const bool first = f.target().vertex(images[0]).bit(i);
    bool constant = true;
    for (const auto idx : images) constant = constant && f.target().vertex(idx).bit(i) == first;
    if (constant) out[static_cast<std::size_t>(i)] = first ? Trit::One : Trit::Zero;
  }
  return Face(std::move(out));
}

Factorization factorize(const GraphMorphism& f) {
  if (!is_dimension_preserving(f)) throw DimensionError("factorize expects a dimension-preserving morphism");
  const Face face = image_face(f);
  const int k = face.dimension();
  Factorization result{k, unique_surjection(f.source().dim(), k), face_to_injection(face)};
  if (compose(result.injection, result.surjection) != f) {
    throw std::logic_error("factorisation does not recompose to " + f.str());
  }
  return result;
}

Vertex monoidal_tensor(const Vertex& x, const Vertex& y) {
  return x.concat(x.count_zeros() % 2 == 0 ? y : rev(y));
}

std::vector<GraphMorphism> enumerate_twcubecat(int m, int n, const EnumerationLimits& limits) {
  return enumerate_graph_homs(cube(CubeKind::Twisted, m), cube(CubeKind::Twisted, n), limits);
}

std::vector<GraphMorphism> enumerate_twgraphdim(int m, int n, const EnumerationLimits& limits) {
  std::vector<GraphMorphism> out;
  for (auto& f : enumerate_twcubecat(m, n, limits)) {
    if (is_dimension_preserving(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace cubecat
