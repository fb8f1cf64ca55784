#include "cubecat/standard_cats.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>

#include "cubecat/errors.hpp"

namespace cubecat {

GraphPtr base_graph(int n) {
  if (n < 0 || n > kMaxDimension) throw DimensionError("base graph dimension out of range");
  static std::mutex mutex;
  static std::vector<GraphPtr> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() <= static_cast<std::size_t>(n)) cache.resize(static_cast<std::size_t>(n) + 1);
  auto& entry = cache[static_cast<std::size_t>(n)];
  if (!entry) entry = std::make_shared<const Graph>(base_subgraph(n));
  return entry;
}

namespace {

Vertex base_vector(int m, int i) { return Vertex(m, 0).with_bit(i, true); }

}  // namespace

GraphMorphism extend_base_morphism(const GraphMorphism& h) {
  const int m = h.source().dim();
  if (h.source() != *base_graph(m)) throw DimensionError("extend_base_morphism expects a morphism out of B_m");
  const BoundTable joins(h.target(), BoundTable::Kind::Join);
  const Graph& base = h.source();
  const auto origin_image = h.image_index(*base.index_of(Vertex(m, 0)));
  std::vector<std::size_t> base_images;
  for (int i = 0; i < m; ++i) base_images.push_back(h.image_index(*base.index_of(base_vector(m, i))));

  const GraphPtr source = cube(CubeKind::Standard, m);
  std::vector<std::size_t> image;
  image.reserve(source->size());
  for (const auto& v : source->vertices()) {
    std::size_t acc = origin_image;
    for (int i = 0; i < m; ++i) {
      if (!v.bit(i)) continue;
      const auto j = joins(acc, base_images[static_cast<std::size_t>(i)]);
      if (!j) throw DimensionError("target has no join needed to extend the base morphism");
      acc = *j;
    }
    image.push_back(acc);
  }
  return GraphMorphism(source, h.target_ptr(), std::move(image));
}

GraphMorphism restrict_to_base(const GraphMorphism& g) {
  const int m = g.source().dim();
  if (g.source() != *cube(CubeKind::Standard, m)) throw DimensionError("restrict_to_base expects a morphism out of C^m");
  const GraphPtr base = base_graph(m);
  std::vector<std::size_t> image;
  for (const auto& v : base->vertices()) image.push_back(g.image_index(*g.source().index_of(v)));
  return GraphMorphism(base, g.target_ptr(), std::move(image));
}

CoordinateChoice split_bch(const BchMorphism& a) {
  const int n = a.m();
  const int m = a.n();
  Vertex z(n, 0);
  std::vector<std::optional<int>> e(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (a[j].is_constant()) {
      z = z.with_bit(j, a[j].constant_value());
    } else {
      e[static_cast<std::size_t>(j)] = a[j].coordinate();
    }
  }
  return {z, PartialInjection(n, m, std::move(e))};
}

BchMorphism merge_bch(const CoordinateChoice& c, int m) {
  const int n = c.origin.dim();
  if (c.coordinates.m() != n || c.coordinates.n() != m) throw DimensionError("coordinate choice has the wrong shape");
  std::vector<BchValue> map;
  for (int j = 0; j < n; ++j) {
    if (const auto i = c.coordinates[j]) {
      if (c.origin.bit(j)) throw DimensionError("copied coordinate must start at 0");
      map.push_back(BchValue::coordinate(*i));
    } else {
      map.push_back(BchValue::constant(c.origin.bit(j)));
    }
  }
  return BchMorphism(n, m, std::move(map));
}

OriginChoice transpose_choice(const CoordinateChoice& c) {
  return {c.origin, transpose_partial_injection(c.coordinates)};
}

CoordinateChoice transpose_choice(const OriginChoice& c) {
  return {c.origin, transpose_partial_injection(c.edges)};
}

GraphMorphism base_morphism(const OriginChoice& c) {
  const int m = c.edges.m();
  const int n = c.edges.n();
  if (c.origin.dim() != n) throw DimensionError("origin has the wrong dimension");
  const Vertex origin(m, 0);
  return GraphMorphism::from_function(base_graph(m), cube(CubeKind::Standard, n), [&](const Vertex& v) {
    if (v == origin) return c.origin;
    const int i = single_difference(v, origin);
    const auto j = c.edges[i];
    if (!j) return c.origin;
    if (c.origin.bit(*j)) throw DimensionError("base edge must leave the origin's image along a 0 coordinate");
    return c.origin.with_bit(*j, true);
  });
}

OriginChoice origin_choice(const GraphMorphism& h) {
  const int m = h.source().dim();
  const int n = h.target().dim();
  if (h.source() != *base_graph(m)) throw DimensionError("origin_choice expects a morphism out of B_m");
  const Vertex z = h(Vertex(m, 0));
  std::vector<std::optional<int>> d(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Vertex w = h(base_vector(m, i));
    if (w != z) d[static_cast<std::size_t>(i)] = single_difference(z, w);
  }
  try {
    return {z, PartialInjection(m, n, std::move(d))};
  } catch (const DimensionError&) {
    throw DimensionError("base morphism sends two edges along one dimension, so it does not preserve meets");
  }
}

GraphMorphism bchop_to_graphmeet(const BchMorphism& a) {
  return extend_base_morphism(base_morphism(transpose_choice(split_bch(a))));
}

BchMorphism graphmeet_to_bchop(const GraphMorphism& g) {
  const int m = g.source().dim();
  BchMorphism a = merge_bch(transpose_choice(origin_choice(restrict_to_base(g))), m);
  if (bchop_to_graphmeet(a) != g) throw DimensionError("graph morphism does not preserve joins");
  return a;
}

BchMorphism bchop_compose(const BchMorphism& outer, const BchMorphism& inner) {
  return bch_compose(inner, outer);
}

std::vector<BchMorphism> enumerate_bchop(int m, int n) { return enumerate_bch(n, m); }

std::vector<GraphMorphism> enumerate_graphcube(int m, int n, const EnumerationLimits& limits) {
  return enumerate_graph_homs(cube(CubeKind::Standard, m), cube(CubeKind::Standard, n), limits);
}

namespace {

bool image_less(const GraphMorphism& a, const GraphMorphism& b) {
  const auto x = a.image_indices();
  const auto y = b.image_indices();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

std::vector<GraphMorphism> enumerate_graphmeet(int m, int n) {
  std::vector<GraphMorphism> out;
  const auto injections = enumerate_partial_injections(m, n);
  for (const auto& z : all_vertices(n)) {
    for (const auto& d : injections) {
      bool starts_at_zero = true;
      for (int i = 0; i < m && starts_at_zero; ++i) {
        if (const auto j = d[i]) starts_at_zero = !z.bit(*j);
      }
      if (starts_at_zero) out.push_back(extend_base_morphism(base_morphism({z, d})));
    }
  }
  std::sort(out.begin(), out.end(), image_less);
  return out;
}

std::vector<GraphMorphism> enumerate_graphmeet_naive(int m, int n, const EnumerationLimits& limits) {
  const GraphPtr src = cube(CubeKind::Standard, m);
  const GraphPtr tgt = cube(CubeKind::Standard, n);
  const BoundTable src_meet(*src, BoundTable::Kind::Meet);
  const BoundTable tgt_meet(*tgt, BoundTable::Kind::Meet);
  const BoundTable src_join(*src, BoundTable::Kind::Join);
  const BoundTable tgt_join(*tgt, BoundTable::Kind::Join);
  std::vector<GraphMorphism> out;
  for (auto& f : enumerate_graph_homs(src, tgt, limits)) {
    if (preserves_bounds(f, src_meet, tgt_meet) && preserves_bounds(f, src_join, tgt_join)) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<GraphMorphism> enumerate_graphdim(int m, int n, const EnumerationLimits& limits) {
  std::vector<GraphMorphism> out;
  for (auto& f : enumerate_graphcube(m, n, limits)) {
    if (is_dimension_preserving(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace cubecat
