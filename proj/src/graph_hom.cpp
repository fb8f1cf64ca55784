#include "cubecat/graph_hom.hpp"

#include <algorithm>
#include <map>

#include "cubecat/errors.hpp"

namespace cubecat {

namespace {

bool same_graph(const GraphPtr& a, const GraphPtr& b) { return a == b || *a == *b; }

}  // namespace

bool is_graph_morphism(const Graph& source, const Graph& target, std::span<const std::size_t> image) {
  if (image.size() != source.size()) return false;
  for (const auto i : image) {
    if (i >= target.size()) return false;
  }
  for (const auto& [a, b] : source.edge_indices()) {
    if (!target.has_edge(image[a], image[b])) return false;
  }
  return true;
}

GraphMorphism::GraphMorphism(GraphPtr source, GraphPtr target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_) throw DimensionError("graph morphism needs a source and a target");
  if (!is_graph_morphism(*source_, *target_, image_)) {
    throw DimensionError("vertex map does not preserve edges");
  }
}

GraphMorphism GraphMorphism::from_function(GraphPtr source, GraphPtr target,
                                           const std::function<Vertex(const Vertex&)>& map) {
  std::vector<std::size_t> image;
  image.reserve(source->size());
  for (const auto& v : source->vertices()) {
    const Vertex w = map(v);
    const auto idx = target->index_of(w);
    if (!idx) throw DimensionError("image vertex '" + w.str() + "' is not in the target graph");
    image.push_back(*idx);
  }
  return GraphMorphism(std::move(source), std::move(target), std::move(image));
}

Vertex GraphMorphism::operator()(const Vertex& v) const {
  const auto idx = source_->index_of(v);
  if (!idx) throw DimensionError("vertex '" + v.str() + "' is not in the source graph");
  return target_->vertex(image_[*idx]);
}

bool GraphMorphism::is_injective() const {
  std::vector<std::size_t> sorted = image_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool GraphMorphism::is_surjective() const {
  std::vector<std::uint8_t> hit(target_->size(), 0);
  for (const auto i : image_) hit[i] = 1;
  return std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h != 0; });
}

std::string GraphMorphism::str() const {
  std::string out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i > 0) out += ' ';
    out += display(source_->vertex(i)) + "->" + display(target_->vertex(image_[i]));
  }
  return out;
}

bool operator==(const GraphMorphism& a, const GraphMorphism& b) {
  return a.image_ == b.image_ && same_graph(a.source_, b.source_) && same_graph(a.target_, b.target_);
}

GraphMorphism identity_morphism(const GraphPtr& g) {
  std::vector<std::size_t> image(g->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return GraphMorphism(g, g, std::move(image));
}

GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner) {
  if (!same_graph(inner.target_ptr(), outer.source_ptr())) {
    throw DimensionError("graph morphisms do not compose: target and source differ");
  }
  std::vector<std::size_t> image;
  image.reserve(inner.image_indices().size());
  for (const auto i : inner.image_indices()) image.push_back(outer.image_index(i));
  return GraphMorphism(inner.source_ptr(), outer.target_ptr(), std::move(image));
}

std::vector<GraphMorphism> enumerate_graph_homs(const GraphPtr& source, const GraphPtr& target,
                                                const EnumerationLimits& limits) {
  if (source->size() > limits.max_vertices || target->size() > limits.max_vertices) {
    throw CapacityError("graph hom enumeration is limited to " + std::to_string(limits.max_vertices) +
                        " vertices per graph (got " + std::to_string(source->size()) + " and " +
                        std::to_string(target->size()) + ")");
  }
  const std::size_t n = source->size();
  const std::size_t t = target->size();
  std::vector<GraphMorphism> out;
  std::vector<std::size_t> image(n, 0);

  // Depth-first over source vertices in canonical order; candidates in target
  // order, so results come out lexicographically sorted.
  std::function<void(std::size_t)> assign = [&](std::size_t depth) {
    if (depth == n) {
      if (out.size() >= limits.max_morphisms) {
        throw CapacityError("hom-set exceeds " + std::to_string(limits.max_morphisms) + " morphisms");
      }
      out.emplace_back(source, target, image);
      return;
    }
    for (std::size_t c = 0; c < t; ++c) {
      bool ok = true;
      for (std::size_t prev = 0; prev <= depth && ok; ++prev) {
        const std::size_t img = prev == depth ? c : image[prev];
        if (source->has_edge(prev, depth) && !target->has_edge(img, c)) ok = false;
        if (source->has_edge(depth, prev) && !target->has_edge(c, img)) ok = false;
      }
      if (!ok) continue;
      image[depth] = c;
      assign(depth + 1);
    }
  };
  assign(0);
  return out;
}

BoundTable::BoundTable(const Graph& g, Kind kind) : n_(g.size()), table_(n_ * n_, kNone) {
  const Preorder p = free_preorder(g);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      const auto v = kind == Kind::Meet ? meet(p, g.vertex(a), g.vertex(b)) : join(p, g.vertex(a), g.vertex(b));
      if (v) table_[a * n_ + b] = *g.index_of(*v);
    }
  }
}

bool preserves_bounds(const GraphMorphism& f, const BoundTable& source, const BoundTable& target) {
  const std::size_t n = f.source().size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto m = source(a, b);
      if (!m) continue;
      const auto image_bound = target(f.image_index(a), f.image_index(b));
      if (!image_bound || *image_bound != f.image_index(*m)) return false;
    }
  }
  return true;
}

bool preserves_meets(const GraphMorphism& f) {
  return preserves_bounds(f, BoundTable(f.source(), BoundTable::Kind::Meet),
                          BoundTable(f.target(), BoundTable::Kind::Meet));
}

bool preserves_joins(const GraphMorphism& f) {
  return preserves_bounds(f, BoundTable(f.source(), BoundTable::Kind::Join),
                          BoundTable(f.target(), BoundTable::Kind::Join));
}

namespace {

void require_cubes(const GraphMorphism& f) {
  if (!f.source().is_full_cube() || !f.target().is_full_cube()) {
    throw DimensionError("edge dimensions are only defined between cube graphs");
  }
}

}  // namespace

bool is_dimension_preserving(const GraphMorphism& f) {
  require_cubes(f);
  const Graph& src = f.source();
  const Graph& tgt = f.target();
  // Loops always land on loops; only the non-trivial dimensions need checking.
  std::vector<std::optional<EdgeDimension>> seen(static_cast<std::size_t>(src.dim()));
  for (const auto& [a, b] : src.edge_indices()) {
    if (a == b) {
      if (f.image_index(a) != f.image_index(b)) return false;
      continue;
    }
    const int d = *edge_dimension(src.vertex(a), src.vertex(b));
    const EdgeDimension image_dim = edge_dimension(tgt.vertex(f.image_index(a)), tgt.vertex(f.image_index(b)));
    auto& slot = seen[static_cast<std::size_t>(d)];
    if (!slot) {
      slot = image_dim;
    } else if (*slot != image_dim) {
      return false;
    }
  }
  return true;
}

bool is_dimension_injective(const GraphMorphism& f) {
  require_cubes(f);
  const Graph& src = f.source();
  const Graph& tgt = f.target();
  std::map<int, int> origin;  // image dimension -> source dimension
  for (const auto& [a, b] : src.edge_indices()) {
    if (a == b) continue;
    const EdgeDimension image_dim = edge_dimension(tgt.vertex(f.image_index(a)), tgt.vertex(f.image_index(b)));
    if (!image_dim) continue;
    const int d = *edge_dimension(src.vertex(a), src.vertex(b));
    const auto [it, inserted] = origin.emplace(*image_dim, d);
    if (!inserted && it->second != d) return false;
  }
  return true;
}

std::vector<std::size_t> nonempty_fibre_sizes(const GraphMorphism& f) {
  std::vector<std::size_t> counts(f.target().size(), 0);
  for (const auto i : f.image_indices()) ++counts[i];
  std::vector<std::size_t> out;
  for (const auto c : counts) {
    if (c > 0) out.push_back(c);
  }
  return out;
}

}  // namespace cubecat
