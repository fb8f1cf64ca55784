#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubecat/cubes.hpp"
#include "cubecat/graph.hpp"

namespace cubecat {

using GraphPtr = std::shared_ptr<const Graph>;

/// A vertex function between two graphs that sends edges to edges.
///
/// The map is stored as target indices, one per source vertex in the source's
/// canonical order. Construction verifies edge preservation, so a
/// GraphMorphism value is always a genuine graph morphism.
class GraphMorphism {
 public:
  GraphMorphism(GraphPtr source, GraphPtr target, std::vector<std::size_t> image);

  static GraphMorphism from_function(GraphPtr source, GraphPtr target,
                                     const std::function<Vertex(const Vertex&)>& map);

  const Graph& source() const noexcept { return *source_; }
  const Graph& target() const noexcept { return *target_; }
  const GraphPtr& source_ptr() const noexcept { return source_; }
  const GraphPtr& target_ptr() const noexcept { return target_; }

  std::span<const std::size_t> image_indices() const noexcept { return image_; }
  std::size_t image_index(std::size_t source_index) const { return image_.at(source_index); }
  Vertex operator()(const Vertex& v) const;

  bool is_injective() const;
  bool is_surjective() const;

  /// "00->0 01->0 10->0 11->1".
  std::string str() const;

  friend bool operator==(const GraphMorphism& a, const GraphMorphism& b);

 private:
  GraphPtr source_;
  GraphPtr target_;
  std::vector<std::size_t> image_;
};

bool is_graph_morphism(const Graph& source, const Graph& target, std::span<const std::size_t> image);

GraphMorphism identity_morphism(const GraphPtr& g);

/// outer ∘ inner. Throws DimensionError unless inner's target equals outer's
/// source.
GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner);

struct EnumerationLimits {
  std::size_t max_vertices = 8;
  std::size_t max_morphisms = 1'000'000;
};

/// Every graph morphism source -> target, ordered lexicographically by the
/// tuple of images (source vertices in canonical order). Backtracking with
/// edge checks against already-assigned vertices. Throws CapacityError when
/// either graph exceeds `limits.max_vertices` or the result would exceed
/// `limits.max_morphisms`.
std::vector<GraphMorphism> enumerate_graph_homs(const GraphPtr& source, const GraphPtr& target,
                                                const EnumerationLimits& limits = {});

/// Pairwise meet (or join) of a graph's free preorder by vertex index;
/// nullopt where none exists.
class BoundTable {
 public:
  enum class Kind { Meet, Join };
  BoundTable(const Graph& g, Kind kind);

  std::size_t size() const noexcept { return n_; }
  std::optional<std::size_t> operator()(std::size_t a, std::size_t b) const {
    const auto v = table_[a * n_ + b];
    if (v == kNone) return std::nullopt;
    return v;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t n_;
  std::vector<std::size_t> table_;
};

/// Every existing meet u ⊓ v is sent to the meet f(u) ⊓ f(v), which must exist.
bool preserves_meets(const GraphMorphism& f);
bool preserves_joins(const GraphMorphism& f);
bool preserves_bounds(const GraphMorphism& f, const BoundTable& source, const BoundTable& target);

/// Edges of equal dimension go to edges of equal dimension. Both graphs must
/// be full cubes (standard or twisted); the image of the edge (u, v) is
/// (f(u), f(v)).
bool is_dimension_preserving(const GraphMorphism& f);

/// Two edges whose images lie in the same non-trivial dimension are parallel.
bool is_dimension_injective(const GraphMorphism& f);

/// Sizes of the non-empty fibres of the vertex map, by target index.
std::vector<std::size_t> nonempty_fibre_sizes(const GraphMorphism& f);

}  // namespace cubecat
