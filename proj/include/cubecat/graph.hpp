#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cubecat/vertex.hpp"

namespace cubecat {

using Edge = std::pair<Vertex, Vertex>;

/// Finite directed graph with loops and at most one edge per ordered pair.
///
/// Vertices are bit sequences of a common dimension, kept in canonical
/// order; position in that order is the vertex *index*. The edge relation is
/// a dense boolean matrix over indices. Graphs are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Duplicate vertices and duplicate edges are collapsed. Throws
  /// DimensionError if a vertex has the wrong dimension or an edge endpoint
  /// is not a vertex.
  Graph(int dim, std::vector<Vertex> vertices, std::span<const Edge> edges);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const Vertex& vertex(std::size_t index) const { return vertices_.at(index); }

  std::optional<std::size_t> index_of(const Vertex& v) const;
  bool contains(const Vertex& v) const { return index_of(v).has_value(); }

  bool has_edge(std::size_t from, std::size_t to) const noexcept {
    return adjacency_[from * vertices_.size() + to] != 0;
  }
  bool has_edge(const Vertex& from, const Vertex& to) const;

  /// Every edge including loops, ordered by (source index, target index).
  std::vector<Edge> edges() const;
  std::vector<std::pair<std::size_t, std::size_t>> edge_indices() const;
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// True when the vertex set is all of 2^(Fin dim).
  bool is_full_cube() const noexcept {
    return dim_ < 31 && vertices_.size() == (std::size_t{1} << dim_);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_;
  }

 private:
  int dim_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::uint8_t> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A reflexive, transitive relation on the vertices of a graph.
class Preorder {
 public:
  Preorder(std::vector<Vertex> vertices, std::vector<std::uint8_t> relation);

  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::optional<std::size_t> index_of(const Vertex& v) const;

  bool leq(std::size_t a, std::size_t b) const noexcept {
    return relation_[a * vertices_.size() + b] != 0;
  }
  bool leq(const Vertex& a, const Vertex& b) const;

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::uint8_t> relation_;
};

/// Reflexive-transitive closure of the edge relation: v <= u iff a chain of
/// edges leads from v to u.
Preorder free_preorder(const Graph& g);

/// Closes an arbitrary preorder again; idempotent on the output of
/// free_preorder.
Preorder close(const Preorder& p);

/// Antisymmetric and total.
bool is_total_order(const Preorder& p);

/// Greatest lower bound of u and v, when one exists and is unique.
std::optional<Vertex> meet(const Preorder& p, const Vertex& u, const Vertex& v);
/// Least upper bound of u and v, when one exists and is unique.
std::optional<Vertex> join(const Preorder& p, const Vertex& u, const Vertex& v);

std::optional<Vertex> meet(const Graph& g, const Vertex& u, const Vertex& v);
std::optional<Vertex> join(const Graph& g, const Vertex& u, const Vertex& v);

/// Full subgraph on the vertices satisfying `keep`.
Graph full_subgraph(const Graph& g, const std::function<bool(const Vertex&)>& keep);

/// Same vertex set, every non-loop edge reversed.
Graph reversed(const Graph& g);

/// Forget orientation: symmetric closure of the edge relation.
Graph undirected(const Graph& g);

/// A vertex bijection g1 -> g2 as (source, image) pairs in g1's order.
using VertexBijection = std::vector<std::pair<Vertex, Vertex>>;

/// Searches for a bijection that preserves and reflects edges. Throws
/// CapacityError above 32 vertices.
std::optional<VertexBijection> graph_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace cubecat
