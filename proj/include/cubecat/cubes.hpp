#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubecat/graph.hpp"
#include "cubecat/vertex.hpp"

namespace cubecat {

enum class CubeKind { Standard, Twisted };

std::string to_string(CubeKind kind);
CubeKind parse_cube_kind(const std::string& text);

/// Dimension of an edge: the coordinate it moves along, or nullopt for a
/// loop (the trivial dimension).
using EdgeDimension = std::optional<int>;

/// Name of an edge in the closed-form cube: either the loop at a vertex, or
/// the pair <i, residue> where the residue is the n-1 coordinates other
/// than i.
class EdgeLabel {
 public:
  static EdgeLabel loop(const Vertex& at) { return EdgeLabel(std::nullopt, at); }
  static EdgeLabel along(int dimension, const Vertex& residue) { return EdgeLabel(dimension, residue); }

  bool is_loop() const noexcept { return !dimension_.has_value(); }
  EdgeDimension dimension() const noexcept { return dimension_; }
  /// The loop's vertex, or the residue of a non-trivial edge.
  const Vertex& vertex() const noexcept { return vertex_; }

  /// "⟨i, residue⟩" with ε for the empty residue; loops render as the vertex.
  std::string str() const;

  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;

 private:
  EdgeLabel(EdgeDimension dimension, const Vertex& v) : dimension_(dimension), vertex_(v) {}

  EdgeDimension dimension_;
  Vertex vertex_;
};

struct LabeledEdge {
  EdgeLabel label;
  Vertex source;
  Vertex target;
};

/// A cube graph together with the bijection between edge labels and edges.
class LabeledCubeGraph {
 public:
  LabeledCubeGraph(CubeKind kind, int n, std::vector<LabeledEdge> edges);

  CubeKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  const Graph& graph() const noexcept { return graph_; }
  /// Loops first (in vertex order), then non-trivial edges by (i, residue).
  const std::vector<LabeledEdge>& edges() const noexcept { return edges_; }

  std::optional<LabeledEdge> find(const Vertex& source, const Vertex& target) const;
  LabeledEdge source_of(const EdgeLabel& label) const;

 private:
  CubeKind kind_;
  int n_;
  std::vector<LabeledEdge> edges_;
  Graph graph_;
};

/// Bool x V with two copies of E and a connecting edge (0,v) -> (1,v). The
/// new coordinate becomes index 0 of every vertex.
Graph ordinary_iteration(const Graph& g);
/// As ordinary_iteration, but the edges of the 0-copy are reversed.
Graph twisted_iteration(const Graph& g);

/// One vertex carrying one loop.
Graph point_graph();

Graph standard_cube_rec(int n);
Graph twisted_cube_rec(int n);
Graph cube_rec(CubeKind kind, int n);

/// Orientation bit b of the edge <i, residue>: the edge runs from b to 1-b
/// in coordinate i. Always 0 for standard cubes; for twisted cubes, 1 iff
/// residue_0 ... residue_{i-1} contains an odd number of zeros.
bool edge_source_bit(CubeKind kind, int i, const Vertex& residue);

LabeledCubeGraph standard_cube_nonrec(int n);
LabeledCubeGraph twisted_cube_nonrec(int n);
LabeledCubeGraph cube_nonrec(CubeKind kind, int n);

/// Shared, cached closed-form cube graph. Thread-safe.
std::shared_ptr<const Graph> cube(CubeKind kind, int n);

/// Full subgraph of the standard n-cube on the origin and the n one-hot
/// vertices.
Graph base_subgraph(int n);

EdgeDimension edge_dimension(const EdgeLabel& label);
/// Dimension of the edge (u, v) of a cube graph, read off the endpoints.
/// Throws if u and v differ in more than one coordinate.
EdgeDimension edge_dimension(const Vertex& u, const Vertex& v);

namespace mutation {

/// Test hook: with the flip disabled the closed-form twisted builder orients
/// every edge like the standard cube. Toggling clears the cube cache. Used
/// only to show that the verification suites notice the change.
void set_twisted_parity_flip(bool enabled);
bool twisted_parity_flip();

}  // namespace mutation

}  // namespace cubecat
