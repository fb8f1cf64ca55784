#include "cubecat/cubes.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>

#include "cubecat/errors.hpp"

namespace cubecat {

std::string to_string(CubeKind kind) { return kind == CubeKind::Standard ? "standard" : "twisted"; }

CubeKind parse_cube_kind(const std::string& text) {
  if (text == "standard") return CubeKind::Standard;
  if (text == "twisted") return CubeKind::Twisted;
  throw ParseError("unknown cube kind '" + text + "' (expected standard or twisted)");
}

std::string EdgeLabel::str() const {
  if (is_loop()) return display(vertex_);
  return "⟨" + std::to_string(*dimension_) + ", " + display(vertex_) + "⟩";
}

LabeledCubeGraph::LabeledCubeGraph(CubeKind kind, int n, std::vector<LabeledEdge> edges)
    : kind_(kind), n_(n), edges_(std::move(edges)), graph_([&] {
        std::vector<Edge> plain;
        plain.reserve(edges_.size());
        for (const auto& e : edges_) plain.emplace_back(e.source, e.target);
        return Graph(n, all_vertices(n), plain);
      }()) {
  if (graph_.edge_count() != edges_.size()) {
    throw DimensionError("labeled cube has parallel edges");
  }
}

std::optional<LabeledEdge> LabeledCubeGraph::find(const Vertex& source, const Vertex& target) const {
  for (const auto& e : edges_) {
    if (e.source == source && e.target == target) return e;
  }
  return std::nullopt;
}

LabeledEdge LabeledCubeGraph::source_of(const EdgeLabel& label) const {
  for (const auto& e : edges_) {
    if (e.label == label) return e;
  }
  throw DimensionError("no edge labelled " + label.str());
}

namespace {

Graph iterate(const Graph& g, bool twist) {
  std::vector<Vertex> vertices;
  vertices.reserve(2 * g.size());
  for (const bool head : {false, true}) {
    for (const auto& v : g.vertices()) vertices.push_back(v.prepend(head));
  }
  std::vector<Edge> edges;
  for (const auto& [s, t] : g.edges()) {
    if (twist) {
      edges.emplace_back(t.prepend(false), s.prepend(false));
    } else {
      edges.emplace_back(s.prepend(false), t.prepend(false));
    }
    edges.emplace_back(s.prepend(true), t.prepend(true));
  }
  for (const auto& v : g.vertices()) edges.emplace_back(v.prepend(false), v.prepend(true));
  return Graph(g.dim() + 1, std::move(vertices), edges);
}

void check_dimension(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw DimensionError("cube dimension " + std::to_string(n) + " out of range");
  }
}

}  // namespace

Graph ordinary_iteration(const Graph& g) { return iterate(g, false); }
Graph twisted_iteration(const Graph& g) { return iterate(g, true); }

Graph point_graph() {
  const std::array<Edge, 1> loop{Edge{Vertex(), Vertex()}};
  return Graph(0, {Vertex()}, loop);
}

Graph cube_rec(CubeKind kind, int n) {
  check_dimension(n);
  Graph g = point_graph();
  for (int k = 0; k < n; ++k) g = kind == CubeKind::Standard ? ordinary_iteration(g) : twisted_iteration(g);
  return g;
}

Graph standard_cube_rec(int n) { return cube_rec(CubeKind::Standard, n); }
Graph twisted_cube_rec(int n) { return cube_rec(CubeKind::Twisted, n); }

namespace {

std::atomic<bool> parity_flip_enabled{true};
std::mutex cube_cache_mutex;
std::array<std::vector<std::shared_ptr<const Graph>>, 2> cube_cache;

}  // namespace

namespace mutation {

void set_twisted_parity_flip(bool enabled) {
  const std::lock_guard<std::mutex> lock(cube_cache_mutex);
  parity_flip_enabled = enabled;
  cube_cache[1].clear();
}

bool twisted_parity_flip() { return parity_flip_enabled; }

}  // namespace mutation

bool edge_source_bit(CubeKind kind, int i, const Vertex& residue) {
  if (kind == CubeKind::Standard || !parity_flip_enabled) return false;
  return residue.count_zeros(0, i) % 2 == 1;
}

LabeledCubeGraph cube_nonrec(CubeKind kind, int n) {
  check_dimension(n);
  std::vector<LabeledEdge> edges;
  for (const auto& v : all_vertices(n)) edges.push_back({EdgeLabel::loop(v), v, v});
  if (n > 0) {
    for (int i = 0; i < n; ++i) {
      for (const auto& residue : all_vertices(n - 1)) {
        const bool b = edge_source_bit(kind, i, residue);
        edges.push_back({EdgeLabel::along(i, residue), residue.insert_bit(i, b), residue.insert_bit(i, !b)});
      }
    }
  }
  return LabeledCubeGraph(kind, n, std::move(edges));
}

LabeledCubeGraph standard_cube_nonrec(int n) { return cube_nonrec(CubeKind::Standard, n); }
LabeledCubeGraph twisted_cube_nonrec(int n) { return cube_nonrec(CubeKind::Twisted, n); }

std::shared_ptr<const Graph> cube(CubeKind kind, int n) {
  check_dimension(n);
  const std::lock_guard<std::mutex> lock(cube_cache_mutex);
  auto& slot = cube_cache[kind == CubeKind::Standard ? 0 : 1];
  if (slot.size() <= static_cast<std::size_t>(n)) slot.resize(static_cast<std::size_t>(n) + 1);
  auto& entry = slot[static_cast<std::size_t>(n)];
  if (!entry) entry = std::make_shared<const Graph>(cube_nonrec(kind, n).graph());
  return entry;
}

Graph base_subgraph(int n) {
  const Graph full = standard_cube_nonrec(n).graph();
  return full_subgraph(full, [](const Vertex& v) { return std::popcount(v.value()) <= 1; });
}

EdgeDimension edge_dimension(const EdgeLabel& label) { return label.dimension(); }

EdgeDimension edge_dimension(const Vertex& u, const Vertex& v) {
  if (u == v) return std::nullopt;
  const int i = single_difference(u, v);
  if (i < 0) throw DimensionError("(" + u.str() + ", " + v.str() + ") is not a cube edge");
  return i;
}

}  // namespace cubecat
