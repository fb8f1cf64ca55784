#include "cubecat/graph.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "cubecat/errors.hpp"

namespace cubecat {

namespace {

std::optional<std::size_t> find_index(std::span<const Vertex> sorted, const Vertex& v) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

Graph::Graph(int dim, std::vector<Vertex> vertices, std::span<const Edge> edges)
    : dim_(dim), vertices_(std::move(vertices)) {
  for (const auto& v : vertices_) {
    if (v.dim() != dim_) {
      throw DimensionError("vertex '" + v.str() + "' does not have dimension " +
                           std::to_string(dim_));
    }
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  const std::size_t n = vertices_.size();
  adjacency_.assign(n * n, 0);
  for (const auto& [from, to] : edges) {
    const auto a = index_of(from);
    const auto b = index_of(to);
    if (!a || !b) {
      throw DimensionError("edge (" + from.str() + ", " + to.str() + ") has an endpoint outside the graph");
    }
    auto& cell = adjacency_[*a * n + *b];
    if (cell == 0) {
      cell = 1;
      ++edge_count_;
    }
  }
}

std::optional<std::size_t> Graph::index_of(const Vertex& v) const { return find_index(vertices_, v); }

bool Graph::has_edge(const Vertex& from, const Vertex& to) const {
  const auto a = index_of(from);
  const auto b = index_of(to);
  return a && b && has_edge(*a, *b);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_indices() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (has_edge(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [a, b] : edge_indices()) out.emplace_back(vertices_[a], vertices_[b]);
  return out;
}

Preorder::Preorder(std::vector<Vertex> vertices, std::vector<std::uint8_t> relation)
    : vertices_(std::move(vertices)), relation_(std::move(relation)) {
  if (relation_.size() != vertices_.size() * vertices_.size()) {
    throw DimensionError("preorder relation has the wrong size");
  }
}

std::optional<std::size_t> Preorder::index_of(const Vertex& v) const {
  return find_index(vertices_, v);
}

bool Preorder::leq(const Vertex& a, const Vertex& b) const {
  const auto i = index_of(a);
  const auto j = index_of(b);
  if (!i || !j) throw DimensionError("vertex not in preorder");
  return leq(*i, *j);
}

Preorder close(const Preorder& p) {
  const std::size_t n = p.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) rel[a * n + b] = p.leq(a, b) ? 1 : 0;
    rel[a * n + a] = 1;
  }
  // Warshall: after round k, rel holds paths whose interior uses indices < k.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (rel[a * n + k] == 0) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (rel[k * n + b] != 0) rel[a * n + b] = 1;
      }
    }
  }
  return Preorder(std::vector<Vertex>(p.vertices().begin(), p.vertices().end()), std::move(rel));
}

Preorder free_preorder(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (const auto& [a, b] : g.edge_indices()) rel[a * n + b] = 1;
  return close(Preorder(std::vector<Vertex>(g.vertices().begin(), g.vertices().end()), std::move(rel)));
}

bool is_total_order(const Preorder& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool ab = p.leq(a, b);
      const bool ba = p.leq(b, a);
      if (ab == ba) return false;  // incomparable, or a cycle between distinct vertices
    }
  }
  return true;
}

namespace {

// Unique greatest element of {w : w <= u, w <= v}, or with `upper` the unique
// least element of {w : u <= w, v <= w}.
std::optional<Vertex> extremal_bound(const Preorder& p, const Vertex& u, const Vertex& v, bool upper) {
  const auto iu = p.index_of(u);
  const auto iv = p.index_of(v);
  if (!iu || !iv) throw DimensionError("vertex not in graph");
  const std::size_t n = p.size();
  auto below = [&](std::size_t a, std::size_t b) { return upper ? p.leq(b, a) : p.leq(a, b); };

  std::vector<std::size_t> bounds;
  for (std::size_t w = 0; w < n; ++w) {
    if (below(w, *iu) && below(w, *iv)) bounds.push_back(w);
  }
  std::optional<std::size_t> found;
  for (const std::size_t w : bounds) {
    const bool dominates = std::all_of(bounds.begin(), bounds.end(),
                                       [&](std::size_t other) { return below(other, w); });
    if (!dominates) continue;
    if (found) return std::nullopt;
    found = w;
  }
  if (!found) return std::nullopt;
  return p.vertices()[*found];
}

}  // namespace

std::optional<Vertex> meet(const Preorder& p, const Vertex& u, const Vertex& v) {
  return extremal_bound(p, u, v, false);
}

std::optional<Vertex> join(const Preorder& p, const Vertex& u, const Vertex& v) {
  return extremal_bound(p, u, v, true);
}

std::optional<Vertex> meet(const Graph& g, const Vertex& u, const Vertex& v) {
  return meet(free_preorder(g), u, v);
}

std::optional<Vertex> join(const Graph& g, const Vertex& u, const Vertex& v) {
  return join(free_preorder(g), u, v);
}

Graph full_subgraph(const Graph& g, const std::function<bool(const Vertex&)>& keep) {
  std::vector<Vertex> kept;
  for (const auto& v : g.vertices()) {
    if (keep(v)) kept.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep(e.first) && keep(e.second)) edges.push_back(e);
  }
  return Graph(g.dim(), std::move(kept), edges);
}

Graph reversed(const Graph& g) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) edges.emplace_back(b, a);
  return Graph(g.dim(), std::vector<Vertex>(g.vertices().begin(), g.vertices().end()), edges);
}

Graph undirected(const Graph& g) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, a);
  }
  return Graph(g.dim(), std::vector<Vertex>(g.vertices().begin(), g.vertices().end()), edges);
}

namespace {

struct IsoSearch {
  const Graph& g1;
  const Graph& g2;
  std::vector<std::size_t> image;
  std::vector<std::uint8_t> used;
  std::vector<std::array<std::size_t, 3>> sig1, sig2;

  static std::vector<std::array<std::size_t, 3>> signatures(const Graph& g) {
    std::vector<std::array<std::size_t, 3>> sig(g.size(), {0, 0, 0});
    for (const auto& [a, b] : g.edge_indices()) {
      if (a == b) {
        sig[a][2] = 1;
      } else {
        ++sig[a][0];
        ++sig[b][1];
      }
    }
    return sig;
  }

  bool consistent(std::size_t depth, std::size_t candidate) const {
    if (sig1[depth] != sig2[candidate]) return false;
    for (std::size_t prev = 0; prev <= depth; ++prev) {
      const std::size_t img = prev == depth ? candidate : image[prev];
      if (g1.has_edge(prev, depth) != g2.has_edge(img, candidate)) return false;
      if (g1.has_edge(depth, prev) != g2.has_edge(candidate, img)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == g1.size()) return true;
    for (std::size_t c = 0; c < g2.size(); ++c) {
      if (used[c] != 0 || !consistent(depth, c)) continue;
      image[depth] = c;
      used[c] = 1;
      if (extend(depth + 1)) return true;
      used[c] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<VertexBijection> graph_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.size() > 32 || g2.size() > 32) {
    throw CapacityError("graph_isomorphic supports at most 32 vertices");
  }
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  IsoSearch search{g1, g2, std::vector<std::size_t>(g1.size()), std::vector<std::uint8_t>(g2.size(), 0),
                   IsoSearch::signatures(g1), IsoSearch::signatures(g2)};
  if (!search.extend(0)) return std::nullopt;
  VertexBijection out;
  out.reserve(g1.size());
  for (std::size_t i = 0; i < g1.size(); ++i) out.emplace_back(g1.vertex(i), g2.vertex(search.image[i]));
  return out;
}

}  // namespace cubecat
