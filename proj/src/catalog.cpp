#include "cubecat/catalog.hpp"

#include <array>
#include <utility>

#include "cubecat/standard_cats.hpp"
#include "cubecat/twisted.hpp"

namespace cubecat {

namespace {

constexpr std::array<std::pair<CategoryId, const char*>, 10> kNames{{
    {CategoryId::Bch, "bch"},
    {CategoryId::BchOp, "bchop"},
    {CategoryId::GraphCube, "graphcube"},
    {CategoryId::GraphMeet, "graphmeet"},
    {CategoryId::GraphDim, "graphdim"},
    {CategoryId::TwCube, "twcube"},
    {CategoryId::TwGraphDim, "twgraphdim"},
    {CategoryId::Ternary, "ternary"},
    {CategoryId::Semi, "semi"},
    {CategoryId::Untwisted, "untwisted"},
}};

bool is_graph_category(CategoryId id) {
  switch (id) {
    case CategoryId::GraphCube:
    case CategoryId::GraphMeet:
    case CategoryId::GraphDim:
    case CategoryId::TwCube:
    case CategoryId::TwGraphDim:
      return true;
    default:
      return false;
  }
}

bool between(const GraphMorphism& f, CubeKind kind, int m, int n) {
  return f.source() == *cube(kind, m) && f.target() == *cube(kind, n);
}

FiniteCategory<GraphMorphism> graph_category(std::string name, CubeKind kind,
                                             std::function<std::vector<GraphMorphism>(int, int)> homs,
                                             std::function<bool(const GraphMorphism&)> property) {
  FiniteCategory<GraphMorphism> cat;
  cat.name = std::move(name);
  cat.homs = std::move(homs);
  cat.identity = [kind](int n) { return identity_morphism(cube(kind, n)); };
  cat.compose = [](const GraphMorphism& outer, const GraphMorphism& inner) { return compose(outer, inner); };
  cat.describe = [](const GraphMorphism& f) { return f.str(); };
  cat.contains = [kind, property = std::move(property)](int m, int n, const GraphMorphism& f) {
    return between(f, kind, m, n) && property(f);
  };
  return cat;
}

FiniteCategory<TernaryMorphism> ternary_like(std::string name, std::function<std::vector<TernaryMorphism>(int, int)> homs,
                                             std::function<TernaryMorphism(const TernaryMorphism&, const TernaryMorphism&)> op,
                                             bool exact_stars) {
  FiniteCategory<TernaryMorphism> cat;
  cat.name = std::move(name);
  cat.homs = std::move(homs);
  cat.identity = [](int n) { return TernaryMorphism::identity(n); };
  cat.compose = std::move(op);
  cat.describe = [](const TernaryMorphism& t) { return t.str(); };
  cat.contains = [exact_stars](int m, int n, const TernaryMorphism& t) {
    return t.m() == m && t.n() == n && (!exact_stars || t.stars() == m);
  };
  return cat;
}

}  // namespace

std::string to_string(CategoryId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "?";
}

CategoryId parse_category_id(const std::string& text) {
  for (const auto& [key, name] : kNames) {
    if (text == name) return key;
  }
  std::string known;
  for (const auto& entry : kNames) known += std::string(known.empty() ? "" : ", ") + entry.second;
  throw ParseError("unknown category '" + text + "' (expected one of " + known + ")");
}

std::vector<CategoryId> all_categories() {
  std::vector<CategoryId> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

int max_enumeration_dim(CategoryId id) { return is_graph_category(id) ? 3 : 6; }

FiniteCategory<BchMorphism> bch_category() {
  FiniteCategory<BchMorphism> cat;
  cat.name = "bch";
  cat.homs = [](int m, int n) { return enumerate_bch(m, n); };
  cat.identity = [](int n) { return BchMorphism::identity(n); };
  cat.compose = [](const BchMorphism& outer, const BchMorphism& inner) { return bch_compose(outer, inner); };
  cat.describe = [](const BchMorphism& f) { return f.str(); };
  cat.contains = [](int m, int n, const BchMorphism& f) { return f.m() == m && f.n() == n; };
  return cat;
}

FiniteCategory<BchMorphism> bchop_category() {
  FiniteCategory<BchMorphism> cat;
  cat.name = "bchop";
  cat.homs = [](int m, int n) { return enumerate_bchop(m, n); };
  cat.identity = [](int n) { return BchMorphism::identity(n); };
  cat.compose = [](const BchMorphism& outer, const BchMorphism& inner) { return bchop_compose(outer, inner); };
  cat.describe = [](const BchMorphism& f) { return f.str(); };
  cat.contains = [](int m, int n, const BchMorphism& f) { return f.m() == n && f.n() == m; };
  return cat;
}

FiniteCategory<GraphMorphism> graphcube_category() {
  return graph_category(
      "graphcube", CubeKind::Standard, [](int m, int n) { return enumerate_graphcube(m, n); },
      [](const GraphMorphism&) { return true; });
}

FiniteCategory<GraphMorphism> graphmeet_category() {
  return graph_category(
      "graphmeet", CubeKind::Standard, [](int m, int n) { return enumerate_graphmeet(m, n); },
      [](const GraphMorphism& f) { return preserves_meets(f) && preserves_joins(f); });
}

FiniteCategory<GraphMorphism> graphdim_category() {
  return graph_category(
      "graphdim", CubeKind::Standard, [](int m, int n) { return enumerate_graphdim(m, n); },
      [](const GraphMorphism& f) { return is_dimension_preserving(f); });
}

FiniteCategory<GraphMorphism> twcube_category() {
  return graph_category(
      "twcube", CubeKind::Twisted, [](int m, int n) { return enumerate_twcubecat(m, n); },
      [](const GraphMorphism&) { return true; });
}

FiniteCategory<GraphMorphism> twgraphdim_category() {
  return graph_category(
      "twgraphdim", CubeKind::Twisted, [](int m, int n) { return enumerate_twgraphdim(m, n); },
      [](const GraphMorphism& f) { return is_dimension_preserving(f); });
}

FiniteCategory<TernaryMorphism> ternary_category() {
  return ternary_like(
      "ternary", [](int m, int n) { return enumerate_ternary(m, n); },
      [](const TernaryMorphism& g, const TernaryMorphism& f) { return ternary_compose(g, f); }, false);
}

FiniteCategory<TernaryMorphism> semi_category() {
  return ternary_like(
      "semi", [](int m, int n) { return enumerate_semi(m, n); },
      [](const TernaryMorphism& g, const TernaryMorphism& f) { return ternary_compose(g, f); }, true);
}

FiniteCategory<TernaryMorphism> untwisted_category() {
  return ternary_like(
      "untwisted", [](int m, int n) { return enumerate_ternary(m, n); },
      [](const TernaryMorphism& g, const TernaryMorphism& f) { return untwisted_ternary_compose(g, f); }, false);
}

namespace {

void check_range(CategoryId id, int m, int n) {
  const int limit = max_enumeration_dim(id);
  if (m < 0 || n < 0) throw DimensionError("objects must be non-negative");
  if (m > limit || n > limit) {
    throw CapacityError(to_string(id) + " hom-sets are enumerated only up to object " + std::to_string(limit));
  }
}

template <class Mor>
std::vector<std::string> describe_all(const FiniteCategory<Mor>& cat, int m, int n) {
  std::vector<std::string> out;
  for (const auto& f : cat.homs(m, n)) out.push_back(cat.describe(f));
  return out;
}

}  // namespace

std::vector<std::string> hom_listing(CategoryId id, int m, int n) {
  check_range(id, m, n);
  switch (id) {
    case CategoryId::Bch:
      return describe_all(bch_category(), m, n);
    case CategoryId::BchOp:
      return describe_all(bchop_category(), m, n);
    case CategoryId::GraphCube:
      return describe_all(graphcube_category(), m, n);
    case CategoryId::GraphMeet:
      return describe_all(graphmeet_category(), m, n);
    case CategoryId::GraphDim:
      return describe_all(graphdim_category(), m, n);
    case CategoryId::TwCube:
      return describe_all(twcube_category(), m, n);
    case CategoryId::TwGraphDim:
      return describe_all(twgraphdim_category(), m, n);
    case CategoryId::Ternary:
      return describe_all(ternary_category(), m, n);
    case CategoryId::Semi:
      return describe_all(semi_category(), m, n);
    case CategoryId::Untwisted:
      return describe_all(untwisted_category(), m, n);
  }
  return {};
}

std::uint64_t hom_count(CategoryId id, int m, int n) {
  check_range(id, m, n);
  switch (id) {
    case CategoryId::Bch:
      return enumerate_bch(m, n).size();
    case CategoryId::BchOp:
      return enumerate_bchop(m, n).size();
    case CategoryId::GraphCube:
      return enumerate_graphcube(m, n).size();
    case CategoryId::GraphMeet:
      return enumerate_graphmeet(m, n).size();
    case CategoryId::GraphDim:
      return enumerate_graphdim(m, n).size();
    case CategoryId::TwCube:
      return enumerate_twcubecat(m, n).size();
    case CategoryId::TwGraphDim:
      return enumerate_twgraphdim(m, n).size();
    case CategoryId::Ternary:
    case CategoryId::Untwisted:
      return enumerate_ternary(m, n).size();
    case CategoryId::Semi:
      return enumerate_semi(m, n).size();
  }
  return 0;
}

std::vector<std::vector<std::uint64_t>> hom_table(CategoryId id, int max_dim) {
  check_range(id, max_dim, max_dim);
  std::vector<std::vector<std::uint64_t>> table;
  for (int m = 0; m <= max_dim; ++m) {
    auto& row = table.emplace_back();
    for (int n = 0; n <= max_dim; ++n) row.push_back(hom_count(id, m, n));
  }
  return table;
}

}  // namespace cubecat
