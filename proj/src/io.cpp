#include "cubecat/io.hpp"

#include <algorithm>

#include "cubecat/errors.hpp"
#include "cubecat/twisted.hpp"

namespace cubecat {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int small_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  const auto x = v.get<long long>();
  if (x < 0 || x > kMaxDimension) throw ParseError(std::string("field '") + key + "' out of range");
  return static_cast<int>(x);
}

Vertex vertex_of(const Json& v, int dim) {
  if (!v.is_string()) throw ParseError("vertices must be strings of 0 and 1");
  const Vertex out = Vertex::parse(v.get<std::string>());
  if (out.dim() != dim) throw ParseError("vertex '" + out.str() + "' does not have dimension " + std::to_string(dim));
  return out;
}

std::string quoted(const Vertex& v) { return "\"" + display(v) + "\""; }

}  // namespace

Json graph_to_json(const Graph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v.str());
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a.str(), b.str()}));
  return Json{{"dimension", g.dim()}, {"vertices", vertices}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const int dim = small_int(j, "dimension");
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) throw ParseError("'vertices' and 'edges' must be arrays");
  std::vector<Vertex> vertices;
  for (const auto& v : vs) vertices.push_back(vertex_of(v, dim));
  std::vector<Edge> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a [source, target] pair");
    edges.emplace_back(vertex_of(e[0], dim), vertex_of(e[1], dim));
  }
  try {
    return Graph(dim, std::move(vertices), edges);
  } catch (const DimensionError& err) {
    throw ParseError(err.what());
  }
}

Json bch_to_json(const BchMorphism& f) {
  Json map = Json::array();
  for (const auto& v : f.map()) map.push_back(v.str());
  return Json{{"m", f.m()}, {"n", f.n()}, {"map", map}};
}

BchMorphism bch_from_json(const Json& j) {
  const int m = small_int(j, "m");
  const int n = small_int(j, "n");
  const Json& map = field(j, "map");
  if (!map.is_array()) throw ParseError("'map' must be an array");
  std::vector<BchValue> values;
  for (const auto& v : map) {
    if (!v.is_string()) throw ParseError("map entries must be strings like \"j0\" or \"b1\"");
    values.push_back(BchValue::parse(v.get<std::string>()));
  }
  try {
    return BchMorphism(m, n, std::move(values));
  } catch (const DimensionError& err) {
    throw ParseError(err.what());
  }
}

Json graph_morphism_to_json(const GraphMorphism& f) {
  Json out = Json::object();
  for (const auto& v : f.source().vertices()) out[v.str()] = f(v).str();
  return out;
}

Json report_to_json(const CheckReport& report) {
  Json out{{"name", report.name}, {"passed", report.passed}};
  out["parameters"] = Json::object();
  for (const auto& [k, v] : report.parameters) out["parameters"][k] = v;
  out["counts"] = Json::object();
  for (const auto& [k, v] : report.counts) out["counts"][k] = v;
  out["counterexample"] = report.passed ? Json(nullptr) : Json(report.counterexample.value_or(""));
  out["capacity_exceeded"] = report.capacity_exceeded;
  return out;
}

std::string graph_to_dot(const Graph& g, std::optional<CubeKind> kind) {
  const std::string prefix = kind ? (*kind == CubeKind::Twisted ? "T" : "C") : "G";
  std::string out = "digraph " + prefix + std::to_string(g.dim()) + " {\n";
  std::vector<Vertex> order(g.vertices().begin(), g.vertices().end());
  if (kind == CubeKind::Twisted && g.is_full_cube()) {
    out += "  rankdir=LR;\n";
    std::sort(order.begin(), order.end(),
              [](const Vertex& a, const Vertex& b) { return order_g(a).value() < order_g(b).value(); });
  }
  for (const auto& v : order) out += "  " + quoted(v) + ";\n";
  for (const auto& [a, b] : g.edges()) {
    if (a == b) continue;
    out += "  " + quoted(a) + " -> " + quoted(b);
    const int i = single_difference(a, b);
    if (i >= 0) out += " [label=\"" + EdgeLabel::along(i, a.erase_bit(i)).str() + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cubecat
