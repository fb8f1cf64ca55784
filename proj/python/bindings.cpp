#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubecat/catalog.hpp"
#include "cubecat/checks.hpp"
#include "cubecat/cubes.hpp"
#include "cubecat/errors.hpp"
#include "cubecat/io.hpp"
#include "cubecat/ternary.hpp"
#include "cubecat/twisted.hpp"

namespace py = pybind11;
using namespace cubecat;

namespace {

py::dict graph_dict(const Graph& g) {
  py::list vertices;
  for (const auto& v : g.vertices()) vertices.append(v.str());
  py::list edges;
  for (const auto& [a, b] : g.edges()) edges.append(py::make_tuple(a.str(), b.str()));
  py::dict out;
  out["dimension"] = g.dim();
  out["vertices"] = vertices;
  out["edges"] = edges;
  return out;
}

py::dict report_dict(const CheckReport& r) {
  py::dict out;
  out["name"] = r.name;
  out["passed"] = r.passed;
  out["parameters"] = r.parameters;
  out["counts"] = r.counts;
  out["counterexample"] = r.counterexample ? py::object(py::str(*r.counterexample)) : py::object(py::none());
  out["capacity_exceeded"] = r.capacity_exceeded;
  return out;
}

std::map<std::string, std::string> morphism_dict(const GraphMorphism& f) {
  std::map<std::string, std::string> out;
  for (const auto& v : f.source().vertices()) out[v.str()] = f(v).str();
  return out;
}

Graph build(const std::string& kind, int n, const std::string& definition) {
  const CubeKind k = parse_cube_kind(kind);
  if (definition == "rec") return cube_rec(k, n);
  if (definition == "nonrec") return cube_nonrec(k, n).graph();
  throw ParseError("definition must be 'rec' or 'nonrec'");
}

TernaryMorphism ternary_arg(const std::string& text, int domain) {
  return TernaryMorphism::parse(domain >= 0 ? domain : star_count(parse_trits(text)), text);
}

std::string compose_ternary(const std::string& g, const std::string& f, int domain, bool twisted) {
  const TernaryMorphism inner = ternary_arg(f, domain);
  const TernaryMorphism outer = TernaryMorphism::parse(inner.n(), g);
  return (twisted ? ternary_compose(outer, inner) : untwisted_ternary_compose(outer, inner)).str();
}

}  // namespace

PYBIND11_MODULE(_cubecat, m) {
  m.doc() = "Standard and twisted cube categories";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def(
      "cube", [](const std::string& kind, int n, const std::string& definition) { return graph_dict(build(kind, n, definition)); },
      "Cube graph as a dict with 'dimension', 'vertices' and 'edges'", py::arg("kind"), py::arg("n"),
      py::arg("definition") = "nonrec");
  m.def(
      "cube_dot", [](const std::string& kind, int n) { return graph_to_dot(build(kind, n, "nonrec"), parse_cube_kind(kind)); },
      py::arg("kind"), py::arg("n"));
  m.def(
      "graph_json", [](const std::string& kind, int n) { return graph_to_json(build(kind, n, "nonrec")).dump(); },
      py::arg("kind"), py::arg("n"));
  m.def(
      "rec_nonrec_isomorphic",
      [](const std::string& kind, int n) { return graph_isomorphic(build(kind, n, "rec"), build(kind, n, "nonrec")).has_value(); },
      py::arg("kind"), py::arg("n"));

  m.def(
      "hom_count", [](const std::string& cat, int a, int b) { return hom_count(parse_category_id(cat), a, b); },
      py::arg("category"), py::arg("m"), py::arg("n"));
  m.def(
      "homs", [](const std::string& cat, int a, int b) { return hom_listing(parse_category_id(cat), a, b); },
      py::arg("category"), py::arg("m"), py::arg("n"));
  m.def(
      "hom_table", [](const std::string& cat, int max_dim) { return hom_table(parse_category_id(cat), max_dim); },
      py::arg("category"), py::arg("max_dim"));
  m.def("categories", [] {
    std::vector<std::string> out;
    for (const auto id : all_categories()) out.push_back(to_string(id));
    return out;
  });

  m.def(
      "ternary_compose", [](const std::string& g, const std::string& f, int domain) { return compose_ternary(g, f, domain, true); },
      "g ∘ f in ternary notation; f's domain defaults to its star count", py::arg("g"), py::arg("f"), py::arg("domain") = -1);
  m.def(
      "untwisted_compose",
      [](const std::string& g, const std::string& f, int domain) { return compose_ternary(g, f, domain, false); }, py::arg("g"),
      py::arg("f"), py::arg("domain") = -1);
  m.def(
      "ternary_to_graphdim", [](const std::string& t, int domain) { return morphism_dict(ternary_to_graphdim(ternary_arg(t, domain))); },
      py::arg("t"), py::arg("domain") = -1);
  m.def(
      "bch_compose",
      [](const std::string& g, const std::string& f) {
        return bch_to_json(bch_compose(bch_from_json(Json::parse(g)), bch_from_json(Json::parse(f)))).dump();
      },
      "g ∘ f for BCH arrows given as JSON strings", py::arg("g"), py::arg("f"));

  m.def(
      "order_g", [](const std::string& v) { return order_g(Vertex::parse(v)).str(); }, py::arg("v"));
  m.def(
      "hamiltonian_path",
      [](int n) {
        std::vector<std::string> out;
        for (Bits k = 0; k < (Bits{1} << n); ++k) out.push_back(hamiltonian_f(n, k).str());
        return out;
      },
      "Vertices of T^n in path order", py::arg("n"));
  m.def(
      "face_to_injection", [](const std::string& face) { return morphism_dict(face_to_injection(Face::parse(face))); },
      py::arg("face"));
  m.def(
      "tensor", [](const std::string& x, const std::string& y) { return monoidal_tensor(Vertex::parse(x), Vertex::parse(y)).str(); },
      py::arg("x"), py::arg("y"));

  m.def(
      "run_suite",
      [](const std::string& suite, int max_dim) {
        py::list out;
        for (const auto& r : run_suite(parse_suite(suite), max_dim)) out.append(report_dict(r));
        return out;
      },
      py::arg("suite") = "all", py::arg("max_dim") = 3);
}
