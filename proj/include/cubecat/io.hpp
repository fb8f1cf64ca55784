#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cubecat/bch.hpp"
#include "cubecat/cubes.hpp"
#include "cubecat/graph_hom.hpp"
#include "cubecat/oracle.hpp"

namespace cubecat {

using Json = nlohmann::ordered_json;

/// {"dimension": n, "vertices": [...], "edges": [[src, trg], ...]}, loops
/// included, everything in canonical order.
Json graph_to_json(const Graph& g);
/// Inverse of graph_to_json. Throws ParseError on malformed input.
Graph graph_from_json(const Json& j);

/// {"m": m, "n": n, "map": ["j0", "b1", ...]}.
Json bch_to_json(const BchMorphism& f);
BchMorphism bch_from_json(const Json& j);

/// Source vertex -> target vertex, keys in canonical order.
Json graph_morphism_to_json(const GraphMorphism& f);

Json report_to_json(const CheckReport& report);

/// Graphviz digraph with edges labelled "⟨i, residue⟩" and loops hidden.
/// Nodes of a full twisted cube are emitted in order_g order, left to right.
std::string graph_to_dot(const Graph& g, std::optional<CubeKind> kind = std::nullopt);

}  // namespace cubecat
