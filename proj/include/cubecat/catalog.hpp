#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubecat/bch.hpp"
#include "cubecat/graph_hom.hpp"
#include "cubecat/oracle.hpp"
#include "cubecat/ternary.hpp"

namespace cubecat {

/// Every category the library can enumerate.
enum class CategoryId {
  Bch,         ///< □
  BchOp,       ///< □ᵒᵖ
  GraphCube,   ///< all graph morphisms between standard cubes
  GraphMeet,   ///< meet- and join-preserving ones
  GraphDim,    ///< dimension-preserving ones
  TwCube,      ///< all graph morphisms between twisted cubes
  TwGraphDim,  ///< dimension-preserving ones
  Ternary,     ///< ⊠ in ternary notation
  Semi,        ///< ⊠⁺, exactly m stars
  Untwisted,   ///< ternary notation with the complement step removed
};

std::string to_string(CategoryId id);
/// Accepts the names printed by to_string: bch, bchop, graphcube, graphmeet,
/// graphdim, twcube, twgraphdim, ternary, semi, untwisted.
CategoryId parse_category_id(const std::string& text);
std::vector<CategoryId> all_categories();

/// Largest object for which hom-sets may be enumerated: 3 for the graph
/// categories, 6 otherwise.
int max_enumeration_dim(CategoryId id);

FiniteCategory<BchMorphism> bch_category();
FiniteCategory<BchMorphism> bchop_category();
FiniteCategory<GraphMorphism> graphcube_category();
FiniteCategory<GraphMorphism> graphmeet_category();
FiniteCategory<GraphMorphism> graphdim_category();
FiniteCategory<GraphMorphism> twcube_category();
FiniteCategory<GraphMorphism> twgraphdim_category();
FiniteCategory<TernaryMorphism> ternary_category();
FiniteCategory<TernaryMorphism> semi_category();
FiniteCategory<TernaryMorphism> untwisted_category();

/// |hom(m, n)|. Throws CapacityError beyond max_enumeration_dim.
std::uint64_t hom_count(CategoryId id, int m, int n);
/// hom(m, n) rendered one arrow per entry, in canonical order.
std::vector<std::string> hom_listing(CategoryId id, int m, int n);
/// table[m][n] = |hom(m, n)| for 0 <= m, n <= max_dim.
std::vector<std::vector<std::uint64_t>> hom_table(CategoryId id, int max_dim);

}  // namespace cubecat
