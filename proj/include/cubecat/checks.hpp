#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubecat/oracle.hpp"

namespace cubecat {

// Exhaustive verifications of the structural results. Each returns a
// CheckReport whose counterexample names the first failure in canonical
// order.

/// Recursive and closed-form cubes agree up to isomorphism, both kinds, n <= max_n.
CheckReport check_rec_nonrec(int max_n);
/// Edge and vertex counts, and equal undirected shape of C^n and T^n.
CheckReport check_cube_shapes(int max_n);

/// □ᵒᵖ ≅ graphmeet through the chain of equivalences.
CheckReport check_bchop_graphmeet(int max_dim, int max_compose_dim);
/// Structured (z, d) enumeration of graphmeet equals the naive filter.
CheckReport check_graphmeet_structured(int max_dim);
/// graphmeet(m,n) and graphdim(m,n) are the same subsets of graphcube(m,n).
CheckReport check_graphmeet_graphdim(int max_dim);
/// Dimension-preserving standard morphisms are injective on dimensions.
CheckReport check_dimension_injective(int max_dim);
/// Extending a base morphism and restricting it back is the identity.
CheckReport check_base_extension(int max_dim);
/// Transposition of partial injections is an involution and a bijection.
CheckReport check_transpose(int max_dim);

/// free_preorder(T^n) is total and order_g is an order isomorphism onto
/// (2^n, <), n <= max_n.
CheckReport check_total_order(int max_n);
/// The outgoing-edge count at v is the number of zeros in order_g(v).
CheckReport check_outgoing_edges(int max_n);
/// Brute force finds exactly one Hamiltonian path in T^n, equal to
/// hamiltonian_path(n), with one dimension-0 edge at the midpoint joining
/// the two copies' paths; 1 <= n <= max_n.
CheckReport check_hamiltonian(int max_n);
/// Surjective members of twgraphdim(m,n): exactly unique_surjection(m,n)
/// when m >= n, none otherwise.
CheckReport check_unique_surjection(int max_dim);
/// Faces of dimension m correspond to the injective members of
/// twgraphdim(m,n).
CheckReport check_face_injections(int max_dim);
/// Every f in twgraphdim(m,n) factors as injection ∘ surjection in exactly
/// one way, and factorize finds it.
CheckReport check_factorisation(int max_dim);
/// Every twisted graph morphism preserves all binary meets and joins.
CheckReport check_twisted_lattice(int max_dim);
/// Dimension-preserving iff all non-empty fibres have one size, over
/// twcube(m,n).
CheckReport check_fibre_sizes(int max_dim);
/// ⊠ ≅ twgraphdim via ternary_to_graphdim.
CheckReport check_ternary_graphdim(int max_dim, int max_compose_dim, std::uint64_t sampled_pairs);
/// Semi-cube arrows are closed under composition.
CheckReport check_semi_closure(int max_dim);
/// ε is a two-sided unit for the vertex tensor. Associative and
/// non-associative triples of total length <= max_total are counted, not
/// required.
CheckReport check_tensor(int max_total);

/// Category laws for every catalogued category.
std::vector<CheckReport> check_all_laws(int max_identity_dim, int max_assoc_dim);

/// Passes iff disabling the twisted orientation flip, and separately the
/// complement step in ternary composition, each make at least one of the
/// twisted structure checks fail. Restores both hooks before returning.
CheckReport check_mutation_sensitivity(int max_dim);

enum class Suite { All, Standard, Twisted, Laws, Iso, Mutation };

Suite parse_suite(const std::string& text);
std::string to_string(Suite suite);

/// Runs a named group of checks. Graph-enumerating checks are capped at
/// dimension 3 regardless of max_dim.
std::vector<CheckReport> run_suite(Suite suite, int max_dim);

}  // namespace cubecat
