#pragma once

#include <vector>

#include "cubecat/bch.hpp"
#include "cubecat/graph_hom.hpp"

namespace cubecat {

/// Shared cached base graph B_n (origin plus one-hot vertices).
GraphPtr base_graph(int n);

/// Extends a morphism B_m -> C^n to the unique join-preserving morphism
/// C^m -> C^n: every vertex is sent to the join (in the target) of the images
/// of the origin and of the base vectors below it.
GraphMorphism extend_base_morphism(const GraphMorphism& h);

/// Restriction of a morphism C^m -> C^n along the inclusion B_m -> C^m.
GraphMorphism restrict_to_base(const GraphMorphism& g);

// The pieces below spell out the chain of equivalences
//   graphmeet(m,n) ≃ {B_m -> C^n meet-preserving}
//                  ≃ {(z, d) : d : Fin m ⇀ Fin n, d(i)=j ⇒ z_j = 0}
//                  ≃ {(z, e) : e : Fin n ⇀ Fin m, e(j)=i ⇒ z_j = 0}
//                  ≃ □ᵒᵖ(m,n).

/// A corner z of C^n together with a partial injection. For `OriginChoice`
/// the injection runs Fin m ⇀ Fin n (where each base edge goes); for
/// `CoordinateChoice` it runs Fin n ⇀ Fin m (which source coordinate each
/// target coordinate copies). Either way z_j = 0 whenever j is hit / defined.
struct OriginChoice {
  Vertex origin;
  PartialInjection edges;
};

struct CoordinateChoice {
  Vertex origin;
  PartialInjection coordinates;
};

/// □ᵒᵖ(m,n) arrow a : Fin n -> Fin m + Fin 2 split into (z, e): constants
/// become z_j with e(j) undefined; coordinates give e(j) = i and z_j = 0.
CoordinateChoice split_bch(const BchMorphism& a);
BchMorphism merge_bch(const CoordinateChoice& c, int m);

OriginChoice transpose_choice(const CoordinateChoice& c);
CoordinateChoice transpose_choice(const OriginChoice& c);

/// The morphism B_m -> C^n sending the origin to z and base edge i to the
/// edge of dimension d(i) leaving z (or the loop at z when d(i) is undefined).
GraphMorphism base_morphism(const OriginChoice& c);
/// Reads (z, d) back off a morphism B_m -> C^n. Throws if the morphism is
/// not meet-preserving (two base edges along the same dimension).
OriginChoice origin_choice(const GraphMorphism& h);

/// □ᵒᵖ(m,n) arrow (stored as □(n,m)) to the corresponding meet- and
/// join-preserving morphism C^m -> C^n.
GraphMorphism bchop_to_graphmeet(const BchMorphism& a);
/// Inverse of bchop_to_graphmeet.
BchMorphism graphmeet_to_bchop(const GraphMorphism& g);

/// □ᵒᵖ composition: outer ∘op inner = inner ∘ outer in □.
BchMorphism bchop_compose(const BchMorphism& outer, const BchMorphism& inner);
/// □ᵒᵖ(m, n) = □(n, m).
std::vector<BchMorphism> enumerate_bchop(int m, int n);

std::vector<GraphMorphism> enumerate_graphcube(int m, int n, const EnumerationLimits& limits = {});
/// Structured enumeration of graphmeet(m,n) through (z, d) pairs, sorted in
/// the same order as the naive filter.
std::vector<GraphMorphism> enumerate_graphmeet(int m, int n);
/// graphcube(m,n) filtered by meet and join preservation.
std::vector<GraphMorphism> enumerate_graphmeet_naive(int m, int n, const EnumerationLimits& limits = {});
/// graphcube(m,n) filtered by dimension preservation.
std::vector<GraphMorphism> enumerate_graphdim(int m, int n, const EnumerationLimits& limits = {});

}  // namespace cubecat
