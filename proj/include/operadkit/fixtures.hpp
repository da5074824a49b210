#pragma once

#include "operadkit/fincat.hpp"

namespace operadkit {

// Functions G -> Z/2 under pointwise addition; G translates the domain on the
// right. Discrete and strict; each norm is the iterated tensor with identity
// untwistor. Object index: bit x is the value at group element x.
NormedSMCData discrete_maps_carrier(const GroupPtr& g, const std::vector<Exponent>& norm_gens);

// Chaotic category on Z/2 with tensor = addition and the trivial G-action.
NormedSMCData chaotic_carrier(const GroupPtr& g, const std::vector<Exponent>& norm_gens);

// The poset 0 <= 1 with tensor = max (trivial group, no norms).
NormedSMCData poset_max_carrier();
// The unique morphism from -> to of the poset carrier (throws when from > to).
int poset_mor(int from, int to);

// Parity groupoid: objects Z/2, hom(x, x) = Z/2 under addition (morphism
// index x*2 + sign), tensor = addition on objects and signs, braiding
// component beta_{x,y} = sign x*y. Trivial G-action, no norms.
NormedSMCData parity_carrier(const GroupPtr& g);

// Every candidate normed extension of the parity carrier by one norm on the
// given exponent: object table forced by invertible untwistors, morphism
// table ranging over all sign homomorphisms, untwistor over all sign choices.
std::vector<NormedSMCData> parity_norm_candidates(const GroupPtr& g, const Exponent& t);

// Identity transformation at an n-ary functor.
NTrans identity_trans(const FiniteCategory& c, const NFunctor& f);

}  // namespace operadkit
