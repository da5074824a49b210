#pragma once

#include "operadkit/normed_functors.hpp"
#include "operadkit/symseq.hpp"

namespace operadkit {

// ---- permutativity comparisons -------------------------------------------

// Level n of the G-permutativity operad: the chaotic mapping space
// Set(G, Sigma_n), described by its object (G x Sigma_n)-set.
GSigmaSet build_PG_level(const GroupPtr& g, int n);

// Operadic composition of permutations: blocks permuted by s, ts[i] inside
// block i (conventions match gamma_compose on trees).
Perm be_gamma(const Perm& s, const std::vector<Perm>& ts);

// A function G -> Sigma_n, one permutation index per group element.
using GPerm = std::vector<int>;
// Its element index inside build_PG_level(g, n).
int gperm_index(const GroupPtr& g, int n, const GPerm& f);

// Does the level contain an object fixed by every element of lambda, a
// subgroup of product_group(g, symmetric_group(level.n))?
bool fixed_profile(const GSigmaSet& level, const Subgroup& lambda);

// The Gamma_T-fixed function G -> Sigma_{|T|} that is the identity on the
// chosen coset representatives.
GPerm fixed_function(const GroupPtr& g, const Exponent& t);

// Interpretation of trees in the G-permutativity operad, given one fixed
// function per alphabet norm; and in the nonequivariant permutativity operad
// (norm-free trees only).
GPerm pg_interpret(const SNAlphabet& a, const std::vector<GPerm>& norm_values, const TreePtr& t);
Perm p_interpret(const TreePtr& t);

// A Gamma_T-fixed tree over the alphabet: targeted construction (norm
// corollas per orbit under a tensor comb) first, then a bounded scan; the
// depth bound is raised once before NoFixedWitness.
TreePtr fixed_witness_tree(const SNAlphabet& a, const Exponent& t, int max_depth = 2);

// Comparison maps from the free norm-extended operads into the permutativity
// operads: generator images, operad-map laws on samples, the diagonal square,
// and fixed-profile agreement for every subgroup of G x Sigma_n at levels
// <= max_level.
Report comparison_maps(const GroupPtr& g, int max_level = 3, int max_depth = 2);

// ---- lattice of chaotic operads ------------------------------------------

// Generating symmetric sequence of the norm-extended operad: the unit orbit
// at level 0, the tensor orbit at level 2, one coset orbit per generator.
SymSeq generating_sequence(const GroupPtr& g, const std::vector<Exponent>& gens, int max_level);

// Truncated operad levels: trees of each arity <= max_level within the depth
// bound, as (G x Sigma_n)-sets.
SymSeq operad_levels(const SNAlphabet& a, int max_level, int max_depth);

GSigmaSet level_product(const GSigmaSet& a, const GSigmaSet& b);

// Admissibles of the levelwise product of the truncated operads.
IndexingSystem product_admissibles(const LatticePtr& lat, const SymSeq& s1, const SymSeq& s2,
                                   int size_bound = 4);
// Admissibles of the free operad on the summed generating sequences.
IndexingSystem coproduct_admissibles(const LatticePtr& lat, const GroupPtr& g,
                                     std::vector<Exponent> gens1, std::vector<Exponent> gens2,
                                     int size_bound = 4);

// Product admissibles = meet, coproduct admissibles = join, for the systems
// generated by the two exponent sets.
Report lattice_check(const GroupPtr& g, const std::vector<Exponent>& n1,
                     const std::vector<Exponent>& n2, int size_bound = 4, int max_depth = 2);

// With one global choice of generators, the bounded tree sets are nested
// exactly when the indexing systems are, and each system is recovered from
// its generating sequence (order isomorphism onto the enumerated lattice).
Report suboperad_poset_check(const GroupPtr& g, int max_arity = 3, int max_depth = 2,
                             int size_bound = 4);

// ---- change of norms ------------------------------------------------------

struct NormChange {
    SNAlphabet small;                // norms = n
    SNAlphabet big;                  // norms = n followed by m, indices aligned
    int n_count = 0;                 // number of small norms
    std::vector<TreePtr> witnesses;  // Gamma_T-fixed tree over small, per m-generator
};

// Throws NotSameIndexing when n and n + m generate different systems, and
// NoFixedWitness when a witness search fails.
NormChange change_of_norms_data(const GroupPtr& g, const std::vector<Exponent>& n,
                                const std::vector<Exponent>& m, int max_depth = 2);

// The retraction r: trees over big -> trees over small, substituting the
// chosen witness for every m-generator vertex. The inclusion i is the
// identity on trees.
TreePtr restrict_tree(const NormChange& ch, const TreePtr& t);

// Extension and restriction on algebra instances: extend appends the
// interpreted witnesses as norms (with canonical-path untwistors), restrict
// drops them.
NormedSMCData extend_norms(const NormChange& ch, const NormedSMCData& d);
NormedSMCData restrict_norms(const NormChange& ch, const NormedSMCData& d);

// On a big-alphabet algebra: extend(restrict(d)) is isomorphic to d through
// the unique-map components theta, checked by naturality on sampled trees and
// by validating the comparison data as an invertible lax functor.
Report er_equivalence(const NormChange& ch, const NormedSMCData& d, int max_arity = 2,
                      int max_depth = 2);

// Full change-of-norms report on an algebra d over the n-alphabet.
Report change_of_norms(const NormedSMCData& d, const std::vector<Exponent>& m,
                       int max_arity = 2, int max_depth = 2);

}  // namespace operadkit
