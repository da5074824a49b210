#pragma once

#include <map>

#include "operadkit/gsets.hpp"
#include "operadkit/indexing.hpp"

namespace operadkit {

// Explicit finite (G x Sigma_n)-set: elements {0..size-1} with commuting left
// actions of G and of Sigma_n (the latter indexed by perm_index).
struct GSigmaSet {
    GroupPtr group;
    int n = 0;
    int size = 0;
    std::vector<std::vector<int>> act_g;      // [g][e]
    std::vector<std::vector<int>> act_sigma;  // [perm_index][e]

    int act(int g, const Perm& s, int e) const { return act_g[g][act_sigma[perm_index(s)][e]]; }
};

GSigmaSet empty_level(const GroupPtr& g, int n);
// The coset space (G x Sigma_n)/Gamma for the graph subgroup of an ordered
// H-set; elements are cosets, ordered by their minimal (g, perm) pair.
GSigmaSet coset_level(const GroupPtr& g, const GraphSubgroup& gamma);
GSigmaSet level_sum(const GSigmaSet& a, const GSigmaSet& b);
// Chaotic mapping space Set(G, Sigma_n) with (g, s) . f = x -> s * f(xg).
GSigmaSet mapping_level(const GroupPtr& g, int n);

// Does the level contain a point fixed by every (h, sigma(h)) of the graph?
bool level_has_fixed_point(const GSigmaSet& level, const GraphSubgroup& gamma);
// Fixed points under an arbitrary list of (group element, permutation) pairs.
std::vector<int> level_fixed_points(const GSigmaSet& level,
                                    const std::vector<std::pair<int, Perm>>& pairs);

// Levelwise symmetric sequence; absent levels are empty.
struct SymSeq {
    GroupPtr group;
    std::map<int, GSigmaSet> levels;

    const GSigmaSet* level(int n) const;
};

// T is admissible when the level of size |T| has a Gamma_T-fixed point for
// some ordering of T (equivalently, any: the orderings are scanned).
bool symseq_admits(const SymSeq& s, const Exponent& t);

// The indexing system generated by all admissible H-sets of size <= max_size.
IndexingSystem generated_admissibles(const LatticePtr& lat, const SymSeq& s, int max_size);

}  // namespace operadkit
