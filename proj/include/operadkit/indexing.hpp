#pragma once

#include <set>

#include "operadkit/gsets.hpp"
#include "operadkit/groups.hpp"

namespace operadkit {

// Shared context: all subgroups of G in canonical order plus the lattice
// operations on their indices.
struct SubgroupLattice {
    GroupPtr group;
    std::vector<Subgroup> subs;

    int index_of(const std::vector<int>& sorted_elements) const;
    int index_of(const Subgroup& s) const { return index_of(s.elements); }
    int conjugate(int s, int g) const;  // index of g subs[s] g^-1
    bool leq(int a, int b) const { return subgroup_leq(subs[a], subs[b]); }
    int intersect(int a, int b) const;
    int full() const { return static_cast<int>(subs.size()) - 1; }
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;
LatticePtr build_subgroup_lattice(const GroupPtr& g);

// An indexing system stored as its set of admissible orbit pairs (H, K),
// K <= H, both subgroup indices. Reflexive pairs (H, H) are always present.
struct IndexingSystem {
    LatticePtr lat;
    std::set<std::pair<int, int>> pairs;

    bool admits(int h, int k) const { return pairs.count({h, k}) > 0; }
    bool operator==(const IndexingSystem& o) const { return pairs == o.pairs; }
};

IndexingSystem trivial_indexing(const LatticePtr& lat);
IndexingSystem complete_indexing(const LatticePtr& lat);

// Is the pair set closed under the four axioms (reflexivity, conjugation,
// restriction, composition)?
bool indexing_is_closed(const IndexingSystem& s);
// Least closed system containing the given pairs.
IndexingSystem indexing_closure(IndexingSystem s);
// Least indexing system whose admissible sets contain the given exponents.
IndexingSystem generate_indexing(const LatticePtr& lat, const std::vector<Exponent>& gens);

// Is the H-set admissible: every orbit pair (H, stabilizer) lies in s.
bool indexing_contains(const IndexingSystem& s, const Exponent& t);

bool indexing_leq(const IndexingSystem& a, const IndexingSystem& b);
IndexingSystem indexing_meet(const IndexingSystem& a, const IndexingSystem& b);
IndexingSystem indexing_join(const IndexingSystem& a, const IndexingSystem& b);

struct IndexingLattice {
    std::vector<IndexingSystem> systems;          // sorted by (size, pairs)
    std::vector<std::pair<int, int>> hasse;       // cover pairs (lower, upper)
};

// All indexing systems for G. Throws TooLarge when the candidate pair set
// exceeds 64.
IndexingLattice enumerate_indexing_systems(const LatticePtr& lat);

}  // namespace operadkit
