#pragma once

#include "operadkit/groups.hpp"

namespace operadkit {

// Ordered finite H-set: points {0..size-1} with a left action of a subgroup H
// of the ambient group. action[k][p] is the image of point p under
// sub.elements[k].
struct Exponent {
    Subgroup sub;
    int size = 0;
    std::vector<std::vector<int>> action;

    int act(int h, int p) const;  // h is an element of the ambient group, must lie in sub
    bool operator==(const Exponent& o) const {
        return sub == o.sub && size == o.size && action == o.action;
    }
};

Exponent exponent_from_action(Subgroup sub, int size, std::vector<std::vector<int>> action);
Exponent trivial_exponent(const Subgroup& sub, int size);
// H acting on H/K by left translation; points ordered by left_coset_reps(K in H).
Exponent coset_exponent(const Subgroup& h, const Subgroup& k);
// Disjoint union, left block first.
Exponent exponent_sum(const Exponent& a, const Exponent& b);
// Reindex along a relabeling of points: point p of the result is point
// order[p] of e.
Exponent reorder_exponent(const Exponent& e, const Perm& order);
// Restrict the action to a smaller subgroup l <= sub.
Exponent restrict_exponent(const Exponent& e, const Subgroup& l);

// The permutation representation sigma: H -> Sigma_n of an ordered H-set,
// stored alongside H. The graph subgroup {(h, sigma(h))} of H x Sigma_n is
// exactly this data.
struct GraphSubgroup {
    Subgroup sub;
    int degree = 0;
    std::vector<Perm> sigma;  // sigma[k] for sub.elements[k]

    const Perm& sigma_of(int h) const;  // ambient element h in sub
};

GraphSubgroup graph_subgroup(const Exponent& e);

// Orbits in point order of their minimal elements; each orbit gives the
// stabilizer of its minimal point and the orbit as a transitive H-set (points
// ordered by first appearance under the coset-rep sweep).
struct Orbit {
    std::vector<int> points;
    Subgroup stabilizer;  // of the minimal point
};
std::vector<Orbit> orbit_decompose(const Exponent& e);

bool gsets_isomorphic(const Exponent& a, const Exponent& b);

// One representative per isomorphism class of H-sets with exactly n points
// (n >= 0), ordered deterministically.
std::vector<Exponent> enumerate_hsets_up_to_iso(const Subgroup& h, int n);

}  // namespace operadkit
