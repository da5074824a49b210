#pragma once

#include <string>

#include "operadkit/gsets.hpp"
#include "operadkit/symseq.hpp"

namespace operadkit {

enum class LabelKind { E, Ox, Norm };

// Vertex label: the unit e, the binary ox, or a norm generator g_i (x)_T
// identified by (norm index, coset rep index).
struct Label {
    LabelKind kind = LabelKind::E;
    int norm = -1;
    int coset = -1;

    bool operator==(const Label& o) const {
        return kind == o.kind && norm == o.norm && coset == o.coset;
    }
};

struct NormInfo {
    Exponent t;                   // ordered H-set, H a subgroup of G
    GraphSubgroup gamma;          // its permutation representation
    std::vector<int> coset_reps;  // left coset reps of H in G, identity first
};

// Label alphabet for the free operad on the norm-extended sequence: e, ox,
// and one arity-|T| generator per (T, coset rep of its subgroup).
struct SNAlphabet {
    GroupPtr group;
    std::vector<NormInfo> norms;

    int arity(const Label& l) const;
    // Factor the G-action through the chosen orbit representatives:
    // g . l = twist . l' in the symmetric sequence; returns (l', twist).
    std::pair<Label, Perm> g_act_on_label(int g, const Label& l) const;
    // All representative labels of the given arity.
    std::vector<Label> reps_of_arity(int n) const;
    // The underlying symmetric sequence, materialized levelwise up to max_n.
    SymSeq to_symseq(int max_n) const;
};

SNAlphabet build_sn_alphabet(const GroupPtr& g, const std::vector<Exponent>& norm_gens);

// Labeled planar tree with numbered free leaves (numbers 1..arity, each once).
struct Tree;
using TreePtr = std::shared_ptr<const Tree>;
struct Tree {
    bool leaf = false;
    int number = 0;  // leaf number when leaf
    Label label{};
    std::vector<TreePtr> children;
};

TreePtr make_leaf(int number);
TreePtr make_vertex(const Label& l, std::vector<TreePtr> children);
bool tree_equal(const TreePtr& a, const TreePtr& b);
int tree_arity(const TreePtr& t);  // number of free leaves
int tree_depth(const TreePtr& t);  // leaf: 0, vertex: 1 + max child depth
void validate_tree(const SNAlphabet& a, const TreePtr& t);  // arity/numbering checks
std::string canonical_form(const TreePtr& t);

// Corolla on a representative label: leaves 1..n in planar order.
TreePtr corolla(const SNAlphabet& a, const Label& l);
// Relabel leaf numbers i -> s(i) (s is 0-based, numbers 1-based).
TreePtr sigma_act(const Perm& s, const TreePtr& t);
// Graft us[i-1] onto the leaf numbered i; leaf numbers of us[i] occupy the
// block after those of us[0..i-1].
TreePtr gamma_compose(const TreePtr& t, const std::vector<TreePtr>& us);
TreePtr g_act(const SNAlphabet& a, int g, const TreePtr& t);
// (g, s) . t = s . (g . t); the two actions commute.
TreePtr act(const SNAlphabet& a, int g, const Perm& s, const TreePtr& t);

// All trees with leaves numbered 1..arity and depth <= max_depth. Throws
// TooLarge past the guard.
std::vector<TreePtr> enumerate_trees(const SNAlphabet& a, int arity, int max_depth,
                                     long long guard = 4000000);

// All (g, sigma) with (g, sigma) . t = t.
std::vector<std::pair<int, Perm>> tree_stabilizer(const SNAlphabet& a, const TreePtr& t);
bool tree_fixed_by(const SNAlphabet& a, const TreePtr& t, const GraphSubgroup& gamma);

}  // namespace operadkit
