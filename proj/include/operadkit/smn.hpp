#pragma once

#include "operadkit/tree.hpp"

namespace operadkit {

// Irreducible two-sided generators between trees: identity, associator,
// unitors, braiding, and the untwistors (one per norm generator label).
enum class IrrKind { Id, Alpha, AlphaInv, Lambda, LambdaInv, Rho, RhoInv, Beta, Ups, UpsInv };

struct Irreducible {
    IrrKind kind = IrrKind::Id;
    Label norm_label{};  // only for Ups / UpsInv

    bool operator==(const Irreducible& o) const {
        return kind == o.kind && (kind != IrrKind::Ups && kind != IrrKind::UpsInv
                                      ? true
                                      : norm_label == o.norm_label);
    }
};

// Left comb ox_n: ox_0 = e, ox_1 = leaf, ox_{n+1} = ox(ox_n, leaf).
TreePtr standard_tensor_tree(const SNAlphabet& a, int n);
// Replace every norm vertex by the standard comb of its arity.
TreePtr reduced_tree(const SNAlphabet& a, const TreePtr& t);

// Endpoints (t, t') of the irreducible edge.
std::pair<TreePtr, TreePtr> irreducible_endpoints(const SNAlphabet& a, const Irreducible& irr);

// A basic edge: an irreducible rewrite applied at one position of a bigger
// tree, with the context data (surroundings u_1..u_k, context s, slot i,
// outer permutation sigma) fixing both endpoints:
//   src = sigma . gamma(s; 1,...,gamma(t; u_1..u_k) at slot i,...,1)
struct BasicEdge {
    Irreducible irr;
    TreePtr irr_src, irr_tgt;
    std::vector<TreePtr> surroundings;
    TreePtr context;
    int slot = 1;  // 1-based
    Perm outer;
    TreePtr src, tgt;
    std::vector<int> position;  // child path from the root of src
};

// Apply the irreducible at the subtree addressed by `pos` (child indices from
// the root). Throws NotApplicable when the pattern does not match there.
BasicEdge make_basic_edge(const SNAlphabet& a, const TreePtr& x, const std::vector<int>& pos,
                          const Irreducible& irr);
// The edge in the opposite direction at the same position (beta flips to the
// forward beta on the other side).
BasicEdge flip_edge(const SNAlphabet& a, const BasicEdge& e);

struct CoherencePath {
    TreePtr src, tgt;
    std::vector<BasicEdge> edges;  // edges[i].tgt == edges[i+1].src
};

CoherencePath compose_paths(const CoherencePath& p, const CoherencePath& q);
CoherencePath reverse_path(const SNAlphabet& a, const CoherencePath& p);

// Deterministic normalization t -> ox_n: first one untwistor step per norm
// vertex (outermost, leftmost first), then unit elimination, left combing,
// and adjacent-transposition sorting. Never uses an inverse untwistor.
CoherencePath upsilon_directed_path(const SNAlphabet& a, const TreePtr& t);
// t -> ox_n -> u via the two directed normalizations.
CoherencePath canonical_path(const SNAlphabet& a, const TreePtr& t, const TreePtr& u);

// All non-identity basic edges out of x whose target stays within the given
// depth bound (used by bounded parallel-path scans).
std::vector<BasicEdge> basic_edges_from(const SNAlphabet& a, const TreePtr& x, int max_depth);

}  // namespace operadkit
