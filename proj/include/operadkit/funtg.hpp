#pragma once

#include <array>
#include <map>

#include "operadkit/fincat.hpp"
#include "operadkit/interpret.hpp"

namespace operadkit {

// Translation category of the left coset space G/L: objects are cosets in the
// order of `reps` (identity coset first), one morphism per (group element,
// source coset).
struct TransCat {
    GroupPtr group;
    Subgroup sub;
    std::vector<int> reps;
    FiniteCategory cat;
    std::vector<std::pair<int, int>> mor_label;  // (g, src coset)

    int num_cosets() const { return static_cast<int>(reps.size()); }
    int coset_of(int g) const;      // index of the coset gL
    int mor_of(int g, int src) const;
};

// reps may reorder the cosets (identity coset must stay first); empty = the
// minimal-element default.
TransCat translation_category(const GroupPtr& g, const Subgroup& l, std::vector<int> reps = {});
// coset reps of k inside h (minimal elements, identity first)
std::vector<int> coset_reps_within(const Subgroup& h, const Subgroup& k);

// Materialized functor category Fun(TX, C) for X = G/L. Objects carry full
// value tables over TX; morphisms are determined by their component at the
// identity coset.
struct FunCat {
    TransCat tx;
    FiniteCategory c;
    std::vector<int> c_inv;                   // inverse morphism in c, -1 if none
    std::vector<std::vector<int>> obj_obj;    // [i][coset]
    std::vector<std::vector<int>> obj_mor;    // [i][tx morphism]
    std::vector<std::array<int, 3>> mors;     // (src, tgt, component at coset 0)
    std::map<std::vector<int>, int> obj_index;
    std::map<std::array<int, 3>, int> mor_index;

    int num_objects() const { return static_cast<int>(obj_obj.size()); }
    int num_morphisms() const { return static_cast<int>(mors.size()); }
    int object_of(const std::vector<int>& objs, const std::vector<int>& morvals) const;
    int morphism_of(int src, int tgt, int comp0) const;
    int dom(int m) const { return mors[m][0]; }
    int cod(int m) const { return mors[m][1]; }
    int identity(int obj) const;
    int compose(int f, int g) const;  // f after g
    int component(int m, int coset) const;
    bool invertible(int m) const;
    // G-action, defined only when L is trivial: (aC)_x = C_{xa}
    int act_obj(int a, int i) const;
    int act_mor(int a, int m) const;
};

FunCat build_fun_cat(const FiniteCategory& c, TransCat tx, int max_objects = 512,
                     int max_morphisms = 8192);
// Explicit tables (guarded); `g_cat` additionally attaches the action.
FiniteCategory materialize(const FunCat& f, int max_morphisms = 300);
GCategory materialize_g(const FunCat& f, int max_morphisms = 300);

// Left H-actions in C with all (not necessarily equivariant) maps; the
// equivariant flags cut out the subcategory of H-maps.
struct ActionCat {
    Subgroup sub;
    FiniteCategory c;
    std::vector<std::pair<int, std::vector<int>>> objects;  // (value, rho per sub element)
    std::vector<std::array<int, 3>> mors;                   // (src, tgt, underlying map)
    std::vector<char> equivariant;
    std::map<std::pair<int, std::vector<int>>, int> obj_index;
    std::map<std::array<int, 3>, int> mor_index;

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_morphisms() const { return static_cast<int>(mors.size()); }
    int object_of(int value, const std::vector<int>& rho) const;
    int morphism_of(int src, int tgt, int f) const;
    int rho_of(int obj, int h) const;  // action of the ambient element h in sub
};

ActionCat action_category(const FiniteCategory& c, const Subgroup& h);

// Object map + morphism map as plain tables; -1 marks entries outside the
// functor's domain subcategory.
struct TableFunctor {
    std::vector<int> obj, mor;
};

// The subgroup-fixed-point functor bundle around Fun(TG, C), built from one
// shared choice of G/H coset representatives.
struct FixedPointBundle {
    GroupPtr group;
    Subgroup h;
    std::vector<int> gh_reps;
    FunCat fg;    // Fun(TG, C)
    FunCat fgh;   // Fun(T(G/H), C)
    ActionCat ch; // H-actions in C
    std::vector<char> fixed_obj, fixed_mor;  // H-fixedness in fg
    TableFunctor ev_e;   // fg (H-fixed objects, all maps) -> ch
    TableFunctor hat;    // ch -> fg
    TableFunctor rstar;  // ch (equivariant part) -> fgh
    TableFunctor sstar;  // fgh -> ch
    TableFunctor tpi;    // fgh -> fg
    TableFunctor q;      // fg (H-fixed part) -> fgh
};

// `alt_reps` optionally overrides the representatives used by hat/r (for
// choice-sensitivity experiments); empty = same as gh_reps.
FixedPointBundle fixed_point_functors(const FiniteCategory& c, const GroupPtr& g,
                                      const Subgroup& h, std::vector<int> alt_reps = {});
// Strict commutations, the two exact unit identities, the strictly inverse
// pair, and explicit natural isomorphisms for the up-to-iso statements.
Report verify_fixed_point_theorems(const FixedPointBundle& b);

// Finite covering functor between translation categories with ordered fibers.
struct Covering {
    const TransCat* fine;
    const TransCat* coarse;
    std::vector<int> obj_map;
    std::vector<int> mor_map;
    std::vector<std::vector<int>> fibers;  // [coarse coset] -> ordered fine cosets
};

Covering coset_covering(const TransCat& fine, const TransCat& coarse);  // throws NotACovering
Report validate_covering(const Covering& p);

// Nonequivariant symmetric monoidal structure on a finite category.
struct SMCData {
    FiniteCategory c;
    int unit = 0;
    NFunctor tensor;
    NTrans alpha, lambda, rho, beta;
};

SMCData smc_discrete_z2();  // (Z/2, +), only identity maps
SMCData smc_chaotic_z2();   // chaotic on Z/2 with tensor = addition
NormedSMCData nsmc_of_smc(const SMCData& s);  // trivial group, no norms

// Canonical coherence data of an SMC, with memoized permutation maps computed
// through the one-step normalization machinery.
struct CoherenceContext {
    NormedSMCData triv;
    std::map<std::pair<int, std::vector<int>>, NTrans> memo;

    explicit CoherenceContext(const SMCData& s) : triv(nsmc_of_smc(s)) {}
    int tensor_obj(const std::vector<int>& objs);
    int tensor_mor(const std::vector<int>& mors);
    // the canonical map ox_n(a_1..a_n) -> ox_n(a_{tau^-1(1)}..a_{tau^-1(n)})
    int perm_map(const Perm& tau, const std::vector<int>& objs);
};

// Monoidal pushforward along a covering, on one functor / transformation.
int pushforward_obj(CoherenceContext& cc, const Covering& p, const FunCat& fine,
                    const FunCat& coarse, int obj);
int pushforward_mor(CoherenceContext& cc, const Covering& p, const FunCat& fine,
                    const FunCat& coarse, int mor);

// Norm from K-actions to H-actions: fiberwise tensor over H/K with coherence
// permutations tracking the reordering of cosets.
struct HHRNorm {
    Subgroup h, k;
    std::vector<int> hk_reps;  // coset reps of k in h
};
int hhr_norm_obj(CoherenceContext& cc, const ActionCat& kc, const ActionCat& hc,
                 const HHRNorm& n, int obj);
int hhr_norm_mor(CoherenceContext& cc, const ActionCat& kc, const ActionCat& hc,
                 const HHRNorm& n, int mor);

// S-norm and untwistor on Fun(TG, C), evaluated per tuple.
struct FunTGNorm {
    Exponent s;            // ordered H-set
    GraphSubgroup gamma;
    std::vector<int> gh_reps;  // G/H coset reps, identity first
};
FunTGNorm make_funtg_norm(const Exponent& s);
int funtg_norm_obj(CoherenceContext& cc, const FunCat& fg, const FunTGNorm& n,
                   const std::vector<int>& objs);
int funtg_norm_mor(CoherenceContext& cc, const FunCat& fg, const FunTGNorm& n,
                   const std::vector<int>& mors);
int funtg_upsilon(CoherenceContext& cc, const FunCat& fg, const FunTGNorm& n,
                  const std::vector<int>& objs);
// levelwise tensor / unit on Fun(TG, C)
int funtg_tensor_obj(CoherenceContext& cc, const FunCat& fg, int a, int b);
int funtg_tensor_mor(CoherenceContext& cc, const FunCat& fg, int a, int b);
int funtg_unit(CoherenceContext& cc, const FunCat& fg);

// Norm evaluators built through the free-operad route: a coset-indexed family
// of trees, with transition maps given by canonical coherence paths.
int operadic_norm_obj(CoherenceContext& cc, const FunCat& fg, const FunTGNorm& n,
                      const std::vector<int>& objs);
int operadic_norm_mor(CoherenceContext& cc, const FunCat& fg, const FunTGNorm& n,
                      const std::vector<int>& mors);
int operadic_upsilon(CoherenceContext& cc, const FunCat& fg, const FunTGNorm& n,
                     const std::vector<int>& objs);

// Full normed structure on Fun(TG, C) with one norm per exponent (guarded to
// small instances).
NormedSMCData funtg_nsmc(const SMCData& s, const GroupPtr& g,
                         const std::vector<Exponent>& norm_gens);

// The fixed-point and norm theorems for K <= H <= G over an SMC base.
Report verify_norm_theorems(const SMCData& s, const GroupPtr& g, const Subgroup& h,
                            const Subgroup& k);
// The two norm constructions produce identical tables and both validate.
Report compare_norm_routes(const SMCData& s, const GroupPtr& g, const Exponent& e);

}  // namespace operadkit
