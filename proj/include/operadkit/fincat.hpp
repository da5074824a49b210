#pragma once

#include "operadkit/reports.hpp"
#include "operadkit/tree.hpp"

namespace operadkit {

// Finite category as tables: morphisms carry dom/cod, comp[f][g] = f . g
// (g applied first), -1 where undefined.
struct FiniteCategory {
    int num_objects = 0;
    std::vector<int> dom, cod;
    std::vector<int> idm;  // identity morphism per object
    std::vector<std::vector<int>> comp;

    int num_morphisms() const { return static_cast<int>(dom.size()); }
    bool defined(int f, int g) const { return comp[f][g] >= 0; }
    int compose(int f, int g) const;  // f after g
    int inverse(int m) const;         // -1 when m is not invertible
};

FiniteCategory category_from_tables(int num_objects, std::vector<int> dom, std::vector<int> cod,
                                    std::vector<int> idm, std::vector<std::vector<int>> comp);
FiniteCategory discrete_category(int n);
FiniteCategory chaotic_category(int n);  // exactly one morphism between any two objects
int chaotic_morphism(const FiniteCategory& c, int from, int to);

// Strict G-action on a finite category.
struct GCategory {
    GroupPtr group;
    FiniteCategory cat;
    std::vector<std::vector<int>> act_obj;  // [g][o]
    std::vector<std::vector<int>> act_mor;  // [g][m]

    int g_obj(int g, int o) const { return act_obj[g][o]; }
    int g_mor(int g, int m) const { return act_mor[g][m]; }
};

GCategory g_category(const GroupPtr& g, FiniteCategory cat, std::vector<std::vector<int>> act_obj,
                     std::vector<std::vector<int>> act_mor);
GCategory trivial_g_category(const GroupPtr& g, FiniteCategory cat);

// n-ary functor C^n -> C with explicit tables over mixed-radix tuple indices
// (first coordinate most significant).
struct NFunctor {
    int n = 0;
    std::vector<int> obj;
    std::vector<int> mor;
};

long long tuple_index(const std::vector<int>& tup, int base);
std::vector<int> tuple_at(long long idx, int base, int n);
long long pow_ll(int base, int n);

// Natural transformation data: one morphism per object tuple.
struct NTrans {
    int n = 0;
    std::vector<int> comp;
};

// All morphism tuples that are coordinatewise composable, as (f, g) pairs of
// tuple indices; cost-guarded.
void for_each_composable(const FiniteCategory& c, int n,
                         const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn);

bool nfunctor_is_functor(const FiniteCategory& c, const NFunctor& f, std::string* why = nullptr);

// Normed symmetric monoidal data on a G-category: unit, tensor, coherences,
// and one norm functor + untwistor per norm generator of the alphabet.
struct NormedSMCData {
    GCategory c;
    SNAlphabet alphabet;  // same group as c
    int unit = 0;
    NFunctor tensor;               // n = 2
    NTrans alpha;                  // n = 3
    NTrans lambda, rho;            // n = 1
    NTrans beta;                   // n = 2
    std::vector<NFunctor> norms;   // per alphabet norm, arity |T|
    std::vector<NTrans> upsilon;   // norm => standard tensor comb
};

// Exhaustive validation: functoriality, coherence diagrams, naturality,
// equivariance of all structure, graph-subgroup fixedness of norms, and the
// twisted-equivariance square of each untwistor.
Report validate_nsmc(const NormedSMCData& d);

}  // namespace operadkit
