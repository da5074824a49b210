#pragma once

#include "operadkit/interpret.hpp"

namespace operadkit {

// Lax normed functor data between two carriers sharing a group and norm
// alphabet: an equivariant functor plus comparison maps for the unit, the
// tensor, and every norm.
struct LaxFunctor {
    const NormedSMCData* src = nullptr;
    const NormedSMCData* tgt = nullptr;
    std::vector<int> obj, mor;  // underlying functor tables
    int fe = 0;                 // e -> F(e)
    NTrans fox;                 // F(a) (x) F(b) -> F(a (x) b), n = 2
    std::vector<NTrans> fnorm;  // per norm, arity |T|
};

LaxFunctor identity_lax(const NormedSMCData& d);

// Functoriality, equivariance of all comparison data, the lax monoidal
// squares, and the untwistor square.
Report validate_lax_functor(const LaxFunctor& f);

// Classification of the comparison maps: all invertible / all identities.
bool lax_is_strong(const LaxFunctor& f);
bool lax_is_strict(const LaxFunctor& f);

// The unique extension of the comparison data to every tree: component of
// |t|(F inputs) -> F(|t| inputs) at an input tuple (indexed by leaf numbers;
// the tuple may be wider than the tree's arity).
int lax_extension_comp(const LaxFunctor& f, const TreePtr& t, const std::vector<int>& objs);
NTrans lax_extension(const LaxFunctor& f, const TreePtr& t);

// The iterated-comparison map (x)_n(F a_1..F a_n) -> F((x)_n(a_1..a_n)).
int lax_tensor_n(const LaxFunctor& f, const std::vector<int>& objs);

// The extension satisfies the operad-morphism laws: generator readback,
// identity, equivariance, composition, and naturality against basic edges.
Report extend_lax_to_operad(const LaxFunctor& f, int max_arity = 3, int max_depth = 2);

// omega[x] : F(x) -> F'(x). Checks the monoidal-transformation squares and,
// independently, the operadic squares over all bounded trees; the report
// records both verdicts and that they agree.
Report validate_monoidal_transformation(const LaxFunctor& f, const LaxFunctor& g,
                                        const std::vector<int>& omega, int max_arity = 3,
                                        int max_depth = 2);

// Reads the structure back from the tree/edge interpretations and asserts
// exact table equality with the input data.
Report roundtrip_algebra(const NormedSMCData& d);

// Parallel-path collapse plus the operad-map laws of the interpretation.
Report verify_coherence_instance(const NormedSMCData& d, int max_arity, int max_depth,
                                 int max_len);

}  // namespace operadkit
