#include "doctest.h"
#include "operadkit/fixtures.hpp"
#include "operadkit/funtg.hpp"
#include "operadkit/normed_functors.hpp"

using namespace operadkit;

namespace {

Exponent regular_exponent(const GroupPtr& g) {
    return coset_exponent(full_subgroup(g), trivial_subgroup(g));
}

// constant functor onto the unit, with identity comparison data
LaxFunctor constant_unit(const NormedSMCData& d) {
    LaxFunctor f = identity_lax(d);
    for (int& o : f.obj) o = d.unit;
    for (int& m : f.mor) m = d.c.cat.idm[d.unit];
    f.fe = d.c.cat.idm[d.unit];
    for (int& c : f.fox.comp) c = d.c.cat.idm[d.unit];
    for (auto& t : f.fnorm)
        for (int& c : t.comp) c = d.c.cat.idm[d.unit];
    return f;
}

NormedSMCData first_valid_parity_norm(const GroupPtr& g, const Exponent& t) {
    for (auto& d : parity_norm_candidates(g, t))
        if (validate_nsmc(d).ok()) return d;
    throw Error("Internal", "no valid parity norm candidate");
}

}  // namespace

TEST_CASE("identity functors are strict and satisfy the operad-extension laws") {
    auto c2 = cyclic_group(2);
    auto c4 = cyclic_group(4);
    std::vector<NormedSMCData> carriers;
    carriers.push_back(discrete_maps_carrier(c2, {regular_exponent(c2)}));
    carriers.push_back(chaotic_carrier(c2, {regular_exponent(c2)}));
    carriers.push_back(parity_carrier(c2));
    carriers.push_back(poset_max_carrier());
    // proper-subgroup norm: the extension must conjugate through the coset rep
    auto h = subgroup_generated(c4, {2});
    carriers.push_back(discrete_maps_carrier(c4, {coset_exponent(h, trivial_subgroup(c4))}));
    for (const auto& d : carriers) {
        auto f = identity_lax(d);
        auto r = validate_lax_functor(f);
        INFO(r.text());
        CHECK(r.ok());
        CHECK(lax_is_strict(f));
        CHECK(lax_is_strong(f));
        r = extend_lax_to_operad(f);
        INFO(r.text());
        CHECK(r.ok());
    }
}

TEST_CASE("constant functors onto the unit are strict") {
    auto c2 = cyclic_group(2);
    for (const auto& d :
         {discrete_maps_carrier(c2, {regular_exponent(c2)}), poset_max_carrier()}) {
        auto f = constant_unit(d);
        auto r = validate_lax_functor(f);
        INFO(r.text());
        CHECK(r.ok());
        CHECK(lax_is_strict(f));
        CHECK(extend_lax_to_operad(f).ok());
    }
}

TEST_CASE("the shift on the chaotic carrier is strong but not strict") {
    auto c2 = cyclic_group(2);
    auto d = chaotic_carrier(c2, {regular_exponent(c2)});
    const auto& cat = d.c.cat;
    LaxFunctor f;
    f.src = f.tgt = &d;
    for (int o = 0; o < cat.num_objects; ++o) f.obj.push_back(1 - o);
    for (int m = 0; m < cat.num_morphisms(); ++m)
        f.mor.push_back(chaotic_morphism(cat, f.obj[cat.dom[m]], f.obj[cat.cod[m]]));
    f.fe = chaotic_morphism(cat, d.unit, f.obj[d.unit]);
    f.fox.n = 2;
    for (long long oi = 0; oi < pow_ll(cat.num_objects, 2); ++oi) {
        auto t = tuple_at(oi, cat.num_objects, 2);
        int dom = d.tensor.obj[tuple_index({f.obj[t[0]], f.obj[t[1]]}, cat.num_objects)];
        f.fox.comp.push_back(chaotic_morphism(cat, dom, f.obj[d.tensor.obj[oi]]));
    }
    NTrans fn;
    fn.n = 2;
    for (long long oi = 0; oi < pow_ll(cat.num_objects, 2); ++oi) {
        auto t = tuple_at(oi, cat.num_objects, 2);
        int dom = d.norms[0].obj[tuple_index({f.obj[t[0]], f.obj[t[1]]}, cat.num_objects)];
        fn.comp.push_back(chaotic_morphism(cat, dom, f.obj[d.norms[0].obj[oi]]));
    }
    f.fnorm.push_back(fn);
    auto r = validate_lax_functor(f);
    INFO(r.text());
    CHECK(r.ok());
    CHECK(lax_is_strong(f));
    CHECK(!lax_is_strict(f));
    r = extend_lax_to_operad(f);
    INFO(r.text());
    CHECK(r.ok());
}

TEST_CASE("the constant functor onto the top of the poset is lax but not strong") {
    auto d = poset_max_carrier();
    LaxFunctor f = identity_lax(d);
    for (int& o : f.obj) o = 1;
    for (int& m : f.mor) m = d.c.cat.idm[1];
    f.fe = poset_mor(0, 1);
    for (int& c : f.fox.comp) c = d.c.cat.idm[1];
    auto r = validate_lax_functor(f);
    INFO(r.text());
    CHECK(r.ok());
    CHECK(!lax_is_strong(f));
    CHECK(extend_lax_to_operad(f).ok());
}

TEST_CASE("a corrupted tensor comparison is rejected on both routes") {
    auto d = parity_carrier(cyclic_group(2));
    auto f = identity_lax(d);
    // flip the sign of every tensor comparison component
    for (int& c : f.fox.comp) c = (d.c.cat.dom[c] * 2) + 1;
    auto r = validate_lax_functor(f);
    CHECK(!r.ok());
    CHECK(r.find("functor")->pass);
    CHECK(r.find("tensor-comparison-natural")->pass);
    CHECK(!r.find("lax-unitality")->pass);
    r = extend_lax_to_operad(f);
    CHECK(!r.ok());
    CHECK(r.find("extension-generators")->pass);
    CHECK(!r.find("extension-naturality")->pass);
}

TEST_CASE("a corrupted norm comparison breaks the untwistor square") {
    auto c2 = cyclic_group(2);
    // the regular exponent admits no parity norm; the trivial H-set does
    auto d = first_valid_parity_norm(c2, trivial_exponent(trivial_subgroup(c2), 2));
    auto f = identity_lax(d);
    CHECK(validate_lax_functor(f).ok());
    for (int& c : f.fnorm[0].comp) c = (d.c.cat.dom[c] * 2) + 1;
    auto r = validate_lax_functor(f);
    CHECK(!r.ok());
    CHECK(r.find("norm0-comparison-graph-fixed")->pass);
    CHECK(!r.find("norm0-untwistor-square")->pass);
    CHECK(!extend_lax_to_operad(f).ok());
}

TEST_CASE("monoidal transformations agree with the treewise criterion") {
    auto d = parity_carrier(cyclic_group(2));
    auto f = identity_lax(d);
    // omega assigns a sign to each object; valid iff it is a homomorphism
    for (int s0 = 0; s0 < 2; ++s0)
        for (int s1 = 0; s1 < 2; ++s1) {
            std::vector<int> omega{0 * 2 + s0, 1 * 2 + s1};
            auto r = validate_monoidal_transformation(f, f, omega);
            INFO(r.text());
            CHECK(r.find("verdicts-agree")->pass);
            CHECK(r.ok() == (s0 == 0));
            CHECK(r.find("omega-operadic")->pass == (s0 == 0));
            if (s0 == 1) CHECK(!r.find("omega-unit-square")->pass);
        }
}

TEST_CASE("the identity transformation is monoidal on a normed carrier") {
    auto c2 = cyclic_group(2);
    auto d = first_valid_parity_norm(c2, trivial_exponent(trivial_subgroup(c2), 2));
    auto f = identity_lax(d);
    std::vector<int> omega;
    for (int o = 0; o < d.c.cat.num_objects; ++o) omega.push_back(d.c.cat.idm[o]);
    auto r = validate_monoidal_transformation(f, f, omega);
    INFO(r.text());
    CHECK(r.ok());
}

TEST_CASE("structure readback from the interpretation") {
    auto c2 = cyclic_group(2);
    std::vector<NormedSMCData> carriers;
    carriers.push_back(discrete_maps_carrier(c2, {regular_exponent(c2)}));
    carriers.push_back(chaotic_carrier(c2, {regular_exponent(c2)}));
    carriers.push_back(parity_carrier(c2));
    carriers.push_back(poset_max_carrier());
    carriers.push_back(funtg_nsmc(smc_chaotic_z2(), c2, {regular_exponent(c2)}));
    for (const auto& d : carriers) {
        auto r = roundtrip_algebra(d);
        INFO(r.text());
        CHECK(r.ok());
    }
}

TEST_CASE("coherence instances collapse and interpret operadically") {
    auto c2 = cyclic_group(2);
    for (const auto& d : {chaotic_carrier(c2, {regular_exponent(c2)}), parity_carrier(c2)}) {
        auto r = verify_coherence_instance(d, 2, 2, 3);
        INFO(r.text());
        CHECK(r.ok());
    }
}
