#include "doctest.h"
#include "operadkit/fixtures.hpp"
#include "operadkit/zoo.hpp"

using namespace operadkit;

namespace {

Exponent regular_exponent(const GroupPtr& g) {
    return coset_exponent(full_subgroup(g), trivial_subgroup(g));
}

Subgroup product_subgroup(const GroupPtr& prod, const GroupPtr& right,
                          const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> els;
    for (auto [x, y] : pairs) els.push_back(product_pair(right, x, y));
    return subgroup_from_elements(prod, els);
}

}  // namespace

TEST_CASE("permutativity level sizes") {
    auto c2 = cyclic_group(2);
    CHECK(build_PG_level(c2, 2).size == 4);   // 2!^|C2|
    CHECK(build_PG_level(c2, 0).size == 1);
    CHECK(build_PG_level(c2, 3).size == 36);  // 3!^2
    auto e = cyclic_group(1);
    CHECK(build_PG_level(e, 3).size == 6);    // plain Sigma_3
}

TEST_CASE("block composition of permutations matches tree grafting") {
    auto c2 = cyclic_group(2);
    auto a = build_sn_alphabet(c2, {});
    auto inner = enumerate_trees(a, 1, 1);
    for (const auto& t : enumerate_trees(a, 2, 1)) inner.push_back(t);
    for (const auto& y : enumerate_trees(a, 2, 1))
        for (const auto& x1 : inner)
            for (const auto& x2 : inner) {
                auto py = p_interpret(y);
                auto p1 = p_interpret(x1);
                auto p2 = p_interpret(x2);
                auto lhs = p_interpret(gamma_compose(y, {x1, x2}));
                CHECK(lhs == be_gamma(py, {p1, p2}));
            }
}

TEST_CASE("fixed functions are graph-fixed and interpret the norm corollas") {
    auto c4 = cyclic_group(4);
    auto h = subgroup_generated(c4, {2});
    std::vector<Exponent> gens{coset_exponent(h, trivial_subgroup(c4)),
                               coset_exponent(full_subgroup(c4), h), regular_exponent(c4)};
    auto a = build_sn_alphabet(c4, gens);
    std::vector<GPerm> vals;
    for (const auto& n : a.norms) vals.push_back(fixed_function(c4, n.t));
    for (size_t i = 0; i < a.norms.size(); ++i) {
        auto cor = corolla(a, Label{LabelKind::Norm, static_cast<int>(i), 0});
        CHECK(pg_interpret(a, vals, cor) == vals[i]);
        auto lv = build_PG_level(c4, a.norms[i].t.size);
        std::vector<std::pair<int, Perm>> pairs;
        for (int k = 0; k < a.norms[i].gamma.sub.order(); ++k)
            pairs.push_back({a.norms[i].gamma.sub.elements[k], a.norms[i].gamma.sigma[k]});
        auto fixed = level_fixed_points(lv, pairs);
        int idx = gperm_index(c4, a.norms[i].t.size, vals[i]);
        CHECK(std::count(fixed.begin(), fixed.end(), idx) == 1);
    }
}

TEST_CASE("fixed profiles distinguish graphs from pure permutations") {
    auto c2 = cyclic_group(2);
    auto s2 = symmetric_group(2);
    auto prod = product_group(c2, s2);
    auto lv = build_PG_level(c2, 2);
    // graph of the regular C2-set: (1, swap)
    CHECK(fixed_profile(lv, product_subgroup(prod, s2, {{0, 0}, {1, 1}})));
    // pure swap
    CHECK(!fixed_profile(lv, product_subgroup(prod, s2, {{0, 0}, {0, 1}})));
    // trivial subgroup
    CHECK(fixed_profile(lv, product_subgroup(prod, s2, {{0, 0}})));
    for (const auto& lambda : enumerate_subgroups(prod))
        for (int c = 0; c < prod->order(); ++c)
            CHECK(fixed_profile(lv, conjugate_subgroup(lambda, c)) == fixed_profile(lv, lambda));
}

TEST_CASE("witness trees exist for coset orbits and fail without generators") {
    auto c2 = cyclic_group(2);
    auto reg = regular_exponent(c2);
    auto a = build_sn_alphabet(c2, {reg});
    auto w = fixed_witness_tree(a, reg);
    CHECK(tree_fixed_by(a, w, graph_subgroup(reg)));
    auto both = exponent_sum(reg, reg);
    auto w2 = fixed_witness_tree(a, both);
    CHECK(tree_fixed_by(a, w2, graph_subgroup(both)));
    auto bare = build_sn_alphabet(c2, {});
    CHECK_THROWS_WITH_AS(fixed_witness_tree(bare, reg), doctest::Contains("NoFixedWitness"),
                         Error);
}

TEST_CASE("comparison with the permutativity operads: trivial group and C2") {
    auto e = cyclic_group(1);
    auto r = comparison_maps(e, 3, 2);
    INFO(r.text());
    CHECK(r.ok());
    auto c2 = cyclic_group(2);
    r = comparison_maps(c2, 3, 2);
    INFO(r.text());
    CHECK(r.ok());
}

TEST_CASE("comparison with the permutativity operads: C4") {
    auto c4 = cyclic_group(4);
    auto r = comparison_maps(c4, 2, 2);
    INFO(r.text());
    CHECK(r.ok());
}

TEST_CASE("truncated levels of the free operad recover the generated system") {
    auto c2 = cyclic_group(2);
    auto lat = build_subgroup_lattice(c2);
    auto reg = regular_exponent(c2);
    CHECK(generated_admissibles(lat, generating_sequence(c2, {reg}, 4), 4) ==
          generate_indexing(lat, {reg}));
    CHECK(generated_admissibles(lat, generating_sequence(c2, {}, 4), 4) ==
          trivial_indexing(lat));
}

TEST_CASE("same generators give meet = join = the generated system") {
    auto c2 = cyclic_group(2);
    auto reg = regular_exponent(c2);
    auto r = lattice_check(c2, {reg}, {reg});
    INFO(r.text());
    CHECK(r.ok());
}

TEST_CASE("C4: product of truncations is the meet, coproduct the join") {
    auto c4 = cyclic_group(4);
    auto h = subgroup_generated(c4, {2});
    auto n1 = coset_exponent(h, trivial_subgroup(c4));   // C2/e
    auto n2 = coset_exponent(full_subgroup(c4), h);      // C4/C2
    auto lat = build_subgroup_lattice(c4);
    auto a1 = generate_indexing(lat, {n1});
    auto a2 = generate_indexing(lat, {n2});
    CHECK(indexing_meet(a1, a2) == trivial_indexing(lat));
    CHECK(indexing_join(a1, a2) == complete_indexing(lat));
    auto r = lattice_check(c4, {n1}, {n2});
    INFO(r.text());
    CHECK(r.ok());
}

TEST_CASE("bounded tree sets order the indexing systems") {
    auto c2 = cyclic_group(2);
    auto r = suboperad_poset_check(c2);
    INFO(r.text());
    CHECK(r.ok());
    auto c4 = cyclic_group(4);
    r = suboperad_poset_check(c4);
    INFO(r.text());
    CHECK(r.ok());
}

TEST_CASE("change of norms: adding nothing and adding a sum of regulars") {
    auto c2 = cyclic_group(2);
    auto reg = regular_exponent(c2);
    auto d = discrete_maps_carrier(c2, {reg});
    auto r = change_of_norms(d, {});
    INFO(r.text());
    CHECK(r.ok());
    r = change_of_norms(d, {exponent_sum(reg, reg)});
    INFO(r.text());
    CHECK(r.ok());
}

TEST_CASE("change of norms rejects generators that enlarge the system") {
    auto c2 = cyclic_group(2);
    CHECK_THROWS_WITH_AS(change_of_norms_data(c2, {}, {regular_exponent(c2)}),
                         doctest::Contains("NotSameIndexing"), Error);
}

TEST_CASE("extend/restrict is an equivalence on every normed parity carrier") {
    auto c2 = cyclic_group(2);
    auto t = trivial_exponent(trivial_subgroup(c2), 2);
    auto ch = change_of_norms_data(c2, {}, {t});
    int valid = 0;
    for (const auto& d : parity_norm_candidates(c2, t)) {
        if (!validate_nsmc(d).ok()) continue;
        ++valid;
        auto r = er_equivalence(ch, d);
        INFO(r.text());
        CHECK(r.ok());
    }
    CHECK(valid > 1);  // includes carriers whose untwistor differs from the extension's
}
