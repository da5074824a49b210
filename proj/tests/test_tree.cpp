#include "doctest.h"
#include "operadkit/symseq.hpp"
#include "operadkit/tree.hpp"

#include <set>

using namespace operadkit;

namespace {

SNAlphabet c2_alphabet() {
    auto c2 = cyclic_group(2);
    auto t = coset_exponent(full_subgroup(c2), trivial_subgroup(c2));  // C2/e
    return build_sn_alphabet(c2, {t});
}

void check_level_laws(const GSigmaSet& lv) {
    auto perms = all_perms(lv.n);
    const auto& g = lv.group;
    for (int e = 0; e < lv.size; ++e) {
        CHECK(lv.act(0, Perm::identity(lv.n), e) == e);
        for (int a = 0; a < g->order(); ++a)
            for (int b = 0; b < g->order(); ++b)
                CHECK(lv.act_g[g->op(a, b)][e] == lv.act_g[a][lv.act_g[b][e]]);
        for (const auto& s : perms)
            for (const auto& t : perms)
                CHECK(lv.act_sigma[perm_index(compose(s, t))][e] ==
                      lv.act_sigma[perm_index(s)][lv.act_sigma[perm_index(t)][e]]);
        for (int a = 0; a < g->order(); ++a)
            for (const auto& s : perms)
                CHECK(lv.act_g[a][lv.act_sigma[perm_index(s)][e]] ==
                      lv.act_sigma[perm_index(s)][lv.act_g[a][e]]);
    }
}

}  // namespace

TEST_CASE("coset levels: sizes and action laws") {
    auto c2 = cyclic_group(2);
    auto full = full_subgroup(c2);
    auto free2 = coset_exponent(full, trivial_subgroup(c2));
    auto lv = coset_level(c2, graph_subgroup(free2));
    CHECK(lv.size == 2);  // |C2 x S2| / |Gamma| = 4/2
    check_level_laws(lv);
    auto lv2 = coset_level(c2, graph_subgroup(trivial_exponent(full, 2)));
    CHECK(lv2.size == 2);
    check_level_laws(lv2);
    check_level_laws(level_sum(lv, lv2));
    check_level_laws(mapping_level(c2, 2));
    CHECK(mapping_level(c2, 2).size == 4);

    auto s3 = symmetric_group(3);
    auto h = subgroup_generated(s3, {perm_index(Perm{{1, 0, 2}})});
    auto he = coset_exponent(h, trivial_subgroup(s3));
    auto lv3 = coset_level(s3, graph_subgroup(he));
    CHECK(lv3.size == 6 * 2 / 2);
    check_level_laws(lv3);
}

TEST_CASE("admissibility of levels via graph-subgroup fixed points") {
    auto a = c2_alphabet();
    auto c2 = a.group;
    auto full = full_subgroup(c2);
    auto free2 = coset_exponent(full, trivial_subgroup(c2));
    auto sn = a.to_symseq(4);
    CHECK(symseq_admits(sn, free2));
    CHECK(symseq_admits(sn, trivial_exponent(full, 2)));
    CHECK(symseq_admits(sn, trivial_exponent(full, 0)));
    // the norm-free sequence does not admit the free orbit
    auto s0 = build_sn_alphabet(c2, {}).to_symseq(4);
    CHECK(!symseq_admits(s0, free2));
    CHECK(symseq_admits(s0, trivial_exponent(full, 2)));
    auto lat = build_subgroup_lattice(c2);
    CHECK(generated_admissibles(lat, s0, 4) == trivial_indexing(lat));
    CHECK(generated_admissibles(lat, sn, 4) == complete_indexing(lat));
}

TEST_CASE("gamma composition: units, associativity, numbering blocks") {
    auto a = c2_alphabet();
    Label ox{LabelKind::Ox, -1, -1};
    auto one = make_leaf(1);
    auto t = corolla(a, ox);
    CHECK(tree_equal(gamma_compose(one, {t}), t));
    CHECK(tree_equal(gamma_compose(t, {one, one}), t));
    // ((1 2) 3) via grafting at slot 1
    auto left = gamma_compose(t, {t, one});
    CHECK(canonical_form(left) == "x(x(L1,L2),L3)");
    auto right = gamma_compose(t, {one, t});
    CHECK(canonical_form(right) == "x(L1,x(L2,L3))");
    // associativity: gamma(gamma(t; t,1); t,1,1) == gamma(t; gamma(t;t,1), 1)
    auto lhs = gamma_compose(left, {t, one, one});
    auto rhs = gamma_compose(t, {left, one});
    CHECK(tree_equal(lhs, rhs));
    validate_tree(a, lhs);
    // block renumbering: grafting arity-2 trees into both slots
    auto both = gamma_compose(t, {t, t});
    CHECK(canonical_form(both) == "x(x(L1,L2),x(L3,L4))");
}

TEST_CASE("sigma action relabels leaf numbers") {
    auto a = c2_alphabet();
    auto t = gamma_compose(corolla(a, Label{LabelKind::Ox, -1, -1}),
                           {corolla(a, Label{LabelKind::Ox, -1, -1}), make_leaf(1)});
    auto s = sigma_act(Perm{{2, 0, 1}}, t);  // 1->3, 2->1, 3->2
    CHECK(canonical_form(s) == "x(x(L3,L1),L2)");
    validate_tree(a, s);
}

TEST_CASE("label action factors through representatives") {
    auto s3 = symmetric_group(3);
    auto h = subgroup_generated(s3, {perm_index(Perm{{1, 0, 2}})});
    auto a = build_sn_alphabet(s3, {coset_exponent(h, trivial_subgroup(s3))});
    CHECK(a.norms[0].coset_reps.size() == 3);
    std::vector<Label> labels;
    for (int n = 0; n <= 4; ++n)
        for (auto l : a.reps_of_arity(n)) labels.push_back(l);
    for (const auto& l : labels)
        for (int g1 = 0; g1 < 6; ++g1)
            for (int g2 = 0; g2 < 6; ++g2) {
                auto [l1, t1] = a.g_act_on_label(g1, l);
                auto [l2, t2] = a.g_act_on_label(g2, l1);
                auto [l12, t12] = a.g_act_on_label(s3->op(g2, g1), l);
                CHECK(l2 == l12);
                CHECK(t12 == compose(t1, t2));
            }
    // identity acts trivially
    for (const auto& l : labels) {
        auto [l0, t0] = a.g_act_on_label(0, l);
        CHECK(l0 == l);
        CHECK(t0.is_identity());
    }
}

TEST_CASE("tree action is a (G x Sigma_n)-action") {
    auto a = c2_alphabet();
    for (int n = 0; n <= 2; ++n) {
        auto trees = enumerate_trees(a, n, 2);
        auto perms = all_perms(n);
        for (const auto& t : trees) {
            CHECK(tree_equal(act(a, 0, Perm::identity(n), t), t));
            for (int g1 = 0; g1 < 2; ++g1)
                for (int g2 = 0; g2 < 2; ++g2)
                    for (const auto& s1 : perms)
                        for (const auto& s2 : perms) {
                            auto one = act(a, g2, s2, act(a, g1, s1, t));
                            auto two = act(a, a.group->op(g2, g1), compose(s2, s1), t);
                            CHECK(tree_equal(one, two));
                        }
        }
    }
}

TEST_CASE("gamma is equivariant for the diagonal G-action") {
    auto a = c2_alphabet();
    auto t2 = enumerate_trees(a, 2, 1);
    for (const auto& t : t2)
        for (const auto& u1 : t2)
            for (const auto& u2 : t2)
                for (int g = 0; g < 2; ++g) {
                    auto lhs = g_act(a, g, gamma_compose(t, {u1, u2}));
                    auto rhs = gamma_compose(g_act(a, g, t), {g_act(a, g, u1), g_act(a, g, u2)});
                    CHECK(tree_equal(lhs, rhs));
                }
}

TEST_CASE("norm corolla is fixed by its graph subgroup") {
    auto a = c2_alphabet();
    auto t = corolla(a, Label{LabelKind::Norm, 0, 0});
    CHECK(tree_fixed_by(a, t, a.norms[0].gamma));
    auto stab = tree_stabilizer(a, t);
    // stabilizer is exactly Gamma_T = {(0,id),(1,(01))}
    REQUIRE(stab.size() == 2);
    CHECK(stab[0].first == 0);
    CHECK(stab[0].second.is_identity());
    CHECK(stab[1].first == 1);
    CHECK(stab[1].second == Perm{{1, 0}});
    // the plain tensor corolla is fixed by everything
    CHECK(tree_stabilizer(a, corolla(a, Label{LabelKind::Ox, -1, -1})).size() == 2);
}

TEST_CASE("tree enumeration counts (hand-checked)") {
    auto a = c2_alphabet();
    auto pure = build_sn_alphabet(a.group, {});
    CHECK(enumerate_trees(pure, 0, 2).size() == 2);   // e, x(e,e)
    CHECK(enumerate_trees(pure, 1, 2).size() == 3);   // leaf, x(e,1), x(1,e)
    CHECK(enumerate_trees(pure, 2, 2).size() == 6);
    CHECK(enumerate_trees(a, 2, 2).size() == 20);
    // all enumerated trees are valid, distinct, in-bounds
    std::set<std::string> seen;
    for (const auto& t : enumerate_trees(a, 3, 2)) {
        validate_tree(a, t);
        CHECK(tree_arity(t) == 3);
        CHECK(tree_depth(t) <= 2);
        CHECK(seen.insert(canonical_form(t)).second);
    }
    CHECK_THROWS_WITH_AS(enumerate_trees(a, 4, 3, 50), doctest::Contains("TooLarge"), Error);
}
