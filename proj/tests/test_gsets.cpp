#include "doctest.h"
#include "operadkit/groups.hpp"
#include "operadkit/gsets.hpp"

#include <algorithm>
#include <set>

using namespace operadkit;

namespace {

// oracle: count iso classes of H-sets on n points by enumerating all
// homomorphisms H -> Sigma_n and identifying simultaneous conjugates
int oracle_iso_class_count(const Subgroup& h, int n) {
    auto perms = all_perms(n);
    const int m = static_cast<int>(perms.size());
    const int k = h.order();
    std::vector<std::vector<int>> homs;
    std::vector<int> pick(k, 0);
    while (true) {
        bool is_hom = true;
        auto idx = [&](int elem) {
            for (int i = 0; i < k; ++i)
                if (h.elements[i] == elem) return i;
            return -1;
        };
        for (int a = 0; a < k && is_hom; ++a)
            for (int b = 0; b < k && is_hom; ++b) {
                int ab = idx(h.group->op(h.elements[a], h.elements[b]));
                if (!(compose(perms[pick[a]], perms[pick[b]]) == perms[pick[ab]])) is_hom = false;
            }
        if (is_hom) homs.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == m - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    std::set<std::vector<int>> canon;
    for (const auto& hm : homs) {
        std::vector<int> best;
        for (const auto& t : perms) {
            std::vector<int> conj;
            for (int a = 0; a < k; ++a)
                conj.push_back(perm_index(compose(compose(t, perms[hm[a]]), t.inverse())));
            if (best.empty() || conj < best) best = conj;
        }
        canon.insert(best);
    }
    return static_cast<int>(canon.size());
}

}  // namespace

TEST_CASE("exponent validation") {
    auto c2 = cyclic_group(2);
    auto full = full_subgroup(c2);
    CHECK_THROWS_AS(exponent_from_action(full, 2, {{0, 1}, {0, 0}}), Error);
    CHECK_THROWS_AS(exponent_from_action(full, 2, {{1, 0}, {0, 1}}), Error);  // identity not id
    auto e = exponent_from_action(full, 2, {{0, 1}, {1, 0}});
    CHECK(e.act(1, 0) == 1);
    CHECK_THROWS_AS(e.act(0, 0) + 0 * exponent_from_action(full, 1, {{0}, {0}}).act(2, 0), Error);
}

TEST_CASE("coset exponents are transitive with the right stabilizer") {
    auto s3 = symmetric_group(3);
    auto hs = enumerate_subgroups(s3);
    for (const auto& h : hs) {
        for (const auto& k : hs) {
            if (!subgroup_leq(k, h)) continue;
            auto e = coset_exponent(h, k);
            CHECK(e.size == h.order() / k.order());
            auto orbits = orbit_decompose(e);
            REQUIRE(orbits.size() == 1);
            // stabilizer of the identity coset is k itself
            CHECK(orbits[0].stabilizer == k);
        }
    }
}

TEST_CASE("orbit decomposition of sums") {
    auto c4 = cyclic_group(4);
    auto full = full_subgroup(c4);
    auto c2 = subgroup_generated(c4, {2});
    auto e = exponent_sum(coset_exponent(full, c2), trivial_exponent(full, 1));
    CHECK(e.size == 3);
    auto orbits = orbit_decompose(e);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].points == std::vector<int>{0, 1});
    CHECK(orbits[0].stabilizer == c2);
    CHECK(orbits[1].points == std::vector<int>{2});
    CHECK(orbits[1].stabilizer == full);
}

TEST_CASE("graph subgroup is the permutation representation") {
    auto s3 = symmetric_group(3);
    auto full = full_subgroup(s3);
    auto e = coset_exponent(full, subgroup_generated(s3, {perm_index(Perm{{1, 0, 2}})}));
    auto gs = graph_subgroup(e);
    CHECK(gs.degree == 3);
    // sigma is a homomorphism
    for (int a : full.elements)
        for (int b : full.elements)
            CHECK(gs.sigma_of(s3->op(a, b)) == compose(gs.sigma_of(a), gs.sigma_of(b)));
    CHECK(gs.sigma_of(0).is_identity());
}

TEST_CASE("reorder and restrict") {
    auto c4 = cyclic_group(4);
    auto full = full_subgroup(c4);
    auto e = coset_exponent(full, trivial_subgroup(c4));  // regular C4-set
    auto r = reorder_exponent(e, Perm{{2, 0, 3, 1}});
    CHECK(gsets_isomorphic(e, r));
    CHECK(!(e == r));
    auto c2 = subgroup_generated(c4, {2});
    auto res = restrict_exponent(e, c2);
    CHECK(res.sub == c2);
    auto orbits = orbit_decompose(res);
    CHECK(orbits.size() == 2);  // C4 restricted to C2 splits into two free orbits
    for (auto& o : orbits) CHECK(o.stabilizer.order() == 1);
}

TEST_CASE("iso-class enumeration matches homomorphism-conjugacy oracle") {
    struct Case {
        GroupPtr g;
        bool whole;
        int n;
    };
    auto c2 = cyclic_group(2);
    auto c4 = cyclic_group(4);
    auto s3 = symmetric_group(3);
    for (auto& [g, name] : std::vector<std::pair<GroupPtr, const char*>>{
             {c2, "C2"}, {c4, "C4"}, {s3, "S3"}}) {
        CAPTURE(name);
        for (const auto& h : enumerate_subgroups(g)) {
            for (int n = 0; n <= 3; ++n) {
                auto classes = enumerate_hsets_up_to_iso(h, n);
                // pairwise non-isomorphic
                for (size_t i = 0; i < classes.size(); ++i)
                    for (size_t j = i + 1; j < classes.size(); ++j)
                        CHECK(!gsets_isomorphic(classes[i], classes[j]));
                CHECK(static_cast<int>(classes.size()) == oracle_iso_class_count(h, n));
            }
        }
    }
    // spot values
    auto fc2 = full_subgroup(c2);
    CHECK(enumerate_hsets_up_to_iso(fc2, 2).size() == 2);
    CHECK(enumerate_hsets_up_to_iso(fc2, 4).size() == 3);
    CHECK(enumerate_hsets_up_to_iso(full_subgroup(s3), 4).size() == 4);
}
