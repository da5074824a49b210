#include "operadkit/symseq.hpp"

#include <algorithm>
#include <map>

namespace operadkit {

GSigmaSet empty_level(const GroupPtr& g, int n) {
    GSigmaSet lv{g, n, 0, {}, {}};
    lv.act_g.resize(g->order());
    int nf = 1;
    for (int k = 2; k <= n; ++k) nf *= k;
    lv.act_sigma.resize(nf);
    return lv;
}

GSigmaSet coset_level(const GroupPtr& g, const GraphSubgroup& gamma) {
    const int n = gamma.degree;
    auto perms = all_perms(n);
    const int np = static_cast<int>(perms.size());
    const int total = g->order() * np;
    auto pair_id = [&](int x, int pidx) { return x * np + pidx; };
    // union pairs into right cosets (x, s)Gamma
    std::vector<int> coset(total, -1);
    std::vector<std::pair<int, int>> reps;  // minimal (x, pidx) per coset
    for (int x = 0; x < g->order(); ++x)
        for (int p = 0; p < np; ++p) {
            if (coset[pair_id(x, p)] >= 0) continue;
            int id = static_cast<int>(reps.size());
            reps.push_back({x, p});
            for (int k = 0; k < gamma.sub.order(); ++k) {
                int h = gamma.sub.elements[k];
                int xi = g->op(x, h);
                int pi = perm_index(compose(perms[p], gamma.sigma[k]));
                coset[pair_id(xi, pi)] = id;
            }
        }
    GSigmaSet lv{g, n, static_cast<int>(reps.size()), {}, {}};
    lv.act_g.assign(g->order(), std::vector<int>(lv.size));
    lv.act_sigma.assign(np, std::vector<int>(lv.size));
    for (int e = 0; e < lv.size; ++e) {
        auto [x, p] = reps[e];
        for (int a = 0; a < g->order(); ++a)
            lv.act_g[a][e] = coset[pair_id(g->op(a, x), p)];
        for (int t = 0; t < np; ++t)
            lv.act_sigma[t][e] = coset[pair_id(x, perm_index(compose(perms[t], perms[p])))];
    }
    return lv;
}

GSigmaSet level_sum(const GSigmaSet& a, const GSigmaSet& b) {
    if (a.n != b.n) throw Error("Internal", "level arity mismatch");
    GSigmaSet lv{a.group, a.n, a.size + b.size, a.act_g, a.act_sigma};
    for (size_t r = 0; r < lv.act_g.size(); ++r)
        for (int e = 0; e < b.size; ++e) lv.act_g[r].push_back(a.size + b.act_g[r][e]);
    for (size_t r = 0; r < lv.act_sigma.size(); ++r)
        for (int e = 0; e < b.size; ++e) lv.act_sigma[r].push_back(a.size + b.act_sigma[r][e]);
    return lv;
}

GSigmaSet mapping_level(const GroupPtr& g, int n) {
    auto perms = all_perms(n);
    const int np = static_cast<int>(perms.size());
    const int go = g->order();
    long long total = 1;
    for (int i = 0; i < go; ++i) {
        total *= np;
        if (total > 2000000) throw Error("TooLarge", "mapping level too large");
    }
    const int size = static_cast<int>(total);
    // element e encodes f: G -> Sigma_n by base-np digits, digit x = f(x)
    auto digit = [&](int e, int x) {
        for (int i = 0; i < x; ++i) e /= np;
        return e % np;
    };
    GSigmaSet lv{g, n, size, {}, {}};
    lv.act_g.assign(go, std::vector<int>(size));
    lv.act_sigma.assign(np, std::vector<int>(size));
    for (int e = 0; e < size; ++e) {
        for (int a = 0; a < go; ++a) {
            int out = 0, mult = 1;
            for (int x = 0; x < go; ++x) {
                out += digit(e, g->op(x, a)) * mult;  // (a.f)(x) = f(xa)
                mult *= np;
            }
            lv.act_g[a][e] = out;
        }
        for (int t = 0; t < np; ++t) {
            int out = 0, mult = 1;
            for (int x = 0; x < go; ++x) {
                out += perm_index(compose(perms[t], perms[digit(e, x)])) * mult;
                mult *= np;
            }
            lv.act_sigma[t][e] = out;
        }
    }
    return lv;
}

std::vector<int> level_fixed_points(const GSigmaSet& level,
                                    const std::vector<std::pair<int, Perm>>& pairs) {
    std::vector<int> out;
    for (int e = 0; e < level.size; ++e) {
        bool fixed = true;
        for (const auto& [g, s] : pairs)
            if (level.act(g, s, e) != e) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(e);
    }
    return out;
}

bool level_has_fixed_point(const GSigmaSet& level, const GraphSubgroup& gamma) {
    std::vector<std::pair<int, Perm>> pairs;
    for (int k = 0; k < gamma.sub.order(); ++k)
        pairs.push_back({gamma.sub.elements[k], gamma.sigma[k]});
    return !level_fixed_points(level, pairs).empty();
}

const GSigmaSet* SymSeq::level(int n) const {
    auto it = levels.find(n);
    return it == levels.end() ? nullptr : &it->second;
}

bool symseq_admits(const SymSeq& s, const Exponent& t) {
    const GSigmaSet* lv = s.level(t.size);
    if (t.size == 0) return lv && level_has_fixed_point(*lv, graph_subgroup(t));
    if (!lv || lv->size == 0) return false;
    for (const auto& p : all_perms(t.size))
        if (level_has_fixed_point(*lv, graph_subgroup(reorder_exponent(t, p)))) return true;
    return false;
}

IndexingSystem generated_admissibles(const LatticePtr& lat, const SymSeq& s, int max_size) {
    std::vector<Exponent> admissible;
    for (const auto& h : lat->subs)
        for (int n = 1; n <= max_size; ++n)
            for (const auto& t : enumerate_hsets_up_to_iso(h, n))
                if (symseq_admits(s, t)) admissible.push_back(t);
    return generate_indexing(lat, admissible);
}

}  // namespace operadkit
