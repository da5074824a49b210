#include "operadkit/zoo.hpp"

#include <algorithm>
#include <map>

namespace operadkit {

namespace {

void planar_leaves(const TreePtr& t, std::vector<int>& out) {
    if (t->leaf) {
        out.push_back(t->number);
        return;
    }
    for (const auto& c : t->children) planar_leaves(c, out);
}

// The permutation sending planar position i to leaf number - 1.
Perm planar_perm(const TreePtr& t) {
    std::vector<int> ls;
    planar_leaves(t, ls);
    Perm p;
    for (int q : ls) p.img.push_back(q - 1);
    return p;
}

// Pointwise value of the planar tree underlying t (leaf numbering ignored).
GPerm pg_plain(const SNAlphabet& a, const std::vector<GPerm>& vals, const TreePtr& t) {
    const int go = a.group->order();
    if (t->leaf) return GPerm(go, perm_index(Perm::identity(1)));
    std::vector<GPerm> cv;
    for (const auto& c : t->children) cv.push_back(pg_plain(a, vals, c));
    GPerm base;
    switch (t->label.kind) {
        case LabelKind::E:
            base.assign(go, perm_index(Perm::identity(0)));
            break;
        case LabelKind::Ox:
            base.assign(go, perm_index(Perm::identity(2)));
            break;
        case LabelKind::Norm: {
            int gc = a.norms[t->label.norm].coset_reps[t->label.coset];
            const GPerm& f = vals[t->label.norm];
            base.resize(go);
            for (int x = 0; x < go; ++x) base[x] = f[a.group->op(x, gc)];
        }
    }
    std::vector<std::vector<Perm>> tables;  // per-child lexicographic perm lists
    for (const auto& c : t->children) tables.push_back(all_perms(tree_arity(c)));
    auto bperms = all_perms(a.arity(t->label));
    GPerm out(go);
    for (int x = 0; x < go; ++x) {
        std::vector<Perm> ts;
        for (size_t i = 0; i < cv.size(); ++i) ts.push_back(tables[i][cv[i][x]]);
        out[x] = perm_index(be_gamma(bperms[base[x]], ts));
    }
    return out;
}

std::vector<std::pair<int, Perm>> lambda_pairs(const GroupPtr& g, int n, const Subgroup& lambda) {
    auto perms = all_perms(n);
    const int np = static_cast<int>(perms.size());
    std::vector<std::pair<int, Perm>> out;
    for (int e : lambda.elements) out.push_back({e / np, perms[e % np]});
    return out;
}

bool gperm_graph_fixed(const GroupPtr& g, const GPerm& f, const GraphSubgroup& gamma) {
    auto perms = all_perms(gamma.degree);
    for (int k = 0; k < gamma.sub.order(); ++k) {
        int h = gamma.sub.elements[k];
        for (int x = 0; x < g->order(); ++x)
            if (perm_index(compose(gamma.sigma[k], perms[f[g->op(x, h)]])) != f[x]) return false;
    }
    return true;
}

// Replace leaf numbered q with slots[q - 1], keeping the slots' own numbers.
TreePtr subst_leaves(const TreePtr& t, const std::vector<TreePtr>& slots) {
    if (t->leaf) return slots[t->number - 1];
    std::vector<TreePtr> ch;
    for (const auto& c : t->children) ch.push_back(subst_leaves(c, slots));
    return make_vertex(t->label, std::move(ch));
}

void collect_norms_used(const TreePtr& t, std::vector<char>& used) {
    if (t->leaf) return;
    if (t->label.kind == LabelKind::Norm) used[t->label.norm] = 1;
    for (const auto& c : t->children) collect_norms_used(c, used);
}

std::vector<Exponent> nontrivial_orbits(const GroupPtr& g, int max_size) {
    std::vector<Exponent> out;
    auto subs = enumerate_subgroups(g);
    for (const auto& h : subs)
        for (const auto& k : subs) {
            if (!(subgroup_leq(k, h)) || k.order() == h.order()) continue;
            if (h.order() / k.order() > max_size) continue;
            out.push_back(coset_exponent(h, k));
        }
    return out;
}

std::vector<Exponent> alphabet_exponents(const SNAlphabet& a) {
    std::vector<Exponent> out;
    for (const auto& n : a.norms) out.push_back(n.t);
    return out;
}

}  // namespace

GSigmaSet build_PG_level(const GroupPtr& g, int n) { return mapping_level(g, n); }

Perm be_gamma(const Perm& s, const std::vector<Perm>& ts) {
    const int k = s.degree();
    std::vector<int> inoff(k + 1, 0);
    for (int i = 0; i < k; ++i) inoff[i + 1] = inoff[i] + ts[i].degree();
    Perm out;
    out.img.assign(inoff[k], 0);
    int pos = 0;
    for (int j = 0; j < k; ++j) {
        int q = s(j);
        for (int p = 0; p < ts[q].degree(); ++p) out.img[pos++] = inoff[q] + ts[q](p);
    }
    return out;
}

int gperm_index(const GroupPtr& g, int n, const GPerm& f) {
    const int np = static_cast<int>(all_perms(n).size());
    int out = 0, mult = 1;
    for (int x = 0; x < g->order(); ++x) {
        out += f[x] * mult;
        mult *= np;
    }
    return out;
}

bool fixed_profile(const GSigmaSet& level, const Subgroup& lambda) {
    return !level_fixed_points(level, lambda_pairs(level.group, level.n, lambda)).empty();
}

GPerm fixed_function(const GroupPtr& g, const Exponent& t) {
    auto gamma = graph_subgroup(t);
    auto reps = left_coset_reps(t.sub);
    GPerm f(g->order());
    for (int x = 0; x < g->order(); ++x) {
        auto [i, h] = coset_decompose(t.sub, reps, x);
        f[x] = perm_index(gamma.sigma_of(h).inverse());
    }
    return f;
}

GPerm pg_interpret(const SNAlphabet& a, const std::vector<GPerm>& norm_values, const TreePtr& t) {
    Perm w = planar_perm(t);
    GPerm body = pg_plain(a, norm_values, t);
    auto perms = all_perms(tree_arity(t));
    GPerm out(body.size());
    for (size_t x = 0; x < body.size(); ++x)
        out[x] = perm_index(compose(w, perms[body[x]]));
    return out;
}

Perm p_interpret(const TreePtr& t) { return planar_perm(t); }

TreePtr fixed_witness_tree(const SNAlphabet& a, const Exponent& t, int max_depth) {
    auto gamma = graph_subgroup(t);
    auto fixed = [&](const TreePtr& x) { return tree_fixed_by(a, x, gamma); };
    if (t.size == 0) {
        auto cand = corolla(a, Label{LabelKind::E, -1, -1});
        if (fixed(cand)) return cand;
    }
    // targeted: one norm corolla (or leaf) per orbit, grafted under a comb
    auto orbits = orbit_decompose(t);
    const int k = static_cast<int>(orbits.size());
    if (t.size > 0) {
        std::vector<std::vector<TreePtr>> options(k);
        for (int i = 0; i < k; ++i) {
            const int m = static_cast<int>(orbits[i].points.size());
            if (m == 1) {
                options[i].push_back(make_leaf(1));
                continue;
            }
            for (size_t j = 0; j < a.norms.size(); ++j) {
                if (a.norms[j].t.size != m) continue;
                auto cor = corolla(a, Label{LabelKind::Norm, static_cast<int>(j), 0});
                for (const auto& q : all_perms(m)) options[i].push_back(sigma_act(q, cor));
            }
        }
        long long combos = 1;
        bool feasible = true;
        for (int i = 0; i < k; ++i) {
            if (options[i].empty()) feasible = false;
            combos *= std::max<size_t>(options[i].size(), 1);
            if (combos > 4000) feasible = false;
        }
        if (feasible) {
            Perm renum;
            for (const auto& o : orbits)
                for (int p : o.points) renum.img.push_back(p);
            auto comb = standard_tensor_tree(a, k);
            std::vector<int> pick(k, 0);
            while (true) {
                std::vector<TreePtr> blocks;
                for (int i = 0; i < k; ++i) blocks.push_back(options[i][pick[i]]);
                auto cand = sigma_act(renum, gamma_compose(comb, blocks));
                if (fixed(cand)) return cand;
                int i = k - 1;
                while (i >= 0 && ++pick[i] == static_cast<int>(options[i].size())) pick[i--] = 0;
                if (i < 0) break;
            }
        }
    }
    for (int d = max_depth; d <= max_depth + 1; ++d)
        for (const auto& cand : enumerate_trees(a, t.size, d))
            if (fixed(cand)) return cand;
    throw Error("NoFixedWitness", "no graph-fixed tree within the raised depth bound");
}

Report comparison_maps(const GroupPtr& g, int max_level, int max_depth) {
    Report r;
    auto exps = nontrivial_orbits(g, max_level);
    auto a = build_sn_alphabet(g, exps);
    std::vector<GPerm> vals;
    for (const auto& n : a.norms) vals.push_back(fixed_function(g, n.t));
    {
        bool ok = true;
        for (size_t i = 0; i < a.norms.size(); ++i)
            ok = ok && gperm_graph_fixed(g, vals[i], a.norms[i].gamma);
        r.add("generator-images-fixed", ok);
    }
    {
        bool ok = pg_interpret(a, vals, make_leaf(1)) ==
                  GPerm(g->order(), perm_index(Perm::identity(1)));
        r.add("map-unit", ok);
    }
    {
        bool ok = true;
        auto inner = enumerate_trees(a, 1, 1);
        for (const auto& x : enumerate_trees(a, 2, 1)) inner.push_back(x);
        for (const auto& y : enumerate_trees(a, 2, 1))
            for (const auto& x1 : inner)
                for (const auto& x2 : inner) {
                    auto t = gamma_compose(y, {x1, x2});
                    auto fy = pg_interpret(a, vals, y);
                    auto f1 = pg_interpret(a, vals, x1);
                    auto f2 = pg_interpret(a, vals, x2);
                    auto t1 = all_perms(tree_arity(x1));
                    auto t2 = all_perms(tree_arity(x2));
                    auto ty = all_perms(2);
                    GPerm expect(g->order());
                    for (int v = 0; v < g->order(); ++v)
                        expect[v] =
                            perm_index(be_gamma(ty[fy[v]], {t1[f1[v]], t2[f2[v]]}));
                    if (pg_interpret(a, vals, t) != expect) ok = false;
                }
        r.add("map-composition", ok);
    }
    {
        bool ok = true;
        auto lv = build_PG_level(g, 2);
        for (const auto& t : enumerate_trees(a, 2, std::min(max_depth, 2))) {
            int e = gperm_index(g, 2, pg_interpret(a, vals, t));
            for (int x = 0; x < g->order() && ok; ++x)
                for (const auto& s : all_perms(2)) {
                    int lhs = gperm_index(g, 2, pg_interpret(a, vals, act(a, x, s, t)));
                    if (lhs != lv.act(x, s, e)) ok = false;
                }
            if (!ok) break;
        }
        r.add("map-equivariance", ok);
    }
    {
        // the square through the diagonal on norm-free trees
        bool ok = true;
        for (int n = 0; n <= std::min(max_level, 3); ++n)
            for (const auto& t : enumerate_trees(build_sn_alphabet(g, {}), n, 2)) {
                GPerm diag(g->order(), perm_index(p_interpret(t)));
                if (pg_interpret(a, vals, t) != diag) ok = false;
            }
        r.add("diagonal-square", ok);
    }
    auto sn_of = [](int n) { return symmetric_group(std::max(n, 1)); };
    for (int n = 0; n <= max_level; ++n) {
        auto lv = build_PG_level(g, n);
        auto prod = product_group(g, sn_of(n));
        const int np = static_cast<int>(all_perms(n).size());
        bool ok = true;
        std::string why;
        for (const auto& lambda : enumerate_subgroups(prod)) {
            bool pside = fixed_profile(lv, lambda);
            // pure nontrivial permutations force emptiness on the tree side
            bool sigma_free = true;
            for (int e : lambda.elements)
                if (e / np == 0 && e % np != 0) sigma_free = false;
            bool smside = false;
            if (sigma_free) {
                std::vector<int> hel;
                std::vector<int> alpha(g->order(), -1);
                for (int e : lambda.elements) {
                    hel.push_back(e / np);
                    alpha[e / np] = e % np;
                }
                auto h = subgroup_from_elements(g, hel);
                auto perms = all_perms(n);
                std::vector<std::vector<int>> action;
                for (int x : h.elements) action.push_back(perms[alpha[x]].img);
                auto t = exponent_from_action(h, n, std::move(action));
                try {
                    fixed_witness_tree(a, t, max_depth);
                    smside = true;
                } catch (const Error& err) {
                    if (err.code != "NoFixedWitness") throw;
                }
            }
            if (pside != smside) {
                ok = false;
                why = "level " + std::to_string(n);
                break;
            }
        }
        r.add("profile-agreement-level-" + std::to_string(n), ok, why);
    }
    {
        const int n = std::min(max_level, 2);
        auto lv = build_PG_level(g, n);
        auto prod = product_group(g, sn_of(n));
        bool ok = true;
        for (const auto& lambda : enumerate_subgroups(prod))
            for (int c = 0; c < prod->order() && ok; ++c)
                ok = fixed_profile(lv, conjugate_subgroup(lambda, c)) ==
                     fixed_profile(lv, lambda);
        r.add("profile-conjugation-invariant", ok);
    }
    return r;
}

SymSeq generating_sequence(const GroupPtr& g, const std::vector<Exponent>& gens, int max_level) {
    SymSeq s{g, {}};
    auto put = [&](const GSigmaSet& lv) {
        auto it = s.levels.find(lv.n);
        if (it == s.levels.end())
            s.levels.emplace(lv.n, lv);
        else
            it->second = level_sum(it->second, lv);
    };
    put(coset_level(g, graph_subgroup(trivial_exponent(full_subgroup(g), 0))));
    if (max_level >= 2) put(coset_level(g, graph_subgroup(trivial_exponent(full_subgroup(g), 2))));
    for (const auto& t : gens)
        if (t.size <= max_level) put(coset_level(g, graph_subgroup(t)));
    return s;
}

SymSeq operad_levels(const SNAlphabet& a, int max_level, int max_depth) {
    SymSeq s{a.group, {}};
    for (int n = 0; n <= max_level; ++n) {
        auto trees = enumerate_trees(a, n, max_depth);
        std::map<std::string, int> index;
        for (size_t i = 0; i < trees.size(); ++i) index[canonical_form(trees[i])] = i;
        auto at = [&](const TreePtr& t) {
            auto it = index.find(canonical_form(t));
            if (it == index.end()) throw Error("Internal", "tree action left the truncation");
            return it->second;
        };
        GSigmaSet lv{a.group, n, static_cast<int>(trees.size()), {}, {}};
        lv.act_g.assign(a.group->order(), std::vector<int>(lv.size));
        lv.act_sigma.assign(all_perms(n).size(), std::vector<int>(lv.size));
        for (int e = 0; e < lv.size; ++e) {
            for (int x = 0; x < a.group->order(); ++x) lv.act_g[x][e] = at(g_act(a, x, trees[e]));
            auto perms = all_perms(n);
            for (size_t p = 0; p < perms.size(); ++p)
                lv.act_sigma[p][e] = at(sigma_act(perms[p], trees[e]));
        }
        s.levels.emplace(n, std::move(lv));
    }
    return s;
}

GSigmaSet level_product(const GSigmaSet& a, const GSigmaSet& b) {
    if (a.n != b.n) throw Error("Internal", "level arity mismatch");
    GSigmaSet lv{a.group, a.n, a.size * b.size, {}, {}};
    lv.act_g.assign(a.act_g.size(), std::vector<int>(lv.size));
    lv.act_sigma.assign(a.act_sigma.size(), std::vector<int>(lv.size));
    for (int i = 0; i < a.size; ++i)
        for (int j = 0; j < b.size; ++j) {
            for (size_t x = 0; x < lv.act_g.size(); ++x)
                lv.act_g[x][i * b.size + j] = a.act_g[x][i] * b.size + b.act_g[x][j];
            for (size_t p = 0; p < lv.act_sigma.size(); ++p)
                lv.act_sigma[p][i * b.size + j] = a.act_sigma[p][i] * b.size + b.act_sigma[p][j];
        }
    return lv;
}

IndexingSystem product_admissibles(const LatticePtr& lat, const SymSeq& s1, const SymSeq& s2,
                                   int size_bound) {
    SymSeq p{s1.group, {}};
    for (int n = 0; n <= size_bound; ++n) {
        const GSigmaSet* l1 = s1.level(n);
        const GSigmaSet* l2 = s2.level(n);
        if (l1 && l2) p.levels.emplace(n, level_product(*l1, *l2));
    }
    return generated_admissibles(lat, p, size_bound);
}

IndexingSystem coproduct_admissibles(const LatticePtr& lat, const GroupPtr& g,
                                     std::vector<Exponent> gens1, std::vector<Exponent> gens2,
                                     int size_bound) {
    for (auto& t : gens2) gens1.push_back(std::move(t));
    return generated_admissibles(lat, generating_sequence(g, gens1, size_bound), size_bound);
}

Report lattice_check(const GroupPtr& g, const std::vector<Exponent>& n1,
                     const std::vector<Exponent>& n2, int size_bound, int max_depth) {
    Report r;
    auto lat = build_subgroup_lattice(g);
    auto a1 = generate_indexing(lat, n1);
    auto a2 = generate_indexing(lat, n2);
    auto s1 = operad_levels(build_sn_alphabet(g, n1), size_bound, max_depth);
    auto s2 = operad_levels(build_sn_alphabet(g, n2), size_bound, max_depth);
    r.add("truncation-recovers-admissibles",
          generated_admissibles(lat, s1, size_bound) == a1 &&
              generated_admissibles(lat, s2, size_bound) == a2);
    r.add("product-is-meet",
          product_admissibles(lat, s1, s2, size_bound) == indexing_meet(a1, a2));
    r.add("coproduct-is-join",
          coproduct_admissibles(lat, g, n1, n2, size_bound) == indexing_join(a1, a2));
    return r;
}

Report suboperad_poset_check(const GroupPtr& g, int max_arity, int max_depth, int size_bound) {
    Report r;
    auto lat = build_subgroup_lattice(g);
    auto il = enumerate_indexing_systems(lat);
    // one global choice of generators for the maximum system
    auto exps = nontrivial_orbits(g, size_bound);
    std::vector<std::pair<int, int>> orbit_pair;  // (H, K) lattice indices per generator
    for (const auto& t : exps) {
        int h = lat->index_of(t.sub);
        int k = lat->index_of(orbit_decompose(t)[0].stabilizer);
        orbit_pair.push_back({h, k});
    }
    auto a = build_sn_alphabet(g, exps);
    std::vector<std::pair<TreePtr, std::vector<char>>> trees;
    for (int n = 0; n <= max_arity; ++n)
        for (const auto& t : enumerate_trees(a, n, max_depth)) {
            std::vector<char> used(exps.size(), 0);
            collect_norms_used(t, used);
            trees.push_back({t, used});
        }
    std::vector<std::vector<char>> allowed;
    for (const auto& f : il.systems) {
        std::vector<char> row(exps.size(), 0);
        for (size_t i = 0; i < exps.size(); ++i)
            row[i] = f.admits(orbit_pair[i].first, orbit_pair[i].second);
        allowed.push_back(std::move(row));
    }
    auto tree_in = [&](size_t fi, const std::vector<char>& used) {
        for (size_t i = 0; i < used.size(); ++i)
            if (used[i] && !allowed[fi][i]) return false;
        return true;
    };
    {
        bool ok = true;
        for (size_t i = 0; i < il.systems.size() && ok; ++i)
            for (size_t j = 0; j < il.systems.size() && ok; ++j) {
                bool sub = true;
                for (const auto& [t, used] : trees)
                    if (tree_in(i, used) && !tree_in(j, used)) sub = false;
                ok = sub == indexing_leq(il.systems[i], il.systems[j]);
            }
        r.add("suboperad-iff-leq", ok);
    }
    {
        bool ok = true;
        for (const auto& f : il.systems) {
            std::vector<Exponent> gens;
            for (size_t i = 0; i < exps.size(); ++i)
                if (f.admits(orbit_pair[i].first, orbit_pair[i].second)) gens.push_back(exps[i]);
            ok = ok && generated_admissibles(
                           lat, generating_sequence(g, gens, size_bound), size_bound) == f;
        }
        r.add("admissibles-recover-system", ok);
    }
    return r;
}

NormChange change_of_norms_data(const GroupPtr& g, const std::vector<Exponent>& n,
                                const std::vector<Exponent>& m, int max_depth) {
    auto lat = build_subgroup_lattice(g);
    auto both = n;
    for (const auto& t : m) both.push_back(t);
    if (!(generate_indexing(lat, n) == generate_indexing(lat, both)))
        throw Error("NotSameIndexing", "the extra generators change the indexing system");
    NormChange ch;
    ch.small = build_sn_alphabet(g, n);
    ch.big = build_sn_alphabet(g, both);
    ch.n_count = static_cast<int>(n.size());
    for (const auto& t : m) ch.witnesses.push_back(fixed_witness_tree(ch.small, t, max_depth));
    return ch;
}

TreePtr restrict_tree(const NormChange& ch, const TreePtr& t) {
    if (t->leaf) return t;
    std::vector<TreePtr> ch2;
    for (const auto& c : t->children) ch2.push_back(restrict_tree(ch, c));
    if (t->label.kind != LabelKind::Norm || t->label.norm < ch.n_count)
        return make_vertex(t->label, std::move(ch2));
    int gc = ch.big.norms[t->label.norm].coset_reps[t->label.coset];
    auto target = g_act(ch.small, gc, ch.witnesses[t->label.norm - ch.n_count]);
    return subst_leaves(target, ch2);
}

NormedSMCData extend_norms(const NormChange& ch, const NormedSMCData& d) {
    if (d.alphabet.norms.size() != ch.small.norms.size())
        throw Error("BadAlgebra", "instance does not match the small alphabet");
    for (size_t i = 0; i < ch.small.norms.size(); ++i)
        if (!(d.alphabet.norms[i].t == ch.small.norms[i].t))
            throw Error("BadAlgebra", "instance does not match the small alphabet");
    NormedSMCData out = d;
    out.alphabet = ch.big;
    for (const auto& w : ch.witnesses) {
        out.norms.push_back(interpret_tree(d, w));
        out.upsilon.push_back(
            interpret_path(d, canonical_path(ch.small, w, standard_tensor_tree(ch.small, tree_arity(w)))));
    }
    return out;
}

NormedSMCData restrict_norms(const NormChange& ch, const NormedSMCData& d) {
    if (d.alphabet.norms.size() != ch.big.norms.size())
        throw Error("BadAlgebra", "instance does not match the big alphabet");
    NormedSMCData out = d;
    out.alphabet = ch.small;
    out.norms.resize(ch.n_count);
    out.upsilon.resize(ch.n_count);
    return out;
}

Report er_equivalence(const NormChange& ch, const NormedSMCData& d, int max_arity,
                      int max_depth) {
    Report r;
    auto de = extend_norms(ch, restrict_norms(ch, d));
    r.add("er-validates", validate_nsmc(de).ok());
    const auto& cat = d.c.cat;
    const int m = cat.num_objects;
    std::vector<TreePtr> samples;
    for (int n = 0; n <= max_arity; ++n)
        for (const auto& t : enumerate_trees(ch.big, n, max_depth)) samples.push_back(t);
    // the appended norm corollas may exceed the arity bound; keep them covered
    for (size_t j = 0; j < ch.big.norms.size(); ++j)
        if (ch.big.norms[j].t.size > max_arity)
            for (size_t c = 0; c < ch.big.norms[j].coset_reps.size(); ++c)
                samples.push_back(
                    corolla(ch.big, Label{LabelKind::Norm, static_cast<int>(j), static_cast<int>(c)}));
    auto theta = [&](const TreePtr& x) {
        return interpret_path(d, canonical_path(ch.big, restrict_tree(ch, x), x));
    };
    {
        bool ok = true;
        for (const auto& x : samples) {
            auto f1 = interpret_tree(de, x);
            auto f2 = interpret_tree(d, restrict_tree(ch, x));
            if (f1.obj != f2.obj || f1.mor != f2.mor) ok = false;
        }
        r.add("er-matches-retraction", ok);
    }
    {
        bool ok = true;
        for (const auto& x : samples)
            for (int c : theta(x).comp)
                if (cat.inverse(c) < 0) ok = false;
        r.add("theta-invertible", ok);
    }
    {
        bool ok = true;
        for (const auto& x : samples) {
            auto tx = theta(x);
            const int n = tree_arity(x);
            for (const auto& e : basic_edges_from(ch.big, x, max_depth)) {
                auto ty = theta(e.tgt);
                auto top = interpret_edge(d, e);
                auto bot = interpret_path(
                    d, canonical_path(ch.big, restrict_tree(ch, x), restrict_tree(ch, e.tgt)));
                for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi)
                    ok = cat.compose(top.comp[oi], tx.comp[oi]) ==
                         cat.compose(ty.comp[oi], bot.comp[oi]);
                if (!ok) break;
            }
            if (!ok) break;
        }
        r.add("theta-natural", ok);
    }
    {
        bool ok = true;
        const auto& g = ch.big.group;
        for (const auto& x : samples) {
            const int n = tree_arity(x);
            if (n > 2) continue;
            auto tx = theta(x);
            for (int v = 0; v < g->order() && ok; ++v)
                for (const auto& s : all_perms(n)) {
                    auto tgs = theta(act(ch.big, v, s, x));
                    for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
                        auto obs = tuple_at(oi, m, n);
                        std::vector<int> y(n);
                        for (int j = 0; j < n; ++j) y[j] = d.c.g_obj(g->inv(v), obs[s(j)]);
                        ok = tgs.comp[oi] == d.c.g_mor(v, tx.comp[tuple_index(y, m)]);
                    }
                }
            if (!ok) break;
        }
        r.add("theta-equivariant", ok);
    }
    {
        // the comparison data assembles to an invertible lax functor ER(d) -> d
        LaxFunctor f;
        f.src = &de;
        f.tgt = &d;
        for (int o = 0; o < m; ++o) f.obj.push_back(o);
        for (int mo = 0; mo < cat.num_morphisms(); ++mo) f.mor.push_back(mo);
        f.fe = cat.idm[d.unit];
        f.fox.n = 2;
        for (int v : d.tensor.obj) f.fox.comp.push_back(cat.idm[v]);
        for (int i = 0; i < ch.n_count; ++i) {
            NTrans t;
            t.n = d.norms[i].n;
            for (int v : d.norms[i].obj) t.comp.push_back(cat.idm[v]);
            f.fnorm.push_back(std::move(t));
        }
        for (size_t j = 0; j < ch.witnesses.size(); ++j) {
            auto cor = corolla(ch.big, Label{LabelKind::Norm, ch.n_count + static_cast<int>(j), 0});
            f.fnorm.push_back(
                interpret_path(d, canonical_path(ch.big, cor, restrict_tree(ch, cor))));
        }
        auto v = validate_lax_functor(f);
        r.add("comparison-strong-functor", v.ok() && lax_is_strong(f),
              v.ok() ? "" : "lax-functor axioms failed");
    }
    return r;
}

Report change_of_norms(const NormedSMCData& d, const std::vector<Exponent>& m, int max_arity,
                       int max_depth) {
    auto ch = change_of_norms_data(d.alphabet.group, alphabet_exponents(d.alphabet), m, max_depth);
    Report r;
    {
        bool ok = true;
        for (size_t j = 0; j < m.size(); ++j)
            ok = ok && tree_fixed_by(ch.small, ch.witnesses[j], graph_subgroup(m[j]));
        r.add("witness-fixed", ok);
    }
    {
        bool ok = true;
        for (int n = 0; n <= max_arity; ++n)
            for (const auto& t : enumerate_trees(ch.small, n, max_depth))
                if (!tree_equal(restrict_tree(ch, t), t)) ok = false;
        r.add("retraction-identity", ok);
    }
    {
        bool ok = true;
        auto inner = enumerate_trees(ch.big, 1, 1);
        for (const auto& y : enumerate_trees(ch.big, 2, 1))
            for (const auto& x1 : inner)
                for (const auto& x2 : inner) {
                    auto lhs = restrict_tree(ch, gamma_compose(y, {x1, x2}));
                    auto rhs = gamma_compose(restrict_tree(ch, y),
                                             {restrict_tree(ch, x1), restrict_tree(ch, x2)});
                    if (!tree_equal(lhs, rhs)) ok = false;
                }
        r.add("restriction-composition", ok);
    }
    {
        bool ok = true;
        const auto& g = ch.big.group;
        for (const auto& t : enumerate_trees(ch.big, 2, std::min(max_depth, 2)))
            for (int v = 0; v < g->order() && ok; ++v)
                for (const auto& s : all_perms(2))
                    if (!tree_equal(restrict_tree(ch, act(ch.big, v, s, t)),
                                    act(ch.small, v, s, restrict_tree(ch, t))))
                        ok = false;
        r.add("restriction-equivariance", ok);
    }
    auto de = extend_norms(ch, d);
    r.add("extension-validates", validate_nsmc(de).ok());
    {
        auto back = restrict_norms(ch, de);
        bool ok = back.norms.size() == d.norms.size();
        for (size_t i = 0; i < d.norms.size() && ok; ++i)
            ok = back.norms[i].obj == d.norms[i].obj && back.norms[i].mor == d.norms[i].mor &&
                 back.upsilon[i].comp == d.upsilon[i].comp;
        r.add("re-identity", ok);
    }
    r.merge(er_equivalence(ch, de, max_arity, max_depth), "er-");
    return r;
}

}  // namespace operadkit
