#include "operadkit/interpret.hpp"

#include <algorithm>
#include <map>

namespace operadkit {

namespace {

// Shared object/morphism evaluation: `on_mors` picks the morphism tables.
int eval_tree(const NormedSMCData& d, const TreePtr& t, const std::vector<int>& in,
              bool on_mors) {
    if (t->leaf) return in[t->number - 1];
    std::vector<int> vals;
    vals.reserve(t->children.size());
    for (const auto& c : t->children) vals.push_back(eval_tree(d, c, in, on_mors));
    const int base = on_mors ? d.c.cat.num_morphisms() : d.c.cat.num_objects;
    const auto& act = on_mors ? d.c.act_mor : d.c.act_obj;
    switch (t->label.kind) {
        case LabelKind::E: return on_mors ? d.c.cat.idm[d.unit] : d.unit;
        case LabelKind::Ox: {
            const auto& tab = on_mors ? d.tensor.mor : d.tensor.obj;
            return tab[tuple_index(vals, base)];
        }
        case LabelKind::Norm: {
            const auto& ni = d.alphabet.norms[t->label.norm];
            const auto& tab = on_mors ? d.norms[t->label.norm].mor : d.norms[t->label.norm].obj;
            int g = ni.coset_reps[t->label.coset];
            int ginv = d.alphabet.group->inv(g);
            for (int& v : vals) v = act[ginv][v];
            return act[g][tab[tuple_index(vals, base)]];
        }
    }
    throw Error("Internal", "unreachable");
}

}  // namespace

int eval_tree_obj(const NormedSMCData& d, const TreePtr& t, const std::vector<int>& objs) {
    return eval_tree(d, t, objs, false);
}

int eval_tree_mor(const NormedSMCData& d, const TreePtr& t, const std::vector<int>& mors) {
    return eval_tree(d, t, mors, true);
}

NFunctor interpret_tree(const NormedSMCData& d, const TreePtr& t) {
    const int n = tree_arity(t);
    NFunctor f{n, {}, {}};
    const int m = d.c.cat.num_objects, k = d.c.cat.num_morphisms();
    f.obj.resize(pow_ll(m, n));
    for (long long i = 0; i < static_cast<long long>(f.obj.size()); ++i)
        f.obj[i] = eval_tree_obj(d, t, tuple_at(i, m, n));
    f.mor.resize(pow_ll(k, n));
    for (long long i = 0; i < static_cast<long long>(f.mor.size()); ++i)
        f.mor[i] = eval_tree_mor(d, t, tuple_at(i, k, n));
    return f;
}

int irr_component(const NormedSMCData& d, const Irreducible& irr, const std::vector<int>& objs) {
    const auto& cat = d.c.cat;
    auto invert = [&](int m) {
        int u = cat.inverse(m);
        if (u < 0) throw Error("NotInvertible", "coherence component is not invertible");
        return u;
    };
    const int m = cat.num_objects;
    switch (irr.kind) {
        case IrrKind::Id: return cat.idm[objs[0]];
        case IrrKind::Alpha: return d.alpha.comp[tuple_index(objs, m)];
        case IrrKind::AlphaInv: return invert(d.alpha.comp[tuple_index(objs, m)]);
        case IrrKind::Lambda: return d.lambda.comp[objs[0]];
        case IrrKind::LambdaInv: return invert(d.lambda.comp[objs[0]]);
        case IrrKind::Rho: return d.rho.comp[objs[0]];
        case IrrKind::RhoInv: return invert(d.rho.comp[objs[0]]);
        case IrrKind::Beta: return d.beta.comp[tuple_index(objs, m)];
        case IrrKind::Ups:
        case IrrKind::UpsInv: {
            const auto& ni = d.alphabet.norms[irr.norm_label.norm];
            int g = ni.coset_reps[irr.norm_label.coset];
            int ginv = d.alphabet.group->inv(g);
            std::vector<int> shifted = objs;
            for (int& v : shifted) v = d.c.g_obj(ginv, v);
            int comp = d.c.g_mor(g, d.upsilon[irr.norm_label.norm].comp[tuple_index(shifted, m)]);
            return irr.kind == IrrKind::Ups ? comp : invert(comp);
        }
    }
    throw Error("Internal", "unreachable");
}

NTrans interpret_edge(const NormedSMCData& d, const BasicEdge& e) {
    const auto& cat = d.c.cat;
    const int m = cat.num_objects;
    const int n = tree_arity(e.src);
    NTrans out{n, {}};
    out.comp.resize(pow_ll(m, n));
    const int k = static_cast<int>(e.surroundings.size());
    std::vector<int> uar(k);
    int inner_ar = 0;
    for (int j = 0; j < k; ++j) {
        uar[j] = tree_arity(e.surroundings[j]);
        inner_ar += uar[j];
    }
    const int sar = tree_arity(e.context);
    for (long long idx = 0; idx < static_cast<long long>(out.comp.size()); ++idx) {
        auto x = tuple_at(idx, m, n);
        std::vector<int> y(n);  // y = x composed with the outer permutation
        for (int j = 0; j < n; ++j) y[j] = x[e.outer(j)];
        // blocks: slot e.slot of the context takes inner_ar inputs, others one
        std::vector<int> smor(sar);
        int off = 0;
        for (int j = 1; j <= sar; ++j) {
            if (j == e.slot) {
                std::vector<int> a(k);
                int o = off;
                for (int l = 0; l < k; ++l) {
                    std::vector<int> block(y.begin() + o, y.begin() + o + uar[l]);
                    a[l] = eval_tree_obj(d, e.surroundings[l], block);
                    o += uar[l];
                }
                smor[j - 1] = irr_component(d, e.irr, a);
                off += inner_ar;
            } else {
                smor[j - 1] = cat.idm[y[off]];
                off += 1;
            }
        }
        int c = eval_tree_mor(d, e.context, smor);
        if (cat.dom[c] != eval_tree_obj(d, e.src, x) || cat.cod[c] != eval_tree_obj(d, e.tgt, x))
            throw Error("Internal", "edge interpretation endpoints disagree");
        out.comp[idx] = c;
    }
    return out;
}

NTrans interpret_path(const NormedSMCData& d, const CoherencePath& p) {
    const auto& cat = d.c.cat;
    const int m = cat.num_objects;
    const int n = tree_arity(p.src);
    NTrans out{n, {}};
    out.comp.resize(pow_ll(m, n));
    for (long long idx = 0; idx < static_cast<long long>(out.comp.size()); ++idx)
        out.comp[idx] = cat.idm[eval_tree_obj(d, p.src, tuple_at(idx, m, n))];
    for (const auto& e : p.edges) {
        auto step = interpret_edge(d, e);
        for (size_t i = 0; i < out.comp.size(); ++i)
            out.comp[i] = cat.compose(step.comp[i], out.comp[i]);
    }
    return out;
}

bool check_naturality(const NormedSMCData& d, const TreePtr& src, const TreePtr& tgt,
                      const NTrans& eta, std::string* why) {
    const auto& cat = d.c.cat;
    const int m = cat.num_objects, k = cat.num_morphisms();
    bool ok = true;
    long long mors = pow_ll(k, eta.n);
    for (long long mi = 0; mi < mors && ok; ++mi) {
        auto f = tuple_at(mi, k, eta.n);
        std::vector<int> dv(eta.n), cv(eta.n);
        for (int i = 0; i < eta.n; ++i) {
            dv[i] = cat.dom[f[i]];
            cv[i] = cat.cod[f[i]];
        }
        int lhs = cat.compose(eta.comp[tuple_index(cv, m)], eval_tree_mor(d, src, f));
        int rhs = cat.compose(eval_tree_mor(d, tgt, f), eta.comp[tuple_index(dv, m)]);
        if (lhs != rhs) {
            ok = false;
            if (why) *why = "naturality fails at morphism tuple " + std::to_string(mi);
        }
    }
    return ok;
}

Report validate_nsmc(const NormedSMCData& d) {
    Report r;
    const auto& cat = d.c.cat;
    const auto& g = d.c.group;
    const int m = cat.num_objects, k = cat.num_morphisms();

    {
        std::string why;
        r.add("tensor-functor", nfunctor_is_functor(cat, d.tensor, &why), why);
    }
    {
        bool ok = d.unit >= 0 && d.unit < m;
        for (int a = 0; a < g->order() && ok; ++a) ok = d.c.g_obj(a, d.unit) == d.unit;
        r.add("unit-g-fixed", ok);
    }
    auto ox2 = [&](int a, int b) { return d.tensor.obj[static_cast<long long>(a) * m + b]; };
    auto oxm = [&](int f, int h) { return d.tensor.mor[static_cast<long long>(f) * k + h]; };

    // endpoints + invertibility of the coherence components
    {
        bool ok = true;
        std::string why;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b)
                for (int c = 0; c < m && ok; ++c) {
                    int al = d.alpha.comp[tuple_index({a, b, c}, m)];
                    if (cat.dom[al] != ox2(ox2(a, b), c) || cat.cod[al] != ox2(a, ox2(b, c)) ||
                        cat.inverse(al) < 0) {
                        ok = false;
                        why = "alpha";
                    }
                }
        for (int a = 0; a < m && ok; ++a) {
            int l = d.lambda.comp[a], rr = d.rho.comp[a];
            if (cat.dom[l] != ox2(d.unit, a) || cat.cod[l] != a || cat.inverse(l) < 0) {
                ok = false;
                why = "lambda";
            } else if (cat.dom[rr] != ox2(a, d.unit) || cat.cod[rr] != a || cat.inverse(rr) < 0) {
                ok = false;
                why = "rho";
            }
        }
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b) {
                int bt = d.beta.comp[tuple_index({a, b}, m)];
                if (cat.dom[bt] != ox2(a, b) || cat.cod[bt] != ox2(b, a) || cat.inverse(bt) < 0) {
                    ok = false;
                    why = "beta";
                }
            }
        r.add("coherence-iso", ok, why);
    }

    // naturality
    {
        bool ok = true;
        for (int f1 = 0; f1 < k && ok; ++f1)
            for (int f2 = 0; f2 < k && ok; ++f2)
                for (int f3 = 0; f3 < k && ok; ++f3) {
                    int lhs = cat.compose(
                        d.alpha.comp[tuple_index({cat.cod[f1], cat.cod[f2], cat.cod[f3]}, m)],
                        oxm(oxm(f1, f2), f3));
                    int rhs = cat.compose(
                        oxm(f1, oxm(f2, f3)),
                        d.alpha.comp[tuple_index({cat.dom[f1], cat.dom[f2], cat.dom[f3]}, m)]);
                    ok = lhs == rhs;
                }
        r.add("alpha-natural", ok);
    }
    {
        bool ok = true;
        for (int f = 0; f < k && ok; ++f) {
            ok = cat.compose(d.lambda.comp[cat.cod[f]], oxm(cat.idm[d.unit], f)) ==
                     cat.compose(f, d.lambda.comp[cat.dom[f]]) &&
                 cat.compose(d.rho.comp[cat.cod[f]], oxm(f, cat.idm[d.unit])) ==
                     cat.compose(f, d.rho.comp[cat.dom[f]]);
        }
        r.add("unitors-natural", ok);
    }
    {
        bool ok = true;
        for (int f1 = 0; f1 < k && ok; ++f1)
            for (int f2 = 0; f2 < k && ok; ++f2)
                ok = cat.compose(d.beta.comp[tuple_index({cat.cod[f1], cat.cod[f2]}, m)],
                                 oxm(f1, f2)) ==
                     cat.compose(oxm(f2, f1),
                                 d.beta.comp[tuple_index({cat.dom[f1], cat.dom[f2]}, m)]);
        r.add("beta-natural", ok);
    }

    // diagrams
    {
        bool ok = true;
        std::string why;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b)
                for (int c = 0; c < m && ok; ++c)
                    for (int e = 0; e < m && ok; ++e) {
                        int lhs = cat.compose(d.alpha.comp[tuple_index({a, b, ox2(c, e)}, m)],
                                              d.alpha.comp[tuple_index({ox2(a, b), c, e}, m)]);
                        int rhs = cat.compose(
                            oxm(cat.idm[a], d.alpha.comp[tuple_index({b, c, e}, m)]),
                            cat.compose(d.alpha.comp[tuple_index({a, ox2(b, c), e}, m)],
                                        oxm(d.alpha.comp[tuple_index({a, b, c}, m)], cat.idm[e])));
                        ok = lhs == rhs;
                        if (!ok)
                            why = "objects (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + "," + std::to_string(e) + "): " +
                                  std::to_string(lhs) + " != " + std::to_string(rhs);
                    }
        r.add("pentagon", ok, why);
    }
    {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b)
                ok = cat.compose(oxm(cat.idm[a], d.lambda.comp[b]),
                                 d.alpha.comp[tuple_index({a, d.unit, b}, m)]) ==
                     oxm(d.rho.comp[a], cat.idm[b]);
        r.add("triangle", ok);
    }
    {
        bool ok = true;
        std::string why;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b)
                for (int c = 0; c < m && ok; ++c) {
                    int lhs = cat.compose(
                        d.alpha.comp[tuple_index({b, c, a}, m)],
                        cat.compose(d.beta.comp[tuple_index({a, ox2(b, c)}, m)],
                                    d.alpha.comp[tuple_index({a, b, c}, m)]));
                    int rhs = cat.compose(
                        oxm(cat.idm[b], d.beta.comp[tuple_index({a, c}, m)]),
                        cat.compose(d.alpha.comp[tuple_index({b, a, c}, m)],
                                    oxm(d.beta.comp[tuple_index({a, b}, m)], cat.idm[c])));
                    ok = lhs == rhs;
                    if (!ok)
                        why = "objects (" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + "): " + std::to_string(lhs) +
                              " != " + std::to_string(rhs);
                }
        r.add("hexagon", ok, why);
    }
    {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = 0; b < m && ok; ++b)
                ok = cat.compose(d.beta.comp[tuple_index({b, a}, m)],
                                 d.beta.comp[tuple_index({a, b}, m)]) == cat.idm[ox2(a, b)];
        r.add("symmetry", ok);
    }

    // equivariance of the structure
    {
        bool ok = true;
        for (int a = 0; a < g->order() && ok; ++a) {
            for (int x = 0; x < m && ok; ++x)
                for (int y = 0; y < m && ok; ++y)
                    ok = d.c.g_obj(a, ox2(x, y)) == ox2(d.c.g_obj(a, x), d.c.g_obj(a, y));
            for (int f1 = 0; f1 < k && ok; ++f1)
                for (int f2 = 0; f2 < k && ok; ++f2)
                    ok = d.c.g_mor(a, oxm(f1, f2)) == oxm(d.c.g_mor(a, f1), d.c.g_mor(a, f2));
        }
        r.add("tensor-equivariant", ok);
    }
    {
        bool ok = true;
        for (int a = 0; a < g->order() && ok; ++a) {
            for (int x = 0; x < m && ok; ++x)
                for (int y = 0; y < m && ok; ++y) {
                    for (int z = 0; z < m && ok; ++z)
                        ok = d.c.g_mor(a, d.alpha.comp[tuple_index({x, y, z}, m)]) ==
                             d.alpha.comp[tuple_index(
                                 {d.c.g_obj(a, x), d.c.g_obj(a, y), d.c.g_obj(a, z)}, m)];
                    if (ok)
                        ok = d.c.g_mor(a, d.beta.comp[tuple_index({x, y}, m)]) ==
                             d.beta.comp[tuple_index({d.c.g_obj(a, x), d.c.g_obj(a, y)}, m)];
                }
            for (int x = 0; x < m && ok; ++x)
                ok = d.c.g_mor(a, d.lambda.comp[x]) == d.lambda.comp[d.c.g_obj(a, x)] &&
                     d.c.g_mor(a, d.rho.comp[x]) == d.rho.comp[d.c.g_obj(a, x)];
        }
        r.add("coherence-equivariant", ok);
    }

    // norms
    for (size_t i = 0; i < d.alphabet.norms.size(); ++i) {
        const auto& ni = d.alphabet.norms[i];
        const int n = ni.t.size;
        const std::string tag = "norm" + std::to_string(i);
        {
            std::string why;
            r.add(tag + "-functor", nfunctor_is_functor(cat, d.norms[i], &why), why);
        }
        {
            bool ok = true;
            for (int hi = 0; hi < ni.gamma.sub.order() && ok; ++hi) {
                int h = ni.gamma.sub.elements[hi];
                int hinv = g->inv(h);
                const Perm& s = ni.gamma.sigma[hi];
                for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
                    auto x = tuple_at(oi, m, n);
                    std::vector<int> y(n);
                    for (int j = 0; j < n; ++j) y[j] = d.c.g_obj(hinv, x[s(j)]);
                    ok = d.c.g_obj(h, d.norms[i].obj[tuple_index(y, m)]) == d.norms[i].obj[oi];
                }
                for (long long mi2 = 0; mi2 < pow_ll(k, n) && ok; ++mi2) {
                    auto x = tuple_at(mi2, k, n);
                    std::vector<int> y(n);
                    for (int j = 0; j < n; ++j) y[j] = d.c.g_mor(hinv, x[s(j)]);
                    ok = d.c.g_mor(h, d.norms[i].mor[tuple_index(y, k)]) == d.norms[i].mor[mi2];
                }
            }
            r.add(tag + "-graph-fixed", ok);
        }
        auto comb = standard_tensor_tree(d.alphabet, n);
        {
            bool ok = true;
            std::string why;
            for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
                auto x = tuple_at(oi, m, n);
                int u = d.upsilon[i].comp[oi];
                ok = cat.dom[u] == d.norms[i].obj[oi] && cat.cod[u] == eval_tree_obj(d, comb, x) &&
                     cat.inverse(u) >= 0;
                if (!ok) why = "endpoints or invertibility";
            }
            if (ok) {
                // naturality of the untwistor
                for (long long mi2 = 0; mi2 < pow_ll(k, n) && ok; ++mi2) {
                    auto f = tuple_at(mi2, k, n);
                    std::vector<int> dv(n), cv(n);
                    for (int j = 0; j < n; ++j) {
                        dv[j] = cat.dom[f[j]];
                        cv[j] = cat.cod[f[j]];
                    }
                    ok = cat.compose(d.upsilon[i].comp[tuple_index(cv, m)], d.norms[i].mor[mi2]) ==
                         cat.compose(eval_tree_mor(d, comb, f),
                                     d.upsilon[i].comp[tuple_index(dv, m)]);
                    if (!ok) why = "naturality";
                }
            }
            r.add(tag + "-upsilon-natural", ok, why);
        }
        {
            // twisted equivariance of the untwistor
            bool ok = true;
            std::string why;
            for (int hi = 0; hi < ni.gamma.sub.order() && ok; ++hi) {
                int h = ni.gamma.sub.elements[hi];
                int hinv = g->inv(h);
                const Perm& s = ni.gamma.sigma[hi];
                auto coh_path = canonical_path(d.alphabet, sigma_act(s, comb), comb);
                auto coh = interpret_path(d, coh_path);
                for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
                    auto x = tuple_at(oi, m, n);
                    std::vector<int> y(n);
                    for (int j = 0; j < n; ++j) y[j] = d.c.g_obj(hinv, x[s(j)]);
                    int lhs = cat.compose(coh.comp[oi],
                                          d.c.g_mor(h, d.upsilon[i].comp[tuple_index(y, m)]));
                    if (lhs != d.upsilon[i].comp[oi]) {
                        ok = false;
                        why = "square fails at h=" + std::to_string(h) + " tuple " +
                              std::to_string(oi) + "; forces coherence component " +
                              std::to_string(coh.comp[oi]) + " = identity " +
                              std::to_string(cat.idm[cat.dom[coh.comp[oi]]]);
                    }
                }
            }
            r.add(tag + "-twisted-equivariance", ok, why);
        }
    }
    return r;
}

Report verify_parallel_paths(const NormedSMCData& d, int max_arity, int max_depth, int max_len) {
    Report r;
    const int m = d.c.cat.num_objects;
    for (int n = 0; n <= max_arity; ++n) {
        auto trees = enumerate_trees(d.alphabet, n, max_depth);
        std::map<std::string, int> index;
        for (int i = 0; i < static_cast<int>(trees.size()); ++i)
            index[canonical_form(trees[i])] = i;
        // adjacency with interpreted steps
        std::vector<std::vector<std::pair<int, NTrans>>> adj(trees.size());
        for (int i = 0; i < static_cast<int>(trees.size()); ++i)
            for (const auto& e : basic_edges_from(d.alphabet, trees[i], max_depth)) {
                auto it = index.find(canonical_form(e.tgt));
                if (it == index.end()) throw Error("Internal", "edge target escaped the graph");
                adj[i].push_back({it->second, interpret_edge(d, e)});
            }
        // one normalization |t| => |comb| per tree; the canonical
        // interpretation between any two trees factors through these
        std::vector<NTrans> down(trees.size());
        for (int j = 0; j < static_cast<int>(trees.size()); ++j)
            down[j] = interpret_path(d, upsilon_directed_path(d.alphabet, trees[j]));
        long long paths = 0;
        bool ok = true;
        std::string why;
        for (int start = 0; start < static_cast<int>(trees.size()) && ok; ++start) {
            // DFS with (tree, transformation) state pruning
            std::map<std::pair<int, std::vector<int>>, int> best;
            NTrans id0{n, {}};
            id0.comp.resize(pow_ll(m, n));
            for (long long oi = 0; oi < static_cast<long long>(id0.comp.size()); ++oi)
                id0.comp[oi] = d.c.cat.idm[eval_tree_obj(d, trees[start], tuple_at(oi, m, n))];
            std::function<void(int, const NTrans&, int)> dfs = [&](int at, const NTrans& acc,
                                                                   int left) {
                if (!ok) return;
                auto key = std::make_pair(at, acc.comp);
                auto it = best.find(key);
                if (it != best.end() && it->second >= left) return;
                best[key] = left;
                // agreeing with the canonical path start -> at means
                // normalizing after the path equals normalizing directly
                for (size_t ci = 0; ci < acc.comp.size() && ok; ++ci)
                    if (d.c.cat.compose(down[at].comp[ci], acc.comp[ci]) != down[start].comp[ci]) {
                        ok = false;
                        why = "path from " + canonical_form(trees[start]) + " to " +
                              canonical_form(trees[at]) + " differs from canonical";
                    }
                if (!ok || left == 0) return;
                for (const auto& [next, step] : adj[at]) {
                    NTrans comp{n, acc.comp};
                    for (size_t ci = 0; ci < comp.comp.size(); ++ci)
                        comp.comp[ci] = d.c.cat.compose(step.comp[ci], acc.comp[ci]);
                    ++paths;
                    dfs(next, comp, left - 1);
                }
            };
            dfs(start, id0, max_len);
        }
        r.add("parallel-paths-arity-" + std::to_string(n), ok,
              ok ? std::to_string(trees.size()) + " trees, " + std::to_string(paths) +
                       " path steps"
                 : why);
    }
    return r;
}

}  // namespace operadkit
