#include "operadkit/normed_functors.hpp"

#include <algorithm>

namespace operadkit {

namespace {

void check_shapes(const LaxFunctor& f) {
    if (!f.src || !f.tgt) throw Error("BadFunctor", "missing carriers");
    const auto& a = f.src->alphabet;
    const auto& b = f.tgt->alphabet;
    if (a.group->order() != b.group->order() || a.norms.size() != b.norms.size())
        throw Error("BadFunctor", "carriers disagree on group or norms");
    for (size_t i = 0; i < a.norms.size(); ++i)
        if (!(a.norms[i].t == b.norms[i].t))
            throw Error("BadFunctor", "carriers disagree on norm exponents");
    if (static_cast<int>(f.obj.size()) != f.src->c.cat.num_objects ||
        static_cast<int>(f.mor.size()) != f.src->c.cat.num_morphisms())
        throw Error("BadFunctor", "functor tables have the wrong size");
}

std::vector<int> mapped(const LaxFunctor& f, const std::vector<int>& objs) {
    std::vector<int> out(objs.size());
    for (size_t i = 0; i < objs.size(); ++i) out[i] = f.obj[objs[i]];
    return out;
}

}  // namespace

LaxFunctor identity_lax(const NormedSMCData& d) {
    LaxFunctor f;
    f.src = f.tgt = &d;
    const auto& cat = d.c.cat;
    for (int o = 0; o < cat.num_objects; ++o) f.obj.push_back(o);
    for (int m = 0; m < cat.num_morphisms(); ++m) f.mor.push_back(m);
    f.fe = cat.idm[d.unit];
    f.fox.n = 2;
    for (int v : d.tensor.obj) f.fox.comp.push_back(cat.idm[v]);
    for (const auto& nf : d.norms) {
        NTrans t;
        t.n = nf.n;
        for (int v : nf.obj) t.comp.push_back(cat.idm[v]);
        f.fnorm.push_back(std::move(t));
    }
    return f;
}

int lax_tensor_n(const LaxFunctor& f, const std::vector<int>& objs) {
    const auto& dt = *f.tgt;
    const int n = static_cast<int>(objs.size());
    if (n == 0) return f.fe;
    if (n == 1) return dt.c.cat.idm[f.obj[objs[0]]];
    std::vector<int> prefix(objs.begin(), objs.end() - 1);
    int inner = lax_tensor_n(f, prefix);
    int cval = eval_tree_obj(*f.src, standard_tensor_tree(f.src->alphabet, n - 1), prefix);
    int last = dt.c.cat.idm[f.obj[objs[n - 1]]];
    int pair = dt.tensor.mor[tuple_index({inner, last}, dt.c.cat.num_morphisms())];
    int comparison = f.fox.comp[tuple_index({cval, objs[n - 1]}, f.src->c.cat.num_objects)];
    return dt.c.cat.compose(comparison, pair);
}

int lax_extension_comp(const LaxFunctor& f, const TreePtr& t, const std::vector<int>& objs) {
    const auto& dc = *f.src;
    const auto& dd = *f.tgt;
    if (t->leaf) return dd.c.cat.idm[f.obj[objs[t->number - 1]]];
    std::vector<int> dels, cvals;
    for (const auto& u : t->children) {
        dels.push_back(lax_extension_comp(f, u, objs));
        cvals.push_back(eval_tree_obj(dc, u, objs));
    }
    int label_del;
    switch (t->label.kind) {
        case LabelKind::E:
            label_del = f.fe;
            break;
        case LabelKind::Ox:
            label_del = f.fox.comp[tuple_index(cvals, dc.c.cat.num_objects)];
            break;
        default: {
            int gi = dc.alphabet.norms[t->label.norm].coset_reps[t->label.coset];
            std::vector<int> gvals(cvals.size());
            for (size_t j = 0; j < cvals.size(); ++j)
                gvals[j] = dc.c.g_obj(dc.alphabet.group->inv(gi), cvals[j]);
            label_del = dd.c.g_mor(
                gi, f.fnorm[t->label.norm].comp[tuple_index(gvals, dc.c.cat.num_objects)]);
        }
    }
    int dmap = eval_tree_mor(dd, corolla(dd.alphabet, t->label), dels);
    return dd.c.cat.compose(label_del, dmap);
}

NTrans lax_extension(const LaxFunctor& f, const TreePtr& t) {
    NTrans out;
    out.n = tree_arity(t);
    const int m = f.src->c.cat.num_objects;
    for (long long i = 0; i < pow_ll(m, out.n); ++i)
        out.comp.push_back(lax_extension_comp(f, t, tuple_at(i, m, out.n)));
    return out;
}

Report validate_lax_functor(const LaxFunctor& f) {
    check_shapes(f);
    Report r;
    const auto& dc = *f.src;
    const auto& dd = *f.tgt;
    const auto& cc = dc.c.cat;
    const auto& cd = dd.c.cat;
    const auto& g = dc.alphabet.group;
    {
        bool ok = true;
        for (int m = 0; m < cc.num_morphisms(); ++m) {
            if (cd.dom[f.mor[m]] != f.obj[cc.dom[m]]) ok = false;
            if (cd.cod[f.mor[m]] != f.obj[cc.cod[m]]) ok = false;
        }
        for (int o = 0; o < cc.num_objects; ++o)
            if (f.mor[cc.idm[o]] != cd.idm[f.obj[o]]) ok = false;
        for (int a = 0; a < cc.num_morphisms(); ++a)
            for (int b = 0; b < cc.num_morphisms(); ++b)
                if (cc.defined(a, b) && f.mor[cc.comp[a][b]] != cd.compose(f.mor[a], f.mor[b]))
                    ok = false;
        r.add("functor", ok);
    }
    {
        bool ok = true;
        for (int x = 0; x < g->order(); ++x) {
            for (int o = 0; o < cc.num_objects; ++o)
                if (f.obj[dc.c.g_obj(x, o)] != dd.c.g_obj(x, f.obj[o])) ok = false;
            for (int m = 0; m < cc.num_morphisms(); ++m)
                if (f.mor[dc.c.g_mor(x, m)] != dd.c.g_mor(x, f.mor[m])) ok = false;
        }
        r.add("g-functor", ok);
    }
    {
        bool ok = cd.dom[f.fe] == dd.unit && cd.cod[f.fe] == f.obj[dc.unit];
        for (int x = 0; x < g->order() && ok; ++x) ok = dd.c.g_mor(x, f.fe) == f.fe;
        r.add("unit-comparison-g-fixed", ok);
    }
    const int m = cc.num_objects;
    const int k = cc.num_morphisms();
    {
        bool ok = true;
        for (long long oi = 0; oi < pow_ll(m, 2) && ok; ++oi) {
            auto x = tuple_at(oi, m, 2);
            int c = f.fox.comp[oi];
            ok = cd.dom[c] == dd.tensor.obj[tuple_index(mapped(f, x), cd.num_objects)] &&
                 cd.cod[c] == f.obj[dc.tensor.obj[oi]];
        }
        for (long long mi = 0; mi < pow_ll(k, 2) && ok; ++mi) {
            auto x = tuple_at(mi, k, 2);
            std::vector<int> dtup{cc.dom[x[0]], cc.dom[x[1]]}, ctup{cc.cod[x[0]], cc.cod[x[1]]};
            int lhs = cd.compose(f.mor[dc.tensor.mor[mi]], f.fox.comp[tuple_index(dtup, m)]);
            int dmor = dd.tensor.mor[tuple_index({f.mor[x[0]], f.mor[x[1]]}, cd.num_morphisms())];
            ok = lhs == cd.compose(f.fox.comp[tuple_index(ctup, m)], dmor);
        }
        for (int x = 0; x < g->order() && ok; ++x)
            for (long long oi = 0; oi < pow_ll(m, 2) && ok; ++oi) {
                auto t = tuple_at(oi, m, 2);
                std::vector<int> y{dc.c.g_obj(g->inv(x), t[0]), dc.c.g_obj(g->inv(x), t[1])};
                ok = dd.c.g_mor(x, f.fox.comp[tuple_index(y, m)]) == f.fox.comp[oi];
            }
        r.add("tensor-comparison-natural", ok);
    }
    for (size_t i = 0; i < dc.alphabet.norms.size(); ++i) {
        const auto& ni = dc.alphabet.norms[i];
        const int n = ni.t.size;
        std::string tag = "norm" + std::to_string(i) + "-comparison";
        bool ok = true;
        for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
            auto x = tuple_at(oi, m, n);
            int c = f.fnorm[i].comp[oi];
            ok = cd.dom[c] == dd.norms[i].obj[tuple_index(mapped(f, x), cd.num_objects)] &&
                 cd.cod[c] == f.obj[dc.norms[i].obj[oi]];
        }
        for (long long mi = 0; mi < pow_ll(k, n) && ok; ++mi) {
            auto x = tuple_at(mi, k, n);
            std::vector<int> dtup(n), ctup(n), fx(n);
            for (int j = 0; j < n; ++j) {
                dtup[j] = cc.dom[x[j]];
                ctup[j] = cc.cod[x[j]];
                fx[j] = f.mor[x[j]];
            }
            int lhs = cd.compose(f.mor[dc.norms[i].mor[mi]], f.fnorm[i].comp[tuple_index(dtup, m)]);
            int dmor = dd.norms[i].mor[tuple_index(fx, cd.num_morphisms())];
            ok = lhs == cd.compose(f.fnorm[i].comp[tuple_index(ctup, m)], dmor);
        }
        for (int hi = 0; hi < ni.gamma.sub.order() && ok; ++hi) {
            int h = ni.gamma.sub.elements[hi];
            const Perm& s = ni.gamma.sigma[hi];
            for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
                auto x = tuple_at(oi, m, n);
                std::vector<int> y(n);
                for (int j = 0; j < n; ++j) y[j] = dc.c.g_obj(g->inv(h), x[s(j)]);
                ok = dd.c.g_mor(h, f.fnorm[i].comp[tuple_index(y, m)]) == f.fnorm[i].comp[oi];
            }
        }
        r.add(tag + "-graph-fixed", ok);
    }
    auto fox_at = [&](int a, int b) { return f.fox.comp[tuple_index({a, b}, m)]; };
    auto tens_c = [&](int a, int b) { return dc.tensor.obj[tuple_index({a, b}, m)]; };
    auto tens_d = [&](int a, int b) { return dd.tensor.obj[tuple_index({a, b}, cd.num_objects)]; };
    auto tmor_d = [&](int a, int b) {
        return dd.tensor.mor[tuple_index({a, b}, cd.num_morphisms())];
    };
    {
        bool ok = true;
        for (long long oi = 0; oi < pow_ll(m, 3) && ok; ++oi) {
            auto t = tuple_at(oi, m, 3);
            int lhs = cd.compose(
                f.mor[dc.alpha.comp[oi]],
                cd.compose(fox_at(tens_c(t[0], t[1]), t[2]),
                           tmor_d(fox_at(t[0], t[1]), cd.idm[f.obj[t[2]]])));
            int rhs = cd.compose(
                fox_at(t[0], tens_c(t[1], t[2])),
                cd.compose(tmor_d(cd.idm[f.obj[t[0]]], fox_at(t[1], t[2])),
                           dd.alpha.comp[tuple_index(mapped(f, t), cd.num_objects)]));
            ok = lhs == rhs;
        }
        r.add("lax-associativity", ok);
    }
    {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a) {
            int lhs = cd.compose(f.mor[dc.lambda.comp[a]],
                                 cd.compose(fox_at(dc.unit, a), tmor_d(f.fe, cd.idm[f.obj[a]])));
            if (lhs != dd.lambda.comp[f.obj[a]]) ok = false;
            int rhs = cd.compose(f.mor[dc.rho.comp[a]],
                                 cd.compose(fox_at(a, dc.unit), tmor_d(cd.idm[f.obj[a]], f.fe)));
            if (rhs != dd.rho.comp[f.obj[a]]) ok = false;
        }
        r.add("lax-unitality", ok);
    }
    {
        bool ok = true;
        for (long long oi = 0; oi < pow_ll(m, 2) && ok; ++oi) {
            auto t = tuple_at(oi, m, 2);
            int lhs = cd.compose(f.mor[dc.beta.comp[oi]], fox_at(t[0], t[1]));
            int rhs = cd.compose(fox_at(t[1], t[0]),
                                 dd.beta.comp[tuple_index(mapped(f, t), cd.num_objects)]);
            ok = lhs == rhs;
        }
        r.add("lax-symmetry", ok);
    }
    for (size_t i = 0; i < dc.alphabet.norms.size(); ++i) {
        const int n = dc.alphabet.norms[i].t.size;
        bool ok = true;
        for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
            auto t = tuple_at(oi, m, n);
            int lhs = cd.compose(f.mor[dc.upsilon[i].comp[oi]], f.fnorm[i].comp[oi]);
            int rhs = cd.compose(lax_tensor_n(f, t),
                                 dd.upsilon[i].comp[tuple_index(mapped(f, t), cd.num_objects)]);
            ok = lhs == rhs;
        }
        r.add("norm" + std::to_string(i) + "-untwistor-square", ok);
    }
    return r;
}

bool lax_is_strong(const LaxFunctor& f) {
    const auto& cd = f.tgt->c.cat;
    if (cd.inverse(f.fe) < 0) return false;
    for (int c : f.fox.comp)
        if (cd.inverse(c) < 0) return false;
    for (const auto& t : f.fnorm)
        for (int c : t.comp)
            if (cd.inverse(c) < 0) return false;
    return true;
}

bool lax_is_strict(const LaxFunctor& f) {
    const auto& cd = f.tgt->c.cat;
    if (f.fe != cd.idm[cd.dom[f.fe]]) return false;
    for (int c : f.fox.comp)
        if (c != cd.idm[cd.dom[c]]) return false;
    for (const auto& t : f.fnorm)
        for (int c : t.comp)
            if (c != cd.idm[cd.dom[c]]) return false;
    return true;
}

Report extend_lax_to_operad(const LaxFunctor& f, int max_arity, int max_depth) {
    check_shapes(f);
    Report r;
    const auto& dc = *f.src;
    const auto& dd = *f.tgt;
    const auto& cd = dd.c.cat;
    const auto& g = dc.alphabet.group;
    const int m = dc.c.cat.num_objects;
    {
        // evaluation at the generators returns the comparison data
        bool ok = true;
        Label le{LabelKind::E, -1, -1}, lox{LabelKind::Ox, -1, -1};
        ok = ok && lax_extension(f, corolla(dc.alphabet, le)).comp == std::vector<int>{f.fe};
        ok = ok && lax_extension(f, corolla(dc.alphabet, lox)).comp == f.fox.comp;
        for (size_t i = 0; i < dc.alphabet.norms.size(); ++i) {
            Label ln{LabelKind::Norm, static_cast<int>(i), 0};
            ok = ok && lax_extension(f, corolla(dc.alphabet, ln)).comp == f.fnorm[i].comp;
        }
        r.add("extension-generators", ok);
    }
    {
        bool ok = true;
        for (int a = 0; a < m; ++a)
            if (lax_extension_comp(f, make_leaf(1), {a}) != cd.idm[f.obj[a]]) ok = false;
        r.add("extension-identity", ok);
    }
    {
        // the iterated-tensor comparison equals the extension at the comb
        bool ok = true;
        for (int n = 0; n <= std::max(max_arity, 3) && ok; ++n) {
            auto comb = standard_tensor_tree(dc.alphabet, n);
            for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
                auto t = tuple_at(oi, m, n);
                ok = lax_extension_comp(f, comb, t) == lax_tensor_n(f, t);
            }
        }
        r.add("extension-iterated-tensor", ok);
    }
    {
        bool ok = true;
        for (const auto& t : enumerate_trees(dc.alphabet, 2, 2))
            for (int x = 0; x < g->order() && ok; ++x)
                for (const auto& s : all_perms(2)) {
                    auto gt = act(dc.alphabet, x, s, t);
                    for (long long oi = 0; oi < pow_ll(m, 2) && ok; ++oi) {
                        auto obs = tuple_at(oi, m, 2);
                        std::vector<int> y(2);
                        for (int j = 0; j < 2; ++j) y[j] = dc.c.g_obj(g->inv(x), obs[s(j)]);
                        ok = lax_extension_comp(f, gt, obs) ==
                             dd.c.g_mor(x, lax_extension_comp(f, t, y));
                    }
                }
        r.add("extension-equivariance", ok);
    }
    {
        bool ok = true;
        auto unary = enumerate_trees(dc.alphabet, 1, 1);
        for (const auto& y : enumerate_trees(dc.alphabet, 2, 1))
            for (const auto& x1 : unary)
                for (const auto& x2 : unary) {
                    auto t = gamma_compose(y, {x1, x2});
                    for (long long oi = 0; oi < pow_ll(m, 2) && ok; ++oi) {
                        auto obs = tuple_at(oi, m, 2);
                        int d1 = lax_extension_comp(f, x1, {obs[0]});
                        int d2 = lax_extension_comp(f, x2, {obs[1]});
                        std::vector<int> vals{eval_tree_obj(dc, x1, {obs[0]}),
                                              eval_tree_obj(dc, x2, {obs[1]})};
                        int outer = lax_extension_comp(f, y, vals);
                        int inner = eval_tree_mor(dd, y, {d1, d2});
                        ok = lax_extension_comp(f, t, obs) == cd.compose(outer, inner);
                    }
                }
        r.add("extension-composition", ok);
    }
    {
        // the extension is natural in the tree against every basic edge
        bool ok = true;
        std::string why;
        for (int n = 1; n <= max_arity && ok; ++n)
            for (const auto& t : enumerate_trees(dc.alphabet, n, max_depth)) {
                for (const auto& e : basic_edges_from(dc.alphabet, t, max_depth)) {
                    auto eta_c = interpret_edge(dc, e);
                    auto eta_d = interpret_edge(dd, e);
                    for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
                        auto obs = tuple_at(oi, m, n);
                        int lhs = cd.compose(f.mor[eta_c.comp[oi]],
                                             lax_extension_comp(f, e.src, obs));
                        int rhs = cd.compose(
                            lax_extension_comp(f, e.tgt, obs),
                            eta_d.comp[tuple_index(mapped(f, obs), cd.num_objects)]);
                        if (lhs != rhs) {
                            ok = false;
                            why = "edge at " + canonical_form(e.src);
                        }
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
        r.add("extension-naturality", ok, why);
    }
    return r;
}

Report validate_monoidal_transformation(const LaxFunctor& f, const LaxFunctor& g,
                                        const std::vector<int>& omega, int max_arity,
                                        int max_depth) {
    check_shapes(f);
    check_shapes(g);
    if (f.src != g.src || f.tgt != g.tgt)
        throw Error("BadFunctor", "transformation endpoints live on different carriers");
    Report r;
    const auto& dc = *f.src;
    const auto& dd = *f.tgt;
    const auto& cc = dc.c.cat;
    const auto& cd = dd.c.cat;
    const auto& gp = dc.alphabet.group;
    const int m = cc.num_objects;
    bool monoidal = true;
    {
        bool ok = true;
        for (int x = 0; x < m; ++x)
            ok = ok && cd.dom[omega[x]] == f.obj[x] && cd.cod[omega[x]] == g.obj[x];
        for (int mo = 0; mo < cc.num_morphisms() && ok; ++mo)
            ok = cd.compose(omega[cc.cod[mo]], f.mor[mo]) == cd.compose(g.mor[mo], omega[cc.dom[mo]]);
        for (int x = 0; x < gp->order() && ok; ++x)
            for (int o = 0; o < m && ok; ++o)
                ok = dd.c.g_mor(x, omega[dc.c.g_obj(gp->inv(x), o)]) == omega[o];
        r.add("omega-g-natural", ok);
        monoidal = monoidal && ok;
    }
    {
        bool ok = cd.compose(omega[dc.unit], f.fe) == g.fe;
        r.add("omega-unit-square", ok);
        monoidal = monoidal && ok;
    }
    {
        bool ok = true;
        for (long long oi = 0; oi < pow_ll(m, 2) && ok; ++oi) {
            auto t = tuple_at(oi, m, 2);
            int lhs = cd.compose(omega[dc.tensor.obj[oi]], f.fox.comp[oi]);
            int wt = dd.tensor.mor[tuple_index({omega[t[0]], omega[t[1]]}, cd.num_morphisms())];
            ok = lhs == cd.compose(g.fox.comp[oi], wt);
        }
        r.add("omega-tensor-square", ok);
        monoidal = monoidal && ok;
    }
    for (size_t i = 0; i < dc.alphabet.norms.size(); ++i) {
        const int n = dc.alphabet.norms[i].t.size;
        bool ok = true;
        for (long long oi = 0; oi < pow_ll(m, n) && ok; ++oi) {
            auto t = tuple_at(oi, m, n);
            std::vector<int> ws(n);
            for (int j = 0; j < n; ++j) ws[j] = omega[t[j]];
            int lhs = cd.compose(omega[dc.norms[i].obj[oi]], f.fnorm[i].comp[oi]);
            int wt = dd.norms[i].mor[tuple_index(ws, cd.num_morphisms())];
            ok = lhs == cd.compose(g.fnorm[i].comp[oi], wt);
        }
        r.add("omega-norm" + std::to_string(i) + "-square", ok);
        monoidal = monoidal && ok;
    }
    bool operadic = true;
    {
        std::string why;
        for (int n = 0; n <= max_arity && operadic; ++n)
            for (const auto& t : enumerate_trees(dc.alphabet, n, max_depth)) {
                for (long long oi = 0; oi < pow_ll(m, n) && operadic; ++oi) {
                    auto obs = tuple_at(oi, m, n);
                    std::vector<int> ws(n);
                    for (int j = 0; j < n; ++j) ws[j] = omega[obs[j]];
                    int lhs = cd.compose(omega[eval_tree_obj(dc, t, obs)],
                                         lax_extension_comp(f, t, obs));
                    int rhs = cd.compose(lax_extension_comp(g, t, obs),
                                         eval_tree_mor(dd, t, ws));
                    if (lhs != rhs) {
                        operadic = false;
                        why = "tree " + canonical_form(t);
                    }
                }
                if (!operadic) break;
            }
        // also require omega's endpoint and naturality data on the operad side
        operadic = operadic && r.find("omega-g-natural")->pass;
        r.add("omega-operadic", operadic, why);
    }
    r.add("verdicts-agree", monoidal == operadic);
    return r;
}

Report roundtrip_algebra(const NormedSMCData& d) {
    Report r;
    const auto& a = d.alphabet;
    Label le{LabelKind::E, -1, -1}, lox{LabelKind::Ox, -1, -1};
    r.add("unit-readback", eval_tree_obj(d, corolla(a, le), {}) == d.unit);
    {
        auto f = interpret_tree(d, corolla(a, lox));
        r.add("tensor-readback", f.obj == d.tensor.obj && f.mor == d.tensor.mor);
    }
    for (size_t i = 0; i < a.norms.size(); ++i) {
        Label ln{LabelKind::Norm, static_cast<int>(i), 0};
        auto f = interpret_tree(d, corolla(a, ln));
        r.add("norm" + std::to_string(i) + "-readback",
              f.obj == d.norms[i].obj && f.mor == d.norms[i].mor);
    }
    auto edge_readback = [&](const TreePtr& src, const Irreducible& irr) {
        return interpret_edge(d, make_basic_edge(a, src, {}, irr));
    };
    {
        auto t = make_vertex(lox, {make_vertex(lox, {make_leaf(1), make_leaf(2)}), make_leaf(3)});
        r.add("alpha-readback", edge_readback(t, {IrrKind::Alpha, {}}).comp == d.alpha.comp);
    }
    {
        auto t = make_vertex(lox, {corolla(a, le), make_leaf(1)});
        r.add("lambda-readback", edge_readback(t, {IrrKind::Lambda, {}}).comp == d.lambda.comp);
    }
    {
        auto t = make_vertex(lox, {make_leaf(1), corolla(a, le)});
        r.add("rho-readback", edge_readback(t, {IrrKind::Rho, {}}).comp == d.rho.comp);
    }
    {
        auto t = make_vertex(lox, {make_leaf(1), make_leaf(2)});
        r.add("beta-readback", edge_readback(t, {IrrKind::Beta, {}}).comp == d.beta.comp);
    }
    for (size_t i = 0; i < a.norms.size(); ++i) {
        Label ln{LabelKind::Norm, static_cast<int>(i), 0};
        auto eta = edge_readback(corolla(a, ln), {IrrKind::Ups, ln});
        r.add("upsilon" + std::to_string(i) + "-readback", eta.comp == d.upsilon[i].comp);
    }
    r.add("readback-validates", validate_nsmc(d).ok());
    return r;
}

Report verify_coherence_instance(const NormedSMCData& d, int max_arity, int max_depth,
                                 int max_len) {
    Report r = verify_parallel_paths(d, max_arity, max_depth, max_len);
    const auto& g = d.alphabet.group;
    const int m = d.c.cat.num_objects;
    const int k = d.c.cat.num_morphisms();
    auto trees = enumerate_trees(d.alphabet, 2, std::min(max_depth, 2));
    {
        bool ok = true;
        for (const auto& t : trees)
            for (const auto& s : all_perms(2)) {
                auto st = sigma_act(s, t);
                for (long long oi = 0; oi < pow_ll(m, 2) && ok; ++oi) {
                    auto x = tuple_at(oi, m, 2);
                    ok = eval_tree_obj(d, st, x) == eval_tree_obj(d, t, {x[s(0)], x[s(1)]});
                }
                for (long long mi = 0; mi < pow_ll(k, 2) && ok; ++mi) {
                    auto x = tuple_at(mi, k, 2);
                    ok = eval_tree_mor(d, st, x) == eval_tree_mor(d, t, {x[s(0)], x[s(1)]});
                }
            }
        r.add("operad-map-sigma", ok);
    }
    {
        bool ok = true;
        for (const auto& t : trees)
            for (int a = 0; a < g->order() && ok; ++a) {
                auto gt = g_act(d.alphabet, a, t);
                for (long long oi = 0; oi < pow_ll(m, 2) && ok; ++oi) {
                    auto x = tuple_at(oi, m, 2);
                    std::vector<int> y{d.c.g_obj(g->inv(a), x[0]), d.c.g_obj(g->inv(a), x[1])};
                    ok = eval_tree_obj(d, gt, x) == d.c.g_obj(a, eval_tree_obj(d, t, y));
                }
                for (long long mi = 0; mi < pow_ll(k, 2) && ok; ++mi) {
                    auto x = tuple_at(mi, k, 2);
                    std::vector<int> y{d.c.g_mor(g->inv(a), x[0]), d.c.g_mor(g->inv(a), x[1])};
                    ok = eval_tree_mor(d, gt, x) == d.c.g_mor(a, eval_tree_mor(d, t, y));
                }
            }
        r.add("operad-map-g", ok);
    }
    {
        bool ok = true;
        for (int o = 0; o < m; ++o) ok = ok && eval_tree_obj(d, make_leaf(1), {o}) == o;
        for (int mo = 0; mo < k; ++mo) ok = ok && eval_tree_mor(d, make_leaf(1), {mo}) == mo;
        r.add("operad-map-identity", ok);
    }
    {
        bool ok = true;
        auto unary = enumerate_trees(d.alphabet, 1, 1);
        for (const auto& y : enumerate_trees(d.alphabet, 2, 1))
            for (const auto& x1 : unary)
                for (const auto& x2 : unary) {
                    auto t = gamma_compose(y, {x1, x2});
                    for (long long oi = 0; oi < pow_ll(m, 2) && ok; ++oi) {
                        auto x = tuple_at(oi, m, 2);
                        ok = eval_tree_obj(d, t, x) ==
                             eval_tree_obj(d, y, {eval_tree_obj(d, x1, {x[0]}),
                                                  eval_tree_obj(d, x2, {x[1]})});
                    }
                    for (long long mi = 0; mi < pow_ll(k, 2) && ok; ++mi) {
                        auto x = tuple_at(mi, k, 2);
                        ok = eval_tree_mor(d, t, x) ==
                             eval_tree_mor(d, y, {eval_tree_mor(d, x1, {x[0]}),
                                                  eval_tree_mor(d, x2, {x[1]})});
                    }
                }
        r.add("operad-map-composition", ok);
    }
    return r;
}

}  // namespace operadkit
