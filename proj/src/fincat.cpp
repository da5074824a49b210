#include "operadkit/fincat.hpp"

#include <algorithm>

namespace operadkit {

int FiniteCategory::compose(int f, int g) const {
    int r = comp[f][g];
    if (r < 0) throw Error("NotComposable", "morphisms do not compose");
    return r;
}

int FiniteCategory::inverse(int m) const {
    for (int u = 0; u < num_morphisms(); ++u)
        if (dom[u] == cod[m] && cod[u] == dom[m] && comp[u][m] == idm[dom[m]] &&
            comp[m][u] == idm[cod[m]])
            return u;
    return -1;
}

FiniteCategory category_from_tables(int num_objects, std::vector<int> dom, std::vector<int> cod,
                                    std::vector<int> idm, std::vector<std::vector<int>> comp) {
    FiniteCategory c{num_objects, std::move(dom), std::move(cod), std::move(idm), std::move(comp)};
    const int k = c.num_morphisms();
    if (static_cast<int>(c.cod.size()) != k || static_cast<int>(c.comp.size()) != k)
        throw Error("NotACategory", "table sizes disagree");
    if (static_cast<int>(c.idm.size()) != num_objects)
        throw Error("NotACategory", "missing identities");
    for (int m = 0; m < k; ++m) {
        if (c.dom[m] < 0 || c.dom[m] >= num_objects || c.cod[m] < 0 || c.cod[m] >= num_objects)
            throw Error("NotACategory", "dom/cod out of range");
        if (static_cast<int>(c.comp[m].size()) != k) throw Error("NotACategory", "bad comp row");
    }
    for (int o = 0; o < num_objects; ++o) {
        int i = c.idm[o];
        if (i < 0 || i >= k || c.dom[i] != o || c.cod[i] != o)
            throw Error("NotACategory", "identity has wrong endpoints");
    }
    for (int f = 0; f < k; ++f)
        for (int g = 0; g < k; ++g) {
            int r = c.comp[f][g];
            bool composable = c.dom[f] == c.cod[g];
            if (composable != (r >= 0)) throw Error("NotACategory", "composability mismatch");
            if (r >= 0 && (c.dom[r] != c.dom[g] || c.cod[r] != c.cod[f]))
                throw Error("NotACategory", "composite has wrong endpoints");
        }
    for (int m = 0; m < k; ++m) {
        if (c.comp[m][c.idm[c.dom[m]]] != m || c.comp[c.idm[c.cod[m]]][m] != m)
            throw Error("NotACategory", "identity law fails");
    }
    for (int f = 0; f < k; ++f)
        for (int g = 0; g < k; ++g) {
            if (!c.defined(f, g)) continue;
            for (int h = 0; h < k; ++h) {
                if (!c.defined(g, h)) continue;
                if (c.comp[c.comp[f][g]][h] != c.comp[f][c.comp[g][h]])
                    throw Error("NotACategory", "composition not associative");
            }
        }
    return c;
}

FiniteCategory discrete_category(int n) {
    FiniteCategory c;
    c.num_objects = n;
    for (int o = 0; o < n; ++o) {
        c.dom.push_back(o);
        c.cod.push_back(o);
        c.idm.push_back(o);
    }
    c.comp.assign(n, std::vector<int>(n, -1));
    for (int o = 0; o < n; ++o) c.comp[o][o] = o;
    return c;
}

FiniteCategory chaotic_category(int n) {
    FiniteCategory c;
    c.num_objects = n;
    c.idm.resize(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // morphism a*n+b goes from a to b
            c.dom.push_back(a);
            c.cod.push_back(b);
            if (a == b) c.idm[a] = a * n + b;
        }
    const int k = n * n;
    c.comp.assign(k, std::vector<int>(k, -1));
    for (int f = 0; f < k; ++f)
        for (int g = 0; g < k; ++g)
            if (c.dom[f] == c.cod[g]) c.comp[f][g] = c.dom[g] * n + c.cod[f];
    return c;
}

int chaotic_morphism(const FiniteCategory& c, int from, int to) {
    return from * c.num_objects + to;
}

GCategory g_category(const GroupPtr& g, FiniteCategory cat, std::vector<std::vector<int>> act_obj,
                     std::vector<std::vector<int>> act_mor) {
    GCategory gc{g, std::move(cat), std::move(act_obj), std::move(act_mor)};
    const auto& c = gc.cat;
    for (int o = 0; o < c.num_objects; ++o)
        if (gc.g_obj(0, o) != o) throw Error("NotAnAction", "identity must act trivially");
    for (int m = 0; m < c.num_morphisms(); ++m)
        if (gc.g_mor(0, m) != m) throw Error("NotAnAction", "identity must act trivially");
    for (int a = 0; a < g->order(); ++a) {
        for (int o = 0; o < c.num_objects; ++o) {
            if (gc.g_mor(a, c.idm[o]) != c.idm[gc.g_obj(a, o)])
                throw Error("NotAnAction", "action not functorial on identities");
            for (int b = 0; b < g->order(); ++b)
                if (gc.g_obj(g->op(a, b), o) != gc.g_obj(a, gc.g_obj(b, o)))
                    throw Error("NotAnAction", "object action law fails");
        }
        for (int m = 0; m < c.num_morphisms(); ++m) {
            if (c.dom[gc.g_mor(a, m)] != gc.g_obj(a, c.dom[m]) ||
                c.cod[gc.g_mor(a, m)] != gc.g_obj(a, c.cod[m]))
                throw Error("NotAnAction", "action breaks endpoints");
            for (int b = 0; b < g->order(); ++b)
                if (gc.g_mor(g->op(a, b), m) != gc.g_mor(a, gc.g_mor(b, m)))
                    throw Error("NotAnAction", "morphism action law fails");
        }
        for (int f = 0; f < c.num_morphisms(); ++f)
            for (int m = 0; m < c.num_morphisms(); ++m)
                if (c.defined(f, m) &&
                    gc.g_mor(a, c.comp[f][m]) != c.compose(gc.g_mor(a, f), gc.g_mor(a, m)))
                    throw Error("NotAnAction", "action not functorial");
    }
    return gc;
}

GCategory trivial_g_category(const GroupPtr& g, FiniteCategory cat) {
    std::vector<int> objs(cat.num_objects), mors(cat.num_morphisms());
    for (int o = 0; o < cat.num_objects; ++o) objs[o] = o;
    for (int m = 0; m < cat.num_morphisms(); ++m) mors[m] = m;
    return g_category(g, std::move(cat), std::vector<std::vector<int>>(g->order(), objs),
                      std::vector<std::vector<int>>(g->order(), mors));
}

long long pow_ll(int base, int n) {
    long long r = 1;
    for (int i = 0; i < n; ++i) {
        r *= base;
        if (r > (1LL << 40)) throw Error("TooLarge", "tuple space too large");
    }
    return r;
}

long long tuple_index(const std::vector<int>& tup, int base) {
    long long idx = 0;
    for (int t : tup) idx = idx * base + t;
    return idx;
}

std::vector<int> tuple_at(long long idx, int base, int n) {
    std::vector<int> tup(n);
    for (int i = n - 1; i >= 0; --i) {
        tup[i] = static_cast<int>(idx % base);
        idx /= base;
    }
    return tup;
}

void for_each_composable(const FiniteCategory& c, int n,
                         const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int f = 0; f < c.num_morphisms(); ++f)
        for (int g = 0; g < c.num_morphisms(); ++g)
            if (c.defined(f, g)) pairs.push_back({f, g});
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<long long>(pairs.size());
        if (total > 100000000LL) throw Error("TooLarge", "too many composable tuples");
    }
    std::vector<int> f(n), g(n), pick(n, 0);
    if (pairs.empty() && n > 0) return;
    while (true) {
        for (int i = 0; i < n; ++i) {
            f[i] = pairs[pick[i]].first;
            g[i] = pairs[pick[i]].second;
        }
        fn(f, g);
        int i = n - 1;
        while (i >= 0 && pick[i] + 1 == static_cast<int>(pairs.size())) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
}

bool nfunctor_is_functor(const FiniteCategory& c, const NFunctor& f, std::string* why) {
    const int m = c.num_objects, k = c.num_morphisms();
    if (static_cast<long long>(f.obj.size()) != pow_ll(m, f.n) ||
        static_cast<long long>(f.mor.size()) != pow_ll(k, f.n)) {
        if (why) *why = "table sizes";
        return false;
    }
    for (int v : f.obj)
        if (v < 0 || v >= m) {
            if (why) *why = "object out of range";
            return false;
        }
    // endpoints and identities
    const long long objs = pow_ll(m, f.n);
    for (long long oi = 0; oi < objs; ++oi) {
        auto tup = tuple_at(oi, m, f.n);
        std::vector<int> ids(f.n);
        for (int i = 0; i < f.n; ++i) ids[i] = c.idm[tup[i]];
        if (f.mor[tuple_index(ids, k)] != c.idm[f.obj[oi]]) {
            if (why) *why = "identities not preserved";
            return false;
        }
    }
    const long long mors = pow_ll(k, f.n);
    for (long long mi = 0; mi < mors; ++mi) {
        auto tup = tuple_at(mi, k, f.n);
        std::vector<int> d(f.n), e(f.n);
        for (int i = 0; i < f.n; ++i) {
            d[i] = c.dom[tup[i]];
            e[i] = c.cod[tup[i]];
        }
        int fm = f.mor[mi];
        if (c.dom[fm] != f.obj[tuple_index(d, m)] || c.cod[fm] != f.obj[tuple_index(e, m)]) {
            if (why) *why = "morphism endpoints";
            return false;
        }
    }
    bool ok = true;
    for_each_composable(c, f.n, [&](const std::vector<int>& ff, const std::vector<int>& gg) {
        if (!ok) return;
        std::vector<int> fg(f.n);
        for (int i = 0; i < f.n; ++i) fg[i] = c.comp[ff[i]][gg[i]];
        if (f.mor[tuple_index(fg, k)] !=
            c.comp[f.mor[tuple_index(ff, k)]][f.mor[tuple_index(gg, k)]])
            ok = false;
    });
    if (!ok && why) *why = "composition not preserved";
    return ok;
}

}  // namespace operadkit
