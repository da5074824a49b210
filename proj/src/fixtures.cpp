#include "operadkit/fixtures.hpp"

namespace operadkit {

NTrans identity_trans(const FiniteCategory& c, const NFunctor& f) {
    NTrans t{f.n, {}};
    t.comp.resize(f.obj.size());
    for (size_t i = 0; i < f.obj.size(); ++i) t.comp[i] = c.idm[f.obj[i]];
    return t;
}

namespace {

// n-ary functor with the given object map; morphism table built by `mor`.
NFunctor make_nfunctor(const FiniteCategory& c, int n, const std::function<int(const std::vector<int>&)>& obj,
                       const std::function<int(const std::vector<int>&)>& mor) {
    NFunctor f{n, {}, {}};
    const int m = c.num_objects, k = c.num_morphisms();
    f.obj.resize(pow_ll(m, n));
    for (long long i = 0; i < static_cast<long long>(f.obj.size()); ++i)
        f.obj[i] = obj(tuple_at(i, m, n));
    f.mor.resize(pow_ll(k, n));
    for (long long i = 0; i < static_cast<long long>(f.mor.size()); ++i)
        f.mor[i] = mor(tuple_at(i, k, n));
    return f;
}

}  // namespace

NormedSMCData discrete_maps_carrier(const GroupPtr& g, const std::vector<Exponent>& norm_gens) {
    const int n = g->order();
    if (n > 4) throw Error("TooLarge", "discrete maps carrier needs |G| <= 4");
    const int m = 1 << n;
    std::vector<std::vector<int>> act(n, std::vector<int>(m));
    for (int a = 0; a < n; ++a)
        for (int o = 0; o < m; ++o) {
            int r = 0;
            for (int x = 0; x < n; ++x) r |= ((o >> g->op(x, a)) & 1) << x;
            act[a][o] = r;
        }
    NormedSMCData d;
    d.c = g_category(g, discrete_category(m), act, act);
    d.alphabet = build_sn_alphabet(g, norm_gens);
    d.unit = 0;
    auto sum = [](const std::vector<int>& t) {
        int r = 0;
        for (int v : t) r ^= v;
        return r;
    };
    d.tensor = make_nfunctor(d.c.cat, 2, sum, sum);
    d.alpha = identity_trans(d.c.cat, make_nfunctor(d.c.cat, 3, sum, sum));
    NFunctor one = make_nfunctor(d.c.cat, 1, sum, sum);
    d.lambda = identity_trans(d.c.cat, one);
    d.rho = d.lambda;
    d.beta = identity_trans(d.c.cat, d.tensor);
    for (const auto& ni : d.alphabet.norms) {
        d.norms.push_back(make_nfunctor(d.c.cat, ni.t.size, sum, sum));
        d.upsilon.push_back(identity_trans(d.c.cat, d.norms.back()));
    }
    return d;
}

NormedSMCData chaotic_carrier(const GroupPtr& g, const std::vector<Exponent>& norm_gens) {
    NormedSMCData d;
    d.c = trivial_g_category(g, chaotic_category(2));
    const auto& c = d.c.cat;
    d.alphabet = build_sn_alphabet(g, norm_gens);
    d.unit = 0;
    auto sum = [](const std::vector<int>& t) {
        int r = 0;
        for (int v : t) r = (r + v) % 2;
        return r;
    };
    auto msum = [&](const std::vector<int>& t) {
        int from = 0, to = 0;
        for (int v : t) {
            from = (from + c.dom[v]) % 2;
            to = (to + c.cod[v]) % 2;
        }
        return chaotic_morphism(c, from, to);
    };
    d.tensor = make_nfunctor(c, 2, sum, msum);
    d.alpha = identity_trans(c, make_nfunctor(c, 3, sum, msum));
    NFunctor one = make_nfunctor(c, 1, sum, msum);
    d.lambda = identity_trans(c, one);
    d.rho = d.lambda;
    d.beta = identity_trans(c, d.tensor);
    for (const auto& ni : d.alphabet.norms) {
        d.norms.push_back(make_nfunctor(c, ni.t.size, sum, msum));
        d.upsilon.push_back(identity_trans(c, d.norms.back()));
    }
    return d;
}

int poset_mor(int from, int to) {
    if (from == to) return from;
    if (from == 0 && to == 1) return 2;
    throw Error("NotComposable", "no morphism upward in the poset");
}

NormedSMCData poset_max_carrier() {
    std::vector<int> dom{0, 1, 0}, cod{0, 1, 1}, idm{0, 1};
    std::vector<std::vector<int>> comp(3, std::vector<int>(3, -1));
    for (int f = 0; f < 3; ++f)
        for (int h = 0; h < 3; ++h)
            if (dom[f] == cod[h]) comp[f][h] = poset_mor(dom[h], cod[f]);
    NormedSMCData d;
    d.c = trivial_g_category(cyclic_group(1), category_from_tables(2, dom, cod, idm, comp));
    const auto& c = d.c.cat;
    d.alphabet = build_sn_alphabet(d.c.group, {});
    d.unit = 0;
    auto mx = [](const std::vector<int>& t) {
        int r = 0;
        for (int v : t) r = std::max(r, v);
        return r;
    };
    auto mmx = [&](const std::vector<int>& t) {
        int from = 0, to = 0;
        for (int v : t) {
            from = std::max(from, c.dom[v]);
            to = std::max(to, c.cod[v]);
        }
        return poset_mor(from, to);
    };
    d.tensor = make_nfunctor(c, 2, mx, mmx);
    d.alpha = identity_trans(c, make_nfunctor(c, 3, mx, mmx));
    NFunctor one = make_nfunctor(c, 1, mx, mmx);
    d.lambda = identity_trans(c, one);
    d.rho = d.lambda;
    d.beta = identity_trans(c, d.tensor);
    return d;
}

namespace {

FiniteCategory parity_category() {
    // morphism x*2 + sign on object x
    std::vector<int> dom{0, 0, 1, 1}, cod{0, 0, 1, 1}, idm{0, 2};
    std::vector<std::vector<int>> comp(4, std::vector<int>(4, -1));
    for (int f = 0; f < 4; ++f)
        for (int h = 0; h < 4; ++h)
            if (f / 2 == h / 2) comp[f][h] = (f / 2) * 2 + (f + h) % 2;
    return category_from_tables(2, dom, cod, idm, comp);
}

}  // namespace

NormedSMCData parity_carrier(const GroupPtr& g) {
    NormedSMCData d;
    d.c = trivial_g_category(g, parity_category());
    const auto& c = d.c.cat;
    d.alphabet = build_sn_alphabet(g, {});
    d.unit = 0;
    auto sum = [](const std::vector<int>& t) {
        int r = 0;
        for (int v : t) r = (r + v) % 2;
        return r;
    };
    auto msum = [](const std::vector<int>& t) {
        int x = 0, s = 0;
        for (int v : t) {
            x = (x + v / 2) % 2;
            s = (s + v) % 2;
        }
        return x * 2 + s;
    };
    d.tensor = make_nfunctor(c, 2, sum, msum);
    d.alpha = identity_trans(c, make_nfunctor(c, 3, sum, msum));
    NFunctor one = make_nfunctor(c, 1, sum, msum);
    d.lambda = identity_trans(c, one);
    d.rho = d.lambda;
    d.beta = {2, {}};
    d.beta.comp.resize(4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) d.beta.comp[a * 2 + b] = ((a + b) % 2) * 2 + a * b;
    return d;
}

std::vector<NormedSMCData> parity_norm_candidates(const GroupPtr& g, const Exponent& t) {
    NormedSMCData base = parity_carrier(g);
    base.alphabet = build_sn_alphabet(g, {t});
    const int n = t.size;
    const long long objs = pow_ll(2, n);
    if (n * objs > 16) throw Error("TooLarge", "parity candidate sweep limited to n * 2^n <= 16");
    std::vector<NormedSMCData> out;
    // invertible untwistor components force the object table to be the sum
    for (long long hom = 0; hom < (1LL << (n * objs)); ++hom) {
        NFunctor norm{n, {}, {}};
        norm.obj.resize(objs);
        for (long long oi = 0; oi < objs; ++oi) {
            int s = 0;
            for (int v : tuple_at(oi, 2, n)) s = (s + v) % 2;
            norm.obj[oi] = s;
        }
        norm.mor.resize(pow_ll(4, n));
        for (long long mi = 0; mi < static_cast<long long>(norm.mor.size()); ++mi) {
            auto f = tuple_at(mi, 4, n);
            std::vector<int> x(n);
            int s = 0;
            for (int j = 0; j < n; ++j) x[j] = f[j] / 2;
            long long oi = tuple_index(x, 2);
            // sign is the chosen homomorphism of the input signs at this tuple
            for (int j = 0; j < n; ++j)
                if ((hom >> (oi * n + j)) & 1) s = (s + f[j]) % 2;
            norm.mor[mi] = norm.obj[oi] * 2 + s;
        }
        for (long long ups = 0; ups < (1LL << objs); ++ups) {
            NormedSMCData d = base;
            d.norms = {norm};
            NTrans u{n, {}};
            u.comp.resize(objs);
            for (long long oi = 0; oi < objs; ++oi)
                u.comp[oi] = norm.obj[oi] * 2 + ((ups >> oi) & 1);
            d.upsilon = {u};
            out.push_back(std::move(d));
        }
    }
    return out;
}

}  // namespace operadkit
