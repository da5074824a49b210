#include "operadkit/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace operadkit {

GroupPtr group_from_table(const std::vector<std::vector<int>>& mul) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw Error("NotAGroup", "empty table");
    if (n > FiniteGroup::kMaxOrder) throw Error("TooLarge", "group order exceeds 24");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) throw Error("NotAGroup", "table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw Error("NotAGroup", "entry out of range");
    }
    // find the (unique) two-sided identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw Error("NotAGroup", "no identity element");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw Error("NotAGroup", "not associative");
    // relabel so the identity is 0 (swap labels id <-> 0)
    auto relabel = [&](int x) { return x == id ? 0 : (x == 0 ? id : x); };
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m[relabel(a)][relabel(b)] = relabel(mul[a][b]);
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (m[a][b] == 0 && m[b][a] == 0) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0) throw Error("NotAGroup", "missing inverse");
    }
    return std::make_shared<FiniteGroup>(std::move(m), std::move(inv));
}

GroupPtr cyclic_group(int n) {
    if (n < 1 || n > FiniteGroup::kMaxOrder) throw Error("TooLarge", "cyclic group order");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return group_from_table(mul);
}

GroupPtr symmetric_group(int n) {
    auto ps = all_perms(n);
    const int m = static_cast<int>(ps.size());
    if (m > FiniteGroup::kMaxOrder) throw Error("TooLarge", "symmetric group order");
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) mul[a][b] = perm_index(compose(ps[a], ps[b]));
    return group_from_table(mul);
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
    const int na = a->order(), nb = b->order(), n = na * nb;
    if (n > 576) throw Error("TooLarge", "product group order");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<int> inv(n);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            const int p = x * nb + y;
            inv[p] = a->inv(x) * nb + b->inv(y);
            for (int u = 0; u < na; ++u)
                for (int v = 0; v < nb; ++v)
                    mul[p][u * nb + v] = a->op(x, u) * nb + b->op(y, v);
        }
    return std::make_shared<FiniteGroup>(std::move(mul), std::move(inv));
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements[0] != FiniteGroup::kIdentity)
        throw Error("NotASubgroup", "must contain the identity");
    std::set<int> s(elements.begin(), elements.end());
    for (int x : elements) {
        if (!s.count(g->inv(x))) throw Error("NotASubgroup", "not closed under inverse");
        for (int y : elements)
            if (!s.count(g->op(x, y))) throw Error("NotASubgroup", "not closed under product");
    }
    return Subgroup{g, std::move(elements)};
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
    std::set<int> s{FiniteGroup::kIdentity};
    std::vector<int> todo{FiniteGroup::kIdentity};
    for (int x : gens)
        if (s.insert(x).second) todo.push_back(x);
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (int y : std::vector<int>(s.begin(), s.end())) {
            for (int z : {g->op(x, y), g->op(y, x), g->inv(x)})
                if (s.insert(z).second) todo.push_back(z);
        }
    }
    return Subgroup{g, std::vector<int>(s.begin(), s.end())};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {FiniteGroup::kIdentity}}; }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{g, std::move(all)};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
    const auto& gr = h.group;
    std::vector<int> els;
    els.reserve(h.elements.size());
    for (int x : h.elements) els.push_back(gr->op(gr->op(g, x), gr->inv(g)));
    std::sort(els.begin(), els.end());
    return Subgroup{gr, std::move(els)};
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
    std::vector<int> els;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(els));
    return Subgroup{a.group, std::move(els)};
}

bool subgroup_leq(const Subgroup& k, const Subgroup& h) {
    return std::includes(h.elements.begin(), h.elements.end(), k.elements.begin(),
                         k.elements.end());
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g) {
    std::set<std::vector<int>> found;
    found.insert({FiniteGroup::kIdentity});
    for (int x = 0; x < g->order(); ++x) found.insert(subgroup_generated(g, {x}).elements);
    // close under pairwise join until stable
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(found.begin(), found.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> gens = cur[i];
                gens.insert(gens.end(), cur[j].begin(), cur[j].end());
                auto join = subgroup_generated(g, gens).elements;
                if (found.insert(join).second) grew = true;
            }
    }
    std::vector<Subgroup> out;
    for (const auto& els : found) out.push_back(Subgroup{g, els});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<int> left_coset_reps(const Subgroup& h) {
    const auto& g = h.group;
    std::vector<char> seen(g->order(), 0);
    std::vector<int> reps;
    for (int x = 0; x < g->order(); ++x) {
        if (seen[x]) continue;
        reps.push_back(x);  // x is minimal in its coset by scan order
        for (int w : h.elements) seen[g->op(x, w)] = 1;
    }
    return reps;  // identity's coset (rep 0) comes first
}

std::pair<int, int> coset_decompose(const Subgroup& h, const std::vector<int>& reps, int g) {
    const auto& gr = h.group;
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
        int w = gr->op(gr->inv(reps[i]), g);
        if (h.contains(w)) return {i, w};
    }
    throw Error("Internal", "coset decomposition failed");
}

Perm Perm::identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) p.img[img[i]] = i;
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img[i] != i) return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm p;
    p.img.resize(a.img.size());
    for (int i = 0; i < a.degree(); ++i) p.img[i] = a.img[b.img[i]];
    return p;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = Perm::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

int perm_index(const Perm& p) {
    // lexicographic rank via factorial number system
    const int n = p.degree();
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p.img[j] < p.img[i]) ++smaller;
        int f = 1;
        for (int k = 2; k <= n - 1 - i; ++k) f *= k;
        rank += smaller * f;
    }
    return rank;
}

}  // namespace operadkit
