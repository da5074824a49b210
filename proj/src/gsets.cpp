#include "operadkit/gsets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace operadkit {

namespace {

int index_in_sub(const Subgroup& sub, int h) {
    auto it = std::lower_bound(sub.elements.begin(), sub.elements.end(), h);
    if (it == sub.elements.end() || *it != h)
        throw Error("NotInSubgroup", "element outside the acting subgroup");
    return static_cast<int>(it - sub.elements.begin());
}

// canonical label of the H-conjugacy class of k <= h
std::vector<int> conj_class_key(const Subgroup& h, const Subgroup& k) {
    std::vector<int> best = k.elements;
    for (int g : h.elements) {
        auto c = conjugate_subgroup(k, g).elements;
        if (c < best) best = c;
    }
    return best;
}

}  // namespace

int Exponent::act(int h, int p) const { return action[index_in_sub(sub, h)][p]; }

Exponent exponent_from_action(Subgroup sub, int size, std::vector<std::vector<int>> action) {
    if (static_cast<int>(action.size()) != sub.order())
        throw Error("NotAnAction", "row count != subgroup order");
    for (const auto& row : action) {
        if (static_cast<int>(row.size()) != size) throw Error("NotAnAction", "bad row length");
        std::vector<char> hit(size, 0);
        for (int v : row) {
            if (v < 0 || v >= size || hit[v]) throw Error("NotAnAction", "row not a permutation");
            hit[v] = 1;
        }
    }
    Exponent e{std::move(sub), size, std::move(action)};
    const auto& g = e.sub.group;
    for (int p = 0; p < size; ++p)
        if (e.act(FiniteGroup::kIdentity, p) != p)
            throw Error("NotAnAction", "identity must act trivially");
    for (int a : e.sub.elements)
        for (int b : e.sub.elements)
            for (int p = 0; p < size; ++p)
                if (e.act(g->op(a, b), p) != e.act(a, e.act(b, p)))
                    throw Error("NotAnAction", "action law fails");
    return e;
}

Exponent trivial_exponent(const Subgroup& sub, int size) {
    std::vector<int> row(size);
    for (int i = 0; i < size; ++i) row[i] = i;
    return Exponent{sub, size, std::vector<std::vector<int>>(sub.order(), row)};
}

Exponent coset_exponent(const Subgroup& h, const Subgroup& k) {
    if (!subgroup_leq(k, h)) throw Error("NotASubgroup", "k must lie in h");
    const auto& g = h.group;
    // left coset reps of k inside h, minimal-element reps in ascending order
    std::vector<int> reps;
    std::set<int> seen;
    for (int x : h.elements) {
        if (seen.count(x)) continue;
        reps.push_back(x);
        for (int w : k.elements) seen.insert(g->op(x, w));
    }
    const int n = static_cast<int>(reps.size());
    std::vector<std::vector<int>> action(h.order(), std::vector<int>(n));
    for (int a = 0; a < h.order(); ++a)
        for (int p = 0; p < n; ++p) {
            int y = g->op(h.elements[a], reps[p]);
            for (int q = 0; q < n; ++q)
                if (k.contains(g->op(g->inv(reps[q]), y))) {
                    action[a][p] = q;
                    break;
                }
        }
    return Exponent{h, n, std::move(action)};
}

Exponent exponent_sum(const Exponent& a, const Exponent& b) {
    if (!(a.sub == b.sub)) throw Error("NotAnAction", "summands over different subgroups");
    Exponent e{a.sub, a.size + b.size, {}};
    e.action.resize(a.sub.order());
    for (int k = 0; k < a.sub.order(); ++k) {
        e.action[k] = a.action[k];
        for (int p = 0; p < b.size; ++p) e.action[k].push_back(a.size + b.action[k][p]);
    }
    return e;
}

Exponent reorder_exponent(const Exponent& e, const Perm& order) {
    if (order.degree() != e.size) throw Error("NotAnAction", "reorder degree mismatch");
    Exponent out{e.sub, e.size, e.action};
    auto inv = order.inverse();
    for (int k = 0; k < e.sub.order(); ++k)
        for (int p = 0; p < e.size; ++p) out.action[k][p] = inv(e.action[k][order(p)]);
    return out;
}

Exponent restrict_exponent(const Exponent& e, const Subgroup& l) {
    if (!subgroup_leq(l, e.sub)) throw Error("NotASubgroup", "l must lie in the acting subgroup");
    Exponent out{l, e.size, {}};
    for (int x : l.elements) out.action.push_back(e.action[index_in_sub(e.sub, x)]);
    return out;
}

const Perm& GraphSubgroup::sigma_of(int h) const { return sigma[index_in_sub(sub, h)]; }

GraphSubgroup graph_subgroup(const Exponent& e) {
    GraphSubgroup g{e.sub, e.size, {}};
    for (const auto& row : e.action) g.sigma.push_back(Perm{row});
    return g;
}

std::vector<Orbit> orbit_decompose(const Exponent& e) {
    std::vector<Orbit> out;
    std::vector<char> seen(e.size, 0);
    for (int p = 0; p < e.size; ++p) {
        if (seen[p]) continue;
        Orbit orb;
        std::vector<int> stab_els;
        for (int k = 0; k < e.sub.order(); ++k) {
            int q = e.action[k][p];
            if (!seen[q]) {
                seen[q] = 1;
                orb.points.push_back(q);
            }
            if (q == p) stab_els.push_back(e.sub.elements[k]);
        }
        std::sort(orb.points.begin(), orb.points.end());
        orb.stabilizer = subgroup_from_elements(e.sub.group, std::move(stab_els));
        out.push_back(std::move(orb));
    }
    return out;
}

bool gsets_isomorphic(const Exponent& a, const Exponent& b) {
    if (!(a.sub == b.sub) || a.size != b.size) return false;
    auto key = [](const Exponent& e) {
        std::multiset<std::vector<int>> k;
        for (const auto& orb : orbit_decompose(e)) k.insert(conj_class_key(e.sub, orb.stabilizer));
        return k;
    };
    return key(a) == key(b);
}

std::vector<Exponent> enumerate_hsets_up_to_iso(const Subgroup& h, int n) {
    // subgroup-conjugacy classes in h, as (class rep, orbit size = index)
    std::vector<Subgroup> reps;
    {
        std::set<std::vector<int>> keys;
        for (const auto& k : enumerate_subgroups(h.group)) {
            if (!subgroup_leq(k, h)) continue;
            auto key = conj_class_key(h, k);
            if (keys.insert(key).second) reps.push_back(subgroup_from_elements(h.group, key));
        }
    }
    std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() > b.order();  // smaller orbits first
        return a.elements < b.elements;
    });
    std::vector<Exponent> out;
    std::vector<int> pick;  // indices into reps, non-decreasing
    auto emit = [&]() {
        Exponent e = trivial_exponent(h, 0);
        for (int i : pick) e = exponent_sum(e, coset_exponent(h, reps[i]));
        out.push_back(std::move(e));
    };
    std::function<void(int, int)> go = [&](int from, int left) {
        if (left == 0) {
            emit();
            return;
        }
        for (int i = from; i < static_cast<int>(reps.size()); ++i) {
            int sz = h.order() / reps[i].order();
            if (sz > left) continue;
            pick.push_back(i);
            go(i, left - sz);
            pick.pop_back();
        }
    };
    go(0, n);
    return out;
}

}  // namespace operadkit
