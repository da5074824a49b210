#include "operadkit/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace operadkit {

int SNAlphabet::arity(const Label& l) const {
    switch (l.kind) {
        case LabelKind::E: return 0;
        case LabelKind::Ox: return 2;
        case LabelKind::Norm: return norms[l.norm].t.size;
    }
    return 0;
}

std::pair<Label, Perm> SNAlphabet::g_act_on_label(int g, const Label& l) const {
    if (l.kind != LabelKind::Norm) return {l, Perm::identity(arity(l))};
    const NormInfo& ni = norms[l.norm];
    int gi = group->op(g, ni.coset_reps[l.coset]);
    auto [j, h] = coset_decompose(ni.gamma.sub, ni.coset_reps, gi);
    return {Label{LabelKind::Norm, l.norm, j}, ni.gamma.sigma_of(h).inverse()};
}

std::vector<Label> SNAlphabet::reps_of_arity(int n) const {
    std::vector<Label> out;
    if (n == 0) out.push_back(Label{LabelKind::E, -1, -1});
    if (n == 2) out.push_back(Label{LabelKind::Ox, -1, -1});
    for (int i = 0; i < static_cast<int>(norms.size()); ++i)
        if (norms[i].t.size == n)
            for (int c = 0; c < static_cast<int>(norms[i].coset_reps.size()); ++c)
                out.push_back(Label{LabelKind::Norm, i, c});
    return out;
}

SymSeq SNAlphabet::to_symseq(int max_n) const {
    SymSeq s{group, {}};
    for (int n = 0; n <= max_n; ++n) s.levels[n] = empty_level(group, n);
    {
        auto e0 = trivial_exponent(full_subgroup(group), 0);
        s.levels[0] = coset_level(group, graph_subgroup(e0));
        auto e2 = trivial_exponent(full_subgroup(group), 2);
        s.levels[2] = level_sum(s.levels[2], coset_level(group, graph_subgroup(e2)));
    }
    for (const auto& ni : norms)
        if (ni.t.size <= max_n)
            s.levels[ni.t.size] = level_sum(s.levels[ni.t.size], coset_level(group, ni.gamma));
    return s;
}

SNAlphabet build_sn_alphabet(const GroupPtr& g, const std::vector<Exponent>& norm_gens) {
    SNAlphabet a{g, {}};
    for (const auto& t : norm_gens) {
        NormInfo ni{t, graph_subgroup(t), left_coset_reps(t.sub)};
        a.norms.push_back(std::move(ni));
    }
    return a;
}

TreePtr make_leaf(int number) {
    auto t = std::make_shared<Tree>();
    t->leaf = true;
    t->number = number;
    return t;
}

TreePtr make_vertex(const Label& l, std::vector<TreePtr> children) {
    auto t = std::make_shared<Tree>();
    t->label = l;
    t->children = std::move(children);
    return t;
}

bool tree_equal(const TreePtr& a, const TreePtr& b) {
    if (a.get() == b.get()) return true;
    if (a->leaf != b->leaf) return false;
    if (a->leaf) return a->number == b->number;
    if (!(a->label == b->label) || a->children.size() != b->children.size()) return false;
    for (size_t i = 0; i < a->children.size(); ++i)
        if (!tree_equal(a->children[i], b->children[i])) return false;
    return true;
}

int tree_arity(const TreePtr& t) {
    if (t->leaf) return 1;
    int n = 0;
    for (const auto& c : t->children) n += tree_arity(c);
    return n;
}

int tree_depth(const TreePtr& t) {
    if (t->leaf) return 0;
    int d = 0;
    for (const auto& c : t->children) d = std::max(d, tree_depth(c));
    return 1 + d;
}

void validate_tree(const SNAlphabet& a, const TreePtr& t) {
    std::set<int> numbers;
    std::function<void(const TreePtr&)> go = [&](const TreePtr& u) {
        if (u->leaf) {
            if (!numbers.insert(u->number).second)
                throw Error("BadTree", "duplicate leaf number");
            return;
        }
        if (static_cast<int>(u->children.size()) != a.arity(u->label))
            throw Error("BadTree", "label arity mismatch");
        for (const auto& c : u->children) go(c);
    };
    go(t);
    int n = static_cast<int>(numbers.size());
    if (!numbers.empty() && (*numbers.begin() != 1 || *numbers.rbegin() != n))
        throw Error("BadTree", "leaf numbers must be 1..arity");
}

std::string canonical_form(const TreePtr& t) {
    if (t->leaf) return "L" + std::to_string(t->number);
    std::string s;
    switch (t->label.kind) {
        case LabelKind::E: s = "e"; break;
        case LabelKind::Ox: s = "x"; break;
        case LabelKind::Norm:
            s = "n" + std::to_string(t->label.norm) + "." + std::to_string(t->label.coset);
            break;
    }
    s += "(";
    for (size_t i = 0; i < t->children.size(); ++i) {
        if (i) s += ",";
        s += canonical_form(t->children[i]);
    }
    return s + ")";
}

TreePtr corolla(const SNAlphabet& a, const Label& l) {
    std::vector<TreePtr> ch;
    for (int i = 1; i <= a.arity(l); ++i) ch.push_back(make_leaf(i));
    return make_vertex(l, std::move(ch));
}

TreePtr sigma_act(const Perm& s, const TreePtr& t) {
    if (t->leaf) return make_leaf(s(t->number - 1) + 1);
    std::vector<TreePtr> ch;
    ch.reserve(t->children.size());
    for (const auto& c : t->children) ch.push_back(sigma_act(s, c));
    return make_vertex(t->label, std::move(ch));
}

namespace {
TreePtr substitute(const TreePtr& t, const std::vector<TreePtr>& repl) {
    if (t->leaf) return repl[t->number - 1];
    std::vector<TreePtr> ch;
    ch.reserve(t->children.size());
    for (const auto& c : t->children) ch.push_back(substitute(c, repl));
    return make_vertex(t->label, std::move(ch));
}

TreePtr shift_leaves(const TreePtr& t, int offset) {
    if (t->leaf) return make_leaf(t->number + offset);
    std::vector<TreePtr> ch;
    ch.reserve(t->children.size());
    for (const auto& c : t->children) ch.push_back(shift_leaves(c, offset));
    return make_vertex(t->label, std::move(ch));
}
}  // namespace

TreePtr gamma_compose(const TreePtr& t, const std::vector<TreePtr>& us) {
    const int n = tree_arity(t);
    if (static_cast<int>(us.size()) != n) throw Error("BadTree", "composition arity mismatch");
    std::vector<TreePtr> repl(n);
    int offset = 0;
    for (int i = 0; i < n; ++i) {
        repl[i] = shift_leaves(us[i], offset);
        offset += tree_arity(us[i]);
    }
    return substitute(t, repl);
}

TreePtr g_act(const SNAlphabet& a, int g, const TreePtr& t) {
    if (t->leaf) return t;
    auto [l2, tw] = a.g_act_on_label(g, t->label);
    const int k = static_cast<int>(t->children.size());
    std::vector<TreePtr> ch(k);
    for (int q = 0; q < k; ++q) ch[q] = g_act(a, g, t->children[tw(q)]);
    return make_vertex(l2, std::move(ch));
}

TreePtr act(const SNAlphabet& a, int g, const Perm& s, const TreePtr& t) {
    return sigma_act(s, g_act(a, g, t));
}

std::vector<TreePtr> enumerate_trees(const SNAlphabet& a, int arity, int max_depth,
                                     long long guard) {
    long long budget = guard;
    std::set<int> arity_set{0, 2};
    for (const auto& ni : a.norms) arity_set.insert(ni.t.size);
    std::map<std::pair<std::vector<int>, int>, std::vector<TreePtr>> cache;
    // trees whose free-leaf numbers are exactly `numbers`, depth <= d
    std::function<std::vector<TreePtr>(const std::vector<int>&, int)> go =
        [&](const std::vector<int>& numbers, int d) {
            auto key = std::make_pair(numbers, d);
            auto hit = cache.find(key);
            if (hit != cache.end()) return hit->second;
            std::vector<TreePtr> out;
            if (numbers.size() == 1) out.push_back(make_leaf(numbers[0]));
            if (d == 0) {
                cache[key] = out;
                return out;
            }
            for (int k : arity_set) {
                auto labels = a.reps_of_arity(k);
                if (labels.empty()) continue;
                // ordered partitions of `numbers` into k (possibly empty) blocks
                std::vector<std::vector<int>> blocks(k);
                std::function<void(size_t)> assign = [&](size_t i) {
                    if (i == numbers.size()) {
                        std::vector<std::vector<TreePtr>> per(k);
                        for (int b = 0; b < k; ++b) {
                            per[b] = go(blocks[b], d - 1);
                            if (per[b].empty()) return;
                        }
                        std::vector<int> pick(k, 0);
                        while (true) {
                            std::vector<TreePtr> ch(k);
                            for (int b = 0; b < k; ++b) ch[b] = per[b][pick[b]];
                            for (const auto& l : labels) {
                                if (--budget < 0) throw Error("TooLarge", "tree enumeration guard");
                                out.push_back(make_vertex(l, ch));
                            }
                            int b = k - 1;
                            while (b >= 0 && pick[b] + 1 == static_cast<int>(per[b].size()))
                                pick[b--] = 0;
                            if (b < 0) break;
                            ++pick[b];
                        }
                        return;
                    }
                    for (int b = 0; b < k; ++b) {
                        blocks[b].push_back(numbers[i]);
                        assign(i + 1);
                        blocks[b].pop_back();
                    }
                };
                if (k == 0) {
                    if (numbers.empty())
                        for (const auto& l : labels) {
                            if (--budget < 0) throw Error("TooLarge", "tree enumeration guard");
                            out.push_back(make_vertex(l, {}));
                        }
                } else {
                    assign(0);
                }
            }
            cache[key] = out;
            return out;
        };
    std::vector<int> numbers(arity);
    for (int i = 0; i < arity; ++i) numbers[i] = i + 1;
    return go(numbers, max_depth);
}

std::vector<std::pair<int, Perm>> tree_stabilizer(const SNAlphabet& a, const TreePtr& t) {
    std::vector<std::pair<int, Perm>> out;
    const int n = tree_arity(t);
    for (int g = 0; g < a.group->order(); ++g) {
        auto gt = g_act(a, g, t);
        for (const auto& s : all_perms(n))
            if (tree_equal(sigma_act(s, gt), t)) out.push_back({g, s});
    }
    return out;
}

bool tree_fixed_by(const SNAlphabet& a, const TreePtr& t, const GraphSubgroup& gamma) {
    for (int k = 0; k < gamma.sub.order(); ++k)
        if (!tree_equal(act(a, gamma.sub.elements[k], gamma.sigma[k], t), t)) return false;
    return true;
}

}  // namespace operadkit
