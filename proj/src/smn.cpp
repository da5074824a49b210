#include "operadkit/smn.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

namespace operadkit {

namespace {

const Label kOx{LabelKind::Ox, -1, -1};
const Label kE{LabelKind::E, -1, -1};

bool is_e_corolla(const TreePtr& t) { return !t->leaf && t->label.kind == LabelKind::E; }
bool is_ox(const TreePtr& t) { return !t->leaf && t->label.kind == LabelKind::Ox; }

TreePtr subtree_at(const TreePtr& x, const std::vector<int>& pos) {
    TreePtr cur = x;
    for (int c : pos) {
        if (cur->leaf || c < 0 || c >= static_cast<int>(cur->children.size()))
            throw Error("NotApplicable", "bad position");
        cur = cur->children[c];
    }
    return cur;
}

TreePtr replace_at(const TreePtr& x, const std::vector<int>& pos, size_t i, const TreePtr& sub) {
    if (i == pos.size()) return sub;
    auto ch = x->children;
    ch[pos[i]] = replace_at(ch[pos[i]], pos, i + 1, sub);
    return make_vertex(x->label, std::move(ch));
}

// renumber free leaves 1..n in planar preorder; marker leaves (number <= 0)
// become the slot; returns (tree, 1-based slot of the marker or -1)
std::pair<TreePtr, int> renumber_preorder(const TreePtr& t) {
    int next = 0, slot = -1;
    std::function<TreePtr(const TreePtr&)> go = [&](const TreePtr& u) -> TreePtr {
        if (u->leaf) {
            ++next;
            if (u->number <= 0) slot = next;
            return make_leaf(next);
        }
        std::vector<TreePtr> ch;
        ch.reserve(u->children.size());
        for (const auto& c : u->children) ch.push_back(go(c));
        return make_vertex(u->label, std::move(ch));
    };
    auto out = go(t);
    return {out, slot};
}

void collect_leaf_numbers(const TreePtr& t, std::vector<int>& out) {
    if (t->leaf) {
        out.push_back(t->number);
        return;
    }
    for (const auto& c : t->children) collect_leaf_numbers(c, out);
}

Irreducible inverse_irr(const Irreducible& irr) {
    switch (irr.kind) {
        case IrrKind::Id: return irr;
        case IrrKind::Alpha: return {IrrKind::AlphaInv, irr.norm_label};
        case IrrKind::AlphaInv: return {IrrKind::Alpha, irr.norm_label};
        case IrrKind::Lambda: return {IrrKind::LambdaInv, irr.norm_label};
        case IrrKind::LambdaInv: return {IrrKind::Lambda, irr.norm_label};
        case IrrKind::Rho: return {IrrKind::RhoInv, irr.norm_label};
        case IrrKind::RhoInv: return {IrrKind::Rho, irr.norm_label};
        case IrrKind::Beta: return irr;  // the reverse direction is again a beta edge
        case IrrKind::Ups: return {IrrKind::UpsInv, irr.norm_label};
        case IrrKind::UpsInv: return {IrrKind::Ups, irr.norm_label};
    }
    return irr;
}

// the surrounding subtrees w_1..w_k when the pattern matches at u
std::optional<std::vector<TreePtr>> match_irr(const SNAlphabet& a, const Irreducible& irr,
                                              const TreePtr& u) {
    switch (irr.kind) {
        case IrrKind::Id:
        case IrrKind::LambdaInv:
        case IrrKind::RhoInv:
            return std::vector<TreePtr>{u};
        case IrrKind::Alpha:
            if (is_ox(u) && is_ox(u->children[0]))
                return std::vector<TreePtr>{u->children[0]->children[0],
                                            u->children[0]->children[1], u->children[1]};
            return std::nullopt;
        case IrrKind::AlphaInv:
            if (is_ox(u) && is_ox(u->children[1]))
                return std::vector<TreePtr>{u->children[0], u->children[1]->children[0],
                                            u->children[1]->children[1]};
            return std::nullopt;
        case IrrKind::Lambda:
            if (is_ox(u) && is_e_corolla(u->children[0]))
                return std::vector<TreePtr>{u->children[1]};
            return std::nullopt;
        case IrrKind::Rho:
            if (is_ox(u) && is_e_corolla(u->children[1]))
                return std::vector<TreePtr>{u->children[0]};
            return std::nullopt;
        case IrrKind::Beta:
            if (is_ox(u)) return std::vector<TreePtr>{u->children[0], u->children[1]};
            return std::nullopt;
        case IrrKind::Ups:
            if (!u->leaf && u->label == irr.norm_label) return u->children;
            return std::nullopt;
        case IrrKind::UpsInv: {
            const int k = a.norms[irr.norm_label.norm].t.size;
            if (k == 0) {
                if (is_e_corolla(u)) return std::vector<TreePtr>{};
                return std::nullopt;
            }
            std::vector<TreePtr> w(k);
            TreePtr cur = u;
            for (int j = k; j >= 2; --j) {
                if (!is_ox(cur)) return std::nullopt;
                w[j - 1] = cur->children[1];
                cur = cur->children[0];
            }
            w[0] = cur;
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

TreePtr standard_tensor_tree(const SNAlphabet& a, int n) {
    if (n == 0) return corolla(a, kE);
    TreePtr t = make_leaf(1);
    for (int i = 2; i <= n; ++i) t = make_vertex(kOx, {t, make_leaf(i)});
    return t;
}

TreePtr reduced_tree(const SNAlphabet& a, const TreePtr& t) {
    if (t->leaf) return t;
    std::vector<TreePtr> ch;
    ch.reserve(t->children.size());
    for (const auto& c : t->children) ch.push_back(reduced_tree(a, c));
    if (t->label.kind != LabelKind::Norm) return make_vertex(t->label, std::move(ch));
    // splice the children under a left comb, keeping their leaf numbers
    const int k = static_cast<int>(ch.size());
    if (k == 0) return corolla(a, kE);
    TreePtr out = ch[0];
    for (int i = 1; i < k; ++i) out = make_vertex(kOx, {out, ch[i]});
    return out;
}

std::pair<TreePtr, TreePtr> irreducible_endpoints(const SNAlphabet& a, const Irreducible& irr) {
    auto ox = corolla(a, kOx);
    auto e = corolla(a, kE);
    auto one = make_leaf(1);
    switch (irr.kind) {
        case IrrKind::Id: return {one, one};
        case IrrKind::Alpha:
            return {gamma_compose(ox, {ox, one}), gamma_compose(ox, {one, ox})};
        case IrrKind::AlphaInv:
            return {gamma_compose(ox, {one, ox}), gamma_compose(ox, {ox, one})};
        case IrrKind::Lambda: return {gamma_compose(ox, {e, one}), one};
        case IrrKind::LambdaInv: return {one, gamma_compose(ox, {e, one})};
        case IrrKind::Rho: return {gamma_compose(ox, {one, e}), one};
        case IrrKind::RhoInv: return {one, gamma_compose(ox, {one, e})};
        case IrrKind::Beta: return {ox, sigma_act(Perm{{1, 0}}, ox)};
        case IrrKind::Ups:
            return {corolla(a, irr.norm_label),
                    standard_tensor_tree(a, a.norms[irr.norm_label.norm].t.size)};
        case IrrKind::UpsInv:
            return {standard_tensor_tree(a, a.norms[irr.norm_label.norm].t.size),
                    corolla(a, irr.norm_label)};
    }
    throw Error("Internal", "unreachable");
}

BasicEdge make_basic_edge(const SNAlphabet& a, const TreePtr& x, const std::vector<int>& pos,
                          const Irreducible& irr) {
    auto u = subtree_at(x, pos);
    auto w = match_irr(a, irr, u);
    if (!w) throw Error("NotApplicable", "pattern does not match at position");
    auto [irr_src, irr_tgt] = irreducible_endpoints(a, irr);

    BasicEdge e;
    e.irr = irr;
    e.irr_src = irr_src;
    e.irr_tgt = irr_tgt;
    e.position = pos;
    for (const auto& wi : *w) e.surroundings.push_back(renumber_preorder(wi).first);
    auto [s, slot] = renumber_preorder(replace_at(x, pos, 0, make_leaf(-1)));
    e.context = s;
    e.slot = slot;

    auto assemble = [&](const TreePtr& piece) {
        std::vector<TreePtr> us(tree_arity(s), make_leaf(1));
        us[slot - 1] = gamma_compose(piece, e.surroundings);
        return gamma_compose(s, us);
    };
    auto composite = assemble(irr_src);
    std::vector<int> cn, xn;
    collect_leaf_numbers(composite, cn);
    collect_leaf_numbers(x, xn);
    if (cn.size() != xn.size()) throw Error("Internal", "edge assembly arity mismatch");
    Perm sigma = Perm::identity(static_cast<int>(cn.size()));
    for (size_t i = 0; i < cn.size(); ++i) sigma.img[cn[i] - 1] = xn[i] - 1;
    e.outer = sigma;
    e.src = sigma_act(sigma, composite);
    if (!tree_equal(e.src, x)) throw Error("Internal", "edge source mismatch");
    e.tgt = sigma_act(sigma, assemble(irr_tgt));
    return e;
}

BasicEdge flip_edge(const SNAlphabet& a, const BasicEdge& e) {
    auto f = make_basic_edge(a, e.tgt, e.position, inverse_irr(e.irr));
    if (!tree_equal(f.tgt, e.src)) throw Error("Internal", "edge flip mismatch");
    return f;
}

CoherencePath compose_paths(const CoherencePath& p, const CoherencePath& q) {
    if (!tree_equal(p.tgt, q.src)) throw Error("NotComposable", "path endpoints disagree");
    CoherencePath out{p.src, q.tgt, p.edges};
    out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
    return out;
}

CoherencePath reverse_path(const SNAlphabet& a, const CoherencePath& p) {
    CoherencePath out{p.tgt, p.src, {}};
    for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it)
        out.edges.push_back(flip_edge(a, *it));
    return out;
}

namespace {

// first position in breadth-first order whose subtree satisfies pred
std::optional<std::vector<int>> bfs_find(const TreePtr& t,
                                         const std::function<bool(const TreePtr&)>& pred) {
    std::deque<std::pair<TreePtr, std::vector<int>>> q{{t, {}}};
    while (!q.empty()) {
        auto [u, pos] = q.front();
        q.pop_front();
        if (pred(u)) return pos;
        if (!u->leaf)
            for (int i = 0; i < static_cast<int>(u->children.size()); ++i) {
                auto p2 = pos;
                p2.push_back(i);
                q.push_back({u->children[i], p2});
            }
    }
    return std::nullopt;
}

}  // namespace

CoherencePath upsilon_directed_path(const SNAlphabet& a, const TreePtr& t) {
    CoherencePath path{t, t, {}};
    TreePtr cur = t;
    auto step = [&](const std::vector<int>& pos, const Irreducible& irr) {
        auto e = make_basic_edge(a, cur, pos, irr);
        cur = e.tgt;
        path.edges.push_back(std::move(e));
    };
    // untwistor phase: one step per norm vertex, outermost/leftmost first
    while (true) {
        auto pos = bfs_find(cur, [](const TreePtr& u) {
            return !u->leaf && u->label.kind == LabelKind::Norm;
        });
        if (!pos) break;
        step(*pos, Irreducible{IrrKind::Ups, subtree_at(cur, *pos)->label});
    }
    // unit elimination
    while (true) {
        auto lpos = bfs_find(cur, [](const TreePtr& u) { return is_ox(u) && is_e_corolla(u->children[0]); });
        if (lpos) {
            step(*lpos, Irreducible{IrrKind::Lambda, {}});
            continue;
        }
        auto rpos = bfs_find(cur, [](const TreePtr& u) { return is_ox(u) && is_e_corolla(u->children[1]); });
        if (rpos) {
            step(*rpos, Irreducible{IrrKind::Rho, {}});
            continue;
        }
        break;
    }
    // left combing
    while (true) {
        auto pos = bfs_find(cur, [](const TreePtr& u) { return is_ox(u) && is_ox(u->children[1]); });
        if (!pos) break;
        step(*pos, Irreducible{IrrKind::AlphaInv, {}});
    }
    // adjacent-transposition sort of the comb's leaf numbers
    const int n = tree_arity(t);
    while (true) {
        std::vector<int> nums;
        collect_leaf_numbers(cur, nums);
        int j = -1;  // first planar inversion, 1-based
        for (int i = 0; i + 1 < n; ++i)
            if (nums[i] > nums[i + 1]) {
                j = i + 1;
                break;
            }
        if (j < 0) break;
        if (j == 1) {
            step(std::vector<int>(n - 2, 0), Irreducible{IrrKind::Beta, {}});
        } else {
            std::vector<int> posA(n - j - 1, 0);
            step(posA, Irreducible{IrrKind::Alpha, {}});
            auto posB = posA;
            posB.push_back(1);
            step(posB, Irreducible{IrrKind::Beta, {}});
            step(posA, Irreducible{IrrKind::AlphaInv, {}});
        }
    }
    if (!tree_equal(cur, standard_tensor_tree(a, n)))
        throw Error("Internal", "normalization did not reach the standard comb");
    path.tgt = cur;
    return path;
}

CoherencePath canonical_path(const SNAlphabet& a, const TreePtr& t, const TreePtr& u) {
    if (tree_arity(t) != tree_arity(u)) throw Error("ArityMismatch", "parallel trees required");
    auto down = upsilon_directed_path(a, t);
    auto up = reverse_path(a, upsilon_directed_path(a, u));
    return compose_paths(down, up);
}

std::vector<BasicEdge> basic_edges_from(const SNAlphabet& a, const TreePtr& x, int max_depth) {
    std::vector<Irreducible> kinds = {
        {IrrKind::Alpha, {}}, {IrrKind::AlphaInv, {}}, {IrrKind::Lambda, {}},
        {IrrKind::LambdaInv, {}}, {IrrKind::Rho, {}},  {IrrKind::RhoInv, {}},
        {IrrKind::Beta, {}},
    };
    for (int i = 0; i < static_cast<int>(a.norms.size()); ++i)
        for (int c = 0; c < static_cast<int>(a.norms[i].coset_reps.size()); ++c) {
            kinds.push_back({IrrKind::Ups, Label{LabelKind::Norm, i, c}});
            kinds.push_back({IrrKind::UpsInv, Label{LabelKind::Norm, i, c}});
        }
    std::vector<std::vector<int>> positions;
    std::function<void(const TreePtr&, std::vector<int>&)> walk = [&](const TreePtr& u,
                                                                      std::vector<int>& pos) {
        positions.push_back(pos);
        if (u->leaf) return;
        for (int i = 0; i < static_cast<int>(u->children.size()); ++i) {
            pos.push_back(i);
            walk(u->children[i], pos);
            pos.pop_back();
        }
    };
    std::vector<int> root;
    walk(x, root);
    std::vector<BasicEdge> out;
    for (const auto& pos : positions) {
        auto u = subtree_at(x, pos);
        for (const auto& irr : kinds) {
            if (!match_irr(a, irr, u)) continue;
            auto e = make_basic_edge(a, x, pos, irr);
            if (tree_depth(e.tgt) <= max_depth) out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace operadkit
