#include "operadkit/indexing.hpp"

#include <algorithm>

namespace operadkit {

int SubgroupLattice::index_of(const std::vector<int>& sorted_elements) const {
    for (int i = 0; i < static_cast<int>(subs.size()); ++i)
        if (subs[i].elements == sorted_elements) return i;
    throw Error("Internal", "subgroup not in lattice");
}

int SubgroupLattice::conjugate(int s, int g) const {
    return index_of(conjugate_subgroup(subs[s], g).elements);
}

int SubgroupLattice::intersect(int a, int b) const {
    return index_of(intersect_subgroups(subs[a], subs[b]).elements);
}

LatticePtr build_subgroup_lattice(const GroupPtr& g) {
    auto lat = std::make_shared<SubgroupLattice>();
    lat->group = g;
    lat->subs = enumerate_subgroups(g);
    return lat;
}

IndexingSystem trivial_indexing(const LatticePtr& lat) {
    IndexingSystem s{lat, {}};
    for (int h = 0; h < static_cast<int>(lat->subs.size()); ++h) s.pairs.insert({h, h});
    return s;
}

IndexingSystem complete_indexing(const LatticePtr& lat) {
    IndexingSystem s{lat, {}};
    for (int h = 0; h < static_cast<int>(lat->subs.size()); ++h)
        for (int k = 0; k < static_cast<int>(lat->subs.size()); ++k)
            if (lat->leq(k, h)) s.pairs.insert({h, k});
    return s;
}

namespace {

// pairs derived from (h, k) in one step of each axiom
std::vector<std::pair<int, int>> derived_pairs(const SubgroupLattice& lat, int h, int k) {
    std::vector<std::pair<int, int>> out;
    for (int g = 0; g < lat.group->order(); ++g)
        out.push_back({lat.conjugate(h, g), lat.conjugate(k, g)});
    auto hk = coset_exponent(lat.subs[h], lat.subs[k]);
    for (int l = 0; l < static_cast<int>(lat.subs.size()); ++l) {
        if (!lat.leq(l, h)) continue;
        for (const auto& orb : orbit_decompose(restrict_exponent(hk, lat.subs[l])))
            out.push_back({l, lat.index_of(orb.stabilizer)});
    }
    return out;
}

}  // namespace

bool indexing_is_closed(const IndexingSystem& s) {
    const auto& lat = *s.lat;
    for (int h = 0; h < static_cast<int>(lat.subs.size()); ++h)
        if (!s.admits(h, h)) return false;
    for (auto [h, k] : s.pairs) {
        if (!lat.leq(k, h)) return false;
        for (auto p : derived_pairs(lat, h, k))
            if (!s.pairs.count(p)) return false;
        for (auto [k2, j] : s.pairs)
            if (k2 == k && !s.admits(h, j)) return false;
    }
    return true;
}

IndexingSystem indexing_closure(IndexingSystem s) {
    const auto& lat = *s.lat;
    for (int h = 0; h < static_cast<int>(lat.subs.size()); ++h) s.pairs.insert({h, h});
    bool grew = true;
    while (grew) {
        grew = false;
        auto cur = s.pairs;
        for (auto [h, k] : cur) {
            for (auto p : derived_pairs(lat, h, k))
                if (s.pairs.insert(p).second) grew = true;
            for (auto [k2, j] : cur)
                if (k2 == k && s.pairs.insert({h, j}).second) grew = true;
        }
    }
    return s;
}

IndexingSystem generate_indexing(const LatticePtr& lat, const std::vector<Exponent>& gens) {
    IndexingSystem s = trivial_indexing(lat);
    for (const auto& e : gens) {
        int h = lat->index_of(e.sub);
        for (const auto& orb : orbit_decompose(e)) s.pairs.insert({h, lat->index_of(orb.stabilizer)});
    }
    return indexing_closure(std::move(s));
}

bool indexing_contains(const IndexingSystem& s, const Exponent& t) {
    int h = s.lat->index_of(t.sub);
    for (const auto& orb : orbit_decompose(t))
        if (!s.admits(h, s.lat->index_of(orb.stabilizer))) return false;
    return true;
}

bool indexing_leq(const IndexingSystem& a, const IndexingSystem& b) {
    return std::includes(b.pairs.begin(), b.pairs.end(), a.pairs.begin(), a.pairs.end());
}

IndexingSystem indexing_meet(const IndexingSystem& a, const IndexingSystem& b) {
    IndexingSystem s{a.lat, {}};
    std::set_intersection(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                          std::inserter(s.pairs, s.pairs.end()));
    return s;
}

IndexingSystem indexing_join(const IndexingSystem& a, const IndexingSystem& b) {
    IndexingSystem s{a.lat, a.pairs};
    s.pairs.insert(b.pairs.begin(), b.pairs.end());
    return indexing_closure(std::move(s));
}

IndexingLattice enumerate_indexing_systems(const LatticePtr& lat) {
    int candidates = 0;
    for (int h = 0; h < static_cast<int>(lat->subs.size()); ++h)
        for (int k = 0; k < static_cast<int>(lat->subs.size()); ++k)
            if (k != h && lat->leq(k, h)) ++candidates;
    if (candidates > 64) throw Error("TooLarge", "more than 64 candidate orbit pairs");

    std::vector<IndexingSystem> systems{trivial_indexing(lat)};
    auto all = complete_indexing(lat);
    for (size_t i = 0; i < systems.size(); ++i) {
        auto base = systems[i];  // copy: systems grows below
        for (auto p : all.pairs) {
            if (base.pairs.count(p)) continue;
            IndexingSystem next = base;
            next.pairs.insert(p);
            next = indexing_closure(std::move(next));
            if (std::find(systems.begin(), systems.end(), next) == systems.end())
                systems.push_back(std::move(next));
        }
    }
    std::sort(systems.begin(), systems.end(), [](const IndexingSystem& a, const IndexingSystem& b) {
        if (a.pairs.size() != b.pairs.size()) return a.pairs.size() < b.pairs.size();
        return a.pairs < b.pairs;
    });
    IndexingLattice out{std::move(systems), {}};
    const int n = static_cast<int>(out.systems.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !indexing_leq(out.systems[i], out.systems[j])) continue;
            bool cover = true;
            for (int m = 0; m < n && cover; ++m) {
                if (m == i || m == j) continue;
                if (indexing_leq(out.systems[i], out.systems[m]) &&
                    indexing_leq(out.systems[m], out.systems[j]))
                    cover = false;
            }
            if (cover) out.hasse.push_back({i, j});
        }
    return out;
}

}  // namespace operadkit
