// Python bindings: thin text-format wrappers over the core operations. All
// structured inputs and outputs use the same serialized formats as the CLI
// (group / gset / tree / nsmc), so results round-trip between the two.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "operadkit/fixtures.hpp"
#include "operadkit/funtg.hpp"
#include "operadkit/io.hpp"
#include "operadkit/zoo.hpp"

namespace py = pybind11;
using namespace operadkit;

namespace {

std::vector<Exponent> gsets_of(const GroupPtr& g, const std::vector<std::string>& texts) {
    std::vector<Exponent> out;
    for (const auto& t : texts) out.push_back(parse_gset(g, t));
    return out;
}

Subgroup sub_of(const GroupPtr& g, const std::vector<int>& elements) {
    return subgroup_from_elements(g, elements);
}

SMCData base_of(const std::string& name) {
    if (name == "discrete-z2") return smc_discrete_z2();
    if (name == "chaotic-z2") return smc_chaotic_z2();
    throw Error("Usage", "unknown base category: " + name);
}

using PairList = std::vector<std::pair<std::vector<int>, std::vector<int>>>;

PairList pairs_of(const IndexingSystem& s) {
    PairList out;
    for (const auto& [h, k] : s.pairs)
        out.push_back({s.lat->subs[h].elements, s.lat->subs[k].elements});
    return out;
}

py::tuple report_tuple(const Report& r) { return py::make_tuple(r.ok(), r.text()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "combinatorics of normed symmetric monoidal categories over a finite group";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    // groups and subgroups
    m.def("cyclic_group", [](int n) { return format_group(cyclic_group(n)); },
          "Multiplication-table text of the cyclic group of order n.");
    m.def("symmetric_group", [](int n) { return format_group(symmetric_group(n)); },
          "Multiplication-table text of the symmetric group on n letters.");
    m.def("group_order", [](const std::string& g) { return parse_group(g)->order(); });
    m.def("subgroups", [](const std::string& g) {
        std::vector<std::vector<int>> out;
        for (const auto& s : enumerate_subgroups(parse_group(g))) out.push_back(s.elements);
        return out;
    });

    // G-sets
    m.def("coset_gset",
          [](const std::string& g, const std::vector<int>& h, const std::vector<int>& k) {
              auto gp = parse_group(g);
              return format_gset(coset_exponent(sub_of(gp, h), sub_of(gp, k)));
          },
          "Text of the H-set H/K.", py::arg("group"), py::arg("h"), py::arg("k"));
    m.def("trivial_gset", [](const std::string& g, const std::vector<int>& h, int n) {
        return format_gset(trivial_exponent(sub_of(parse_group(g), h), n));
    });
    m.def("sum_gsets", [](const std::string& g, const std::string& a, const std::string& b) {
        auto gp = parse_group(g);
        return format_gset(exponent_sum(parse_gset(gp, a), parse_gset(gp, b)));
    });

    // indexing systems
    m.def("generate_indexing",
          [](const std::string& g, const std::vector<std::string>& gsets) {
              auto gp = parse_group(g);
              return pairs_of(generate_indexing(build_subgroup_lattice(gp), gsets_of(gp, gsets)));
          },
          "Admissible (H, K) pairs of the least indexing system containing the G-sets.");
    m.def("indexing_meet", [](const std::string& g, const std::vector<std::string>& l,
                              const std::vector<std::string>& r) {
        auto gp = parse_group(g);
        auto lat = build_subgroup_lattice(gp);
        return pairs_of(indexing_meet(generate_indexing(lat, gsets_of(gp, l)),
                                      generate_indexing(lat, gsets_of(gp, r))));
    });
    m.def("indexing_join", [](const std::string& g, const std::vector<std::string>& l,
                              const std::vector<std::string>& r) {
        auto gp = parse_group(g);
        auto lat = build_subgroup_lattice(gp);
        return pairs_of(indexing_join(generate_indexing(lat, gsets_of(gp, l)),
                                      generate_indexing(lat, gsets_of(gp, r))));
    });
    m.def("indexing_systems", [](const std::string& g) {
        std::vector<PairList> out;
        for (const auto& s :
             enumerate_indexing_systems(build_subgroup_lattice(parse_group(g))).systems)
            out.push_back(pairs_of(s));
        return out;
    });

    // trees and coherence paths over the free norm-extended operad
    m.def("normalize_tree",
          [](const std::string& g, const std::vector<std::string>& gsets,
             const std::string& tree) {
              auto gp = parse_group(g);
              auto a = build_sn_alphabet(gp, gsets_of(gp, gsets));
              return format_tree(parse_tree(a, tree));
          },
          "Parse, validate and re-serialize a labeled tree.");
    m.def("tree_arity", [](const std::string& g, const std::vector<std::string>& gsets,
                           const std::string& tree) {
        auto gp = parse_group(g);
        return tree_arity(parse_tree(build_sn_alphabet(gp, gsets_of(gp, gsets)), tree));
    });
    m.def("canonical_path_length",
          [](const std::string& g, const std::vector<std::string>& gsets,
             const std::string& from, const std::string& to) {
              auto gp = parse_group(g);
              auto a = build_sn_alphabet(gp, gsets_of(gp, gsets));
              return static_cast<int>(
                  canonical_path(a, parse_tree(a, from), parse_tree(a, to)).edges.size());
          },
          "Number of basic edges on the canonical coherence path between two trees.");

    // normed symmetric monoidal data
    m.def("validate_nsmc",
          [](const std::string& text) { return report_tuple(validate_nsmc(parse_nsmc(text))); },
          "Run every structural check on serialized normed data; returns (ok, report).");
    m.def("roundtrip_algebra", [](const std::string& text) {
        return report_tuple(roundtrip_algebra(parse_nsmc(text)));
    });
    m.def("coherence_instance",
          [](const std::string& text, int arity, int depth, int length) {
              return report_tuple(
                  verify_coherence_instance(parse_nsmc(text), arity, depth, length));
          },
          py::arg("nsmc"), py::arg("arity") = 2, py::arg("depth") = 2, py::arg("length") = 3);

    // functor categories and norms
    m.def("funtg_nsmc",
          [](const std::string& g, const std::string& base,
             const std::vector<std::string>& gsets) {
              auto gp = parse_group(g);
              return format_nsmc(funtg_nsmc(base_of(base), gp, gsets_of(gp, gsets)));
          },
          "Serialized normed structure on Fun(TG, C) with one norm per G-set.");
    m.def("verify_fixed_points", [](const std::string& g, const std::string& base,
                                    const std::vector<int>& h) {
        auto gp = parse_group(g);
        return report_tuple(
            verify_fixed_point_theorems(fixed_point_functors(base_of(base).c, gp, sub_of(gp, h))));
    });
    m.def("verify_norms", [](const std::string& g, const std::string& base,
                             const std::vector<int>& h, const std::vector<int>& k) {
        auto gp = parse_group(g);
        return report_tuple(verify_norm_theorems(base_of(base), gp, sub_of(gp, h), sub_of(gp, k)));
    });
    m.def("compare_norm_routes", [](const std::string& g, const std::string& base,
                                    const std::string& gset) {
        auto gp = parse_group(g);
        return report_tuple(compare_norm_routes(base_of(base), gp, parse_gset(gp, gset)));
    });

    // operad comparisons and change of norms
    m.def("comparison_maps",
          [](const std::string& g, int max_level, int max_depth) {
              return report_tuple(comparison_maps(parse_group(g), max_level, max_depth));
          },
          py::arg("group"), py::arg("max_level") = 3, py::arg("max_depth") = 2);
    m.def("lattice_check", [](const std::string& g, const std::vector<std::string>& l,
                              const std::vector<std::string>& r) {
        auto gp = parse_group(g);
        return report_tuple(lattice_check(gp, gsets_of(gp, l), gsets_of(gp, r)));
    });
    m.def("suboperad_poset", [](const std::string& g) {
        return report_tuple(suboperad_poset_check(parse_group(g)));
    });
    m.def("change_norms", [](const std::string& nsmc, const std::vector<std::string>& gsets) {
        auto d = parse_nsmc(nsmc);
        return report_tuple(change_of_norms(d, gsets_of(d.c.group, gsets)));
    });
}
