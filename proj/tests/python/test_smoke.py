import pytest

import operadkit as ok


def regular(group):
    order = ok.group_order(group)
    return ok.coset_gset(group, list(range(order)), [0])


def test_groups_and_subgroups():
    c2 = ok.cyclic_group(2)
    assert ok.group_order(c2) == 2
    assert ok.subgroups(c2) == [[0], [0, 1]]
    assert ok.group_order(ok.symmetric_group(3)) == 6


def test_indexing_systems():
    c2 = ok.cyclic_group(2)
    assert len(ok.indexing_systems(c2)) == 2
    assert len(ok.indexing_systems(ok.cyclic_group(4))) == 5
    sys = ok.generate_indexing(c2, [regular(c2)])
    assert ([0, 1], [0]) in [tuple(p) for p in sys]
    c4 = ok.cyclic_group(4)
    left = ok.coset_gset(c4, [0, 2], [0])
    right = ok.coset_gset(c4, [0, 1, 2, 3], [0, 2])
    meet = ok.indexing_meet(c4, [left], [right])
    join = ok.indexing_join(c4, [left], [right])
    assert set(map(tuple, (tuple(h) for h, _ in meet))) <= set(
        tuple(h) for h, _ in join
    )
    assert len(meet) <= len(join)


def test_trees_and_paths():
    c2 = ok.cyclic_group(2)
    reg = regular(c2)
    assert ok.normalize_tree(c2, [reg], "(ox (ox 1 2) 3)") == "(ox (ox 1 2) 3)"
    assert ok.tree_arity(c2, [reg], "(oxT:0:0 2 1)") == 2
    assert ok.canonical_path_length(c2, [reg], "(oxT:0:0 1 2)", "(ox 1 2)") == 1
    with pytest.raises(ValueError):
        ok.normalize_tree(c2, [reg], "(ox 1 1)")


def test_nsmc_roundtrip_and_validation():
    c2 = ok.cyclic_group(2)
    text = ok.funtg_nsmc(c2, "chaotic-z2", [regular(c2)])
    passed, report = ok.validate_nsmc(text)
    assert passed and "CHECK" in report
    passed, _ = ok.roundtrip_algebra(text)
    assert passed
    passed, _ = ok.coherence_instance(text, arity=2, depth=2, length=3)
    assert passed
    with pytest.raises(ValueError):
        ok.validate_nsmc("not an nsmc")


def test_funtg_theorems():
    c2 = ok.cyclic_group(2)
    passed, _ = ok.verify_fixed_points(c2, "discrete-z2", [0, 1])
    assert passed
    passed, _ = ok.verify_norms(c2, "chaotic-z2", [0, 1], [0])
    assert passed
    passed, _ = ok.compare_norm_routes(c2, "chaotic-z2", regular(c2))
    assert passed


def test_zoo_reports():
    c2 = ok.cyclic_group(2)
    passed, report = ok.comparison_maps(c2)
    assert passed and "diagonal-square" in report
    passed, _ = ok.lattice_check(c2, [regular(c2)], [regular(c2)])
    assert passed
    passed, _ = ok.suboperad_poset(c2)
    assert passed
    text = ok.funtg_nsmc(c2, "discrete-z2", [regular(c2)])
    double = ok.sum_gsets(c2, regular(c2), regular(c2))
    passed, _ = ok.change_norms(text, [double])
    assert passed
    with pytest.raises(ValueError):
        ok.change_norms(ok.funtg_nsmc(c2, "discrete-z2", []), [regular(c2)])
