from collections import Counter

import pytest

from xratio.fields import XratioError
from xratio.perms import (IDENTITY, Perm, all_perms, cyclic_order4_subgroups,
                          has_fixed_point, klein_group, klein_part, parse_perm,
                          splits, subgroup_conjugacy_classes, subgroup_str,
                          subgroups)


def test_parse_and_cycle_notation_round_trip():
    for text in ("id", "(1 2)", "(1 2 3 4)", "(1 2)(3 4)", "(1 3 2)"):
        assert str(parse_perm(text)) == text
    assert parse_perm("(2 1)") == parse_perm("(1 2)")
    assert parse_perm("id") == IDENTITY


def test_parse_rejects_garbage():
    with pytest.raises(XratioError):
        parse_perm("(1 2 5)")
    with pytest.raises(XratioError):
        parse_perm("(1 1)")
    with pytest.raises(XratioError):
        Perm((1, 1, 2, 3))


def test_composition_applies_right_factor_first():
    p = parse_perm("(1 2)")
    q = parse_perm("(2 3)")
    pq = p * q
    assert pq(2) == p(q(2)) == 3 == pq(2)
    assert pq(3) == p(2) == 1
    assert str(pq) == "(1 2 3)"
    assert str(q * p) == "(1 3 2)"


def test_inverse_and_order():
    c = parse_perm("(1 2 3 4)")
    assert c.order() == 4
    assert (c * c.inverse()).is_identity()
    assert c.inverse() == parse_perm("(1 4 3 2)")
    assert parse_perm("(1 2)(3 4)").order() == 2


def test_group_order_and_element_orders():
    perms = all_perms()
    assert len(perms) == 24
    assert Counter(p.order() for p in perms) == {1: 1, 2: 9, 3: 8, 4: 6}


def test_klein_group():
    v4 = klein_group()
    assert len(v4) == 4
    assert all((p * p).is_identity() for p in v4)
    assert all(p.conjugate(g) in v4 for p in v4 for g in all_perms())


def test_subgroup_census():
    subs = subgroups()
    assert len(subs) == 30
    assert Counter(len(s) for s in subs) == \
        {1: 1, 2: 9, 3: 4, 4: 7, 6: 4, 8: 3, 12: 1, 24: 1}
    assert len(subgroup_conjugacy_classes()) == 11
    for s in subs:
        assert all(p * q in s for p in s for q in s)


def test_cyclic_order4_subgroups():
    cyc = cyclic_order4_subgroups()
    assert len(cyc) == 3
    generators = {str(p) for s in cyc for p in s if p.order() == 4}
    assert generators == {"(1 2 3 4)", "(1 4 3 2)", "(1 3 2 4)", "(1 4 2 3)",
                          "(1 2 4 3)", "(1 3 4 2)"}
    for s in cyc:
        assert len(klein_part(s)) == 2


def test_split_witnesses():
    nonsplit = []
    for s in subgroups():
        did, comp = splits(s)
        if not did:
            assert comp is None
            nonsplit.append(s)
            continue
        kern = klein_part(s)
        assert len(comp & kern) == 1
        assert len(comp) * len(kern) == len(s)
        assert all(p * q in comp for p in comp for q in comp)
    assert sorted(map(subgroup_str, nonsplit)) == \
        sorted(map(subgroup_str, cyclic_order4_subgroups()))


def test_fixed_point_iff_trivial_klein_part():
    for s in subgroups():
        assert has_fixed_point(s) == (len(klein_part(s)) == 1)


def test_whole_group_and_trivial_group_edge_cases():
    subs = subgroups()
    whole = max(subs, key=len)
    assert len(whole) == 24
    assert splits(whole)[0]
    assert not has_fixed_point(whole)
    trivial = min(subs, key=len)
    assert trivial == frozenset({IDENTITY})
    assert splits(trivial)[0]
    assert has_fixed_point(trivial)


def test_subgroup_str_is_deterministic():
    s = frozenset({IDENTITY, parse_perm("(1 2)")})
    assert subgroup_str(s) == "{id, (1 2)}"
