import pytest

from xratio.fields import XratioError, field_by_name, prime_field
from xratio.projline import (BruteForceBudgetError, Moebius, ProjPoint1,
                             borel_elements, borel_stabilizer, p1_points,
                             pgl2_elements, pgl2_stabilizer)


def pts(field, values):
    out = []
    for v in values:
        out.append(ProjPoint1.infinity(field) if v == "inf"
                   else ProjPoint1.affine(field, field.from_int(v)))
    return out


def test_point_construction_and_display():
    f5 = prime_field(5)
    assert str(ProjPoint1.affine(f5, f5.from_int(7))) == "2"
    assert str(ProjPoint1.infinity(f5)) == "inf"
    assert ProjPoint1.from_homogeneous(f5, f5.one, f5.zero) == \
        ProjPoint1.infinity(f5)
    assert ProjPoint1.from_homogeneous(f5, f5.from_int(3), f5.from_int(2)) == \
        ProjPoint1.affine(f5, f5.from_int(4))
    with pytest.raises(XratioError):
        ProjPoint1.from_homogeneous(f5, f5.zero, f5.zero)


def test_p1_has_q_plus_one_points():
    f3 = prime_field(3)
    assert [str(p) for p in p1_points(f3)] == ["0", "1", "2", "inf"]


def test_moebius_action():
    f7 = prime_field(7)
    swap = Moebius(f7, f7.zero, f7.one, f7.one, f7.zero)  # s -> 1/s
    assert swap.apply(ProjPoint1.affine(f7, f7.zero)) == ProjPoint1.infinity(f7)
    assert swap.apply(ProjPoint1.infinity(f7)) == ProjPoint1.affine(f7, f7.zero)
    assert swap.apply(ProjPoint1.affine(f7, f7.from_int(2))) == \
        ProjPoint1.affine(f7, f7.from_int(4))
    with pytest.raises(XratioError):
        Moebius(f7, f7.one, f7.one, f7.one, f7.one)


def test_group_element_counts():
    f5 = prime_field(5)
    assert len(list(borel_elements(f5))) == 5 * 4
    assert len(list(pgl2_elements(f5))) == 5 ** 3 - 5
    f7 = prime_field(7)
    assert len(list(pgl2_elements(f7))) == 336


def test_borel_stabilizer_frozen_cases_f101():
    f = prime_field(101)
    stab = borel_stabilizer(pts(f, (0, 1, 2, 3)), f)
    assert sorted(str(m) for m in stab) == ["s -> 100*s + 3", "s -> s"]
    generic = borel_stabilizer(pts(f, (0, 1, 2, 4)), f)
    assert len(generic) == 1 and generic[0].is_identity()
    stab_inf = borel_stabilizer(pts(f, (0, 1, 2, "inf")), f)
    assert sorted(str(m) for m in stab_inf) == ["s -> 100*s + 2", "s -> s"]


def test_borel_stabilizer_is_subgroup():
    f7 = prime_field(7)
    stab = borel_stabilizer(pts(f7, (0, 1, 2, 3)), f7)
    assert sorted(str(m) for m in stab) == ["s -> 6*s + 3", "s -> s"]
    strs = {str(m) for m in stab}
    for m1 in stab:
        for m2 in stab:
            assert str(m1 * m2) in strs


def test_borel_fast_path_matches_generic_enumeration():
    f13 = prime_field(13)
    fixtures = [(0, 1, 2, 3), (0, 2, 5, 11), (1, 4, 6, 12), (0, 3, 6, 9)]
    for raw in fixtures:
        sample = pts(f13, raw)
        fast = borel_stabilizer(sample, f13)
        names = {str(p) for p in sample}
        slow = [m for m in borel_elements(f13)
                if {str(m.apply(p)) for p in sample} == names]
        assert [str(m) for m in fast] == [str(m) for m in slow]
    mixed = pts(f13, (0, 1, 2, "inf"))
    assert any(not m.is_identity() for m in borel_stabilizer(mixed, f13))


def test_stabilizer_input_validation():
    f101 = prime_field(101)
    with pytest.raises(XratioError, match="distinct"):
        f2 = prime_field(2)
        borel_stabilizer(pts(f2, (0, 1, 2, 3)), f2)
    with pytest.raises(XratioError, match="4-set"):
        borel_stabilizer(pts(f101, (0, 1, 2)), f101)
    with pytest.raises(BruteForceBudgetError):
        f_big = field_by_name("F1009")
        borel_stabilizer(pts(f_big, (0, 1, 2, 3)), f_big)
    with pytest.raises(XratioError):
        borel_stabilizer(pts(prime_field(5), (0, 1, 2, 3)), prime_field(7))


def test_pgl2_stabilizer_five_sets():
    f7 = prime_field(7)
    stab = pgl2_stabilizer(pts(f7, (0, 1, 2, 3, "inf")), f7)
    assert len(stab) == 6
    assert "s -> 6*s + 3" in {str(m) for m in stab}
    sample = pts(f7, (0, 1, 2, 3, "inf"))
    names = {str(p) for p in sample}
    for m in stab:
        assert {str(m.apply(p)) for p in sample} == names
    f13 = prime_field(13)
    assert len(pgl2_stabilizer(pts(f13, (0, 1, 2, 4, 8)), f13)) == 4
    with pytest.raises(XratioError):
        f3 = prime_field(3)
        pgl2_stabilizer(pts(f3, (0, 1, 2, "inf", 4)), f3)
