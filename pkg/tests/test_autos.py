import pytest

from xratio.autos import (Automorphism, OrderBoundError, identity_automorphism,
                          moebius_automorphism, perm_automorphism)
from xratio.fields import XratioError, rationals
from xratio.perms import all_perms, parse_perm
from xratio.poly import Ring
from xratio.ratfunc import rf_eq, rvar, rvars


@pytest.fixture
def ring():
    return Ring(rationals(), ("x1", "x2", "x3", "x4"))


def test_requires_image_for_every_variable(ring):
    with pytest.raises(XratioError):
        Automorphism(ring, {"x1": rvar(ring, "x2")})


def test_perm_automorphism_moves_variables(ring):
    c = parse_perm("(1 2 3 4)")
    s = perm_automorphism(ring, c)
    assert rf_eq(s.apply(rvar(ring, "x1")), rvar(ring, "x2"))
    assert rf_eq(s.apply(rvar(ring, "x4")), rvar(ring, "x1"))
    x1, x2, _, _ = rvars(ring)
    assert rf_eq(s.apply(x1 / (x1 + x2)), x2 / (x2 + rvar(ring, "x3")))


def test_perm_automorphism_is_homomorphism(ring):
    p = parse_perm("(1 2)")
    q = parse_perm("(2 3 4)")
    f = (rvar(ring, "x1") + 2 * rvar(ring, "x3")) / rvar(ring, "x4")
    lhs = perm_automorphism(ring, p * q).apply(f)
    rhs = perm_automorphism(ring, p).apply(perm_automorphism(ring, q).apply(f))
    assert rf_eq(lhs, rhs)


def test_orders(ring):
    assert identity_automorphism(ring).order() == 1
    assert perm_automorphism(ring, parse_perm("(1 2 3 4)")).order() == 4
    assert perm_automorphism(ring, parse_perm("(1 2)")).order() == 2
    orders = {perm_automorphism(ring, p).order() for p in all_perms()}
    assert orders == {1, 2, 3, 4}


def test_order_bound_raises_for_shift():
    r = Ring(rationals(), ("u",))
    shift = Automorphism(r, {"u": rvar(r, "u") + 1})
    with pytest.raises(OrderBoundError):
        shift.order(bound=24)


def test_degenerate_map_fails_order_check():
    r = Ring(rationals(), ("u",))
    collapse = Automorphism(r, {"u": rvar(r, "u") * 0 + 1})
    with pytest.raises(OrderBoundError):
        collapse.order(bound=8)


def test_negate_invert_action():
    r = Ring(rationals(), ("b", "u"))
    b, u = rvars(r)
    s = Automorphism(r, {"b": -b, "u": -1 / u})
    assert s.order() == 2
    assert s.fixes(b * b)
    assert s.fixes(b * (u * u + 1) / (2 * u))
    assert s.fixes((u * u - 1) / (2 * u))
    assert not s.fixes(u)
    assert not s.fixes(b)


def test_moebius_composition_reverses_matrix_order():
    r = Ring(rationals(), ("u",))
    q = rationals()
    one, zero = q.one, q.from_int(0)
    two = q.from_int(2)
    m1 = moebius_automorphism(r, one, one, zero, one)    # u -> u + 1
    m2 = moebius_automorphism(r, two, zero, zero, one)   # u -> 2u
    u = rvar(r, "u")
    assert rf_eq((m1 * m2).apply(u), 2 * (u + 1))
    assert rf_eq((m2 * m1).apply(u), 2 * u + 1)


def test_apply_accepts_polynomials(ring):
    s = perm_automorphism(ring, parse_perm("(1 2)"))
    assert rf_eq(s.apply(ring.var("x1")), rvar(ring, "x2"))
