import pytest

from xratio.fields import (FieldConstructionError, FieldMismatchError,
                           field_by_name, gaussian_rationals, prime_field,
                           prime_quadratic_field, rationals)

NAMES = ("Q", "Q(i)", "F2", "F3", "F5", "F7", "F101", "F3(i)", "F7(i)")


def test_every_supported_name_resolves():
    for name in NAMES:
        assert field_by_name(name).name == name


@pytest.mark.parametrize("name, char, order", [
    ("Q", 0, None),
    ("Q(i)", 0, None),
    ("F2", 2, 2),
    ("F3", 3, 3),
    ("F5", 5, 5),
    ("F7", 7, 7),
    ("F101", 101, 101),
    ("F3(i)", 3, 9),
    ("F7(i)", 7, 49),
])
def test_characteristic_and_order(name, char, order):
    f = field_by_name(name)
    assert f.characteristic == char
    assert f.order == order
    assert f.is_finite == (order is not None)


@pytest.mark.parametrize("name, has_i", [
    ("Q", False), ("Q(i)", True), ("F2", True), ("F3", False),
    ("F5", True), ("F7", False), ("F101", True), ("F3(i)", True),
    ("F7(i)", True),
])
def test_sqrt_minus_one_presence(name, has_i):
    f = field_by_name(name)
    s = f.sqrt_minus_one()
    assert (s is not None) == has_i
    if s is not None:
        assert s * s == -f.one


def test_sqrt_minus_one_canonical_values():
    assert field_by_name("F2").sqrt_minus_one().v == 1
    assert field_by_name("F5").sqrt_minus_one().v == 2
    assert field_by_name("F101").sqrt_minus_one().v == 10
    assert str(field_by_name("Q(i)").sqrt_minus_one()) == "i"


def test_rational_arithmetic_is_exact():
    q = rationals()
    third = q.one / q.from_int(3)
    sixth = q.one / q.from_int(6)
    assert third + sixth == q.one / q.from_int(2)
    assert q.one / (q.from_int(2) / q.from_int(3)) == q.from_int(3) / q.from_int(2)
    assert str(third) == "1/3"


def test_gaussian_arithmetic():
    qi = gaussian_rationals()
    i = qi.sqrt_minus_one()
    three, two = qi.from_int(3), qi.from_int(2)
    assert (three + two * i) * (three - two * i) == qi.from_int(13)
    z = qi.one + i
    assert z * (qi.one / z) == qi.one
    assert str(two * i) == "2*i"


def test_prime_field_inverses():
    f7 = prime_field(7)
    assert f7.from_int(3) * f7.from_int(5) == f7.one
    assert -f7.one == f7.from_int(6)
    assert f7.from_int(9) == f7.from_int(2)
    for a in f7.elements():
        if not a.is_zero():
            assert a * (f7.one / a) == f7.one


def test_prime_quadratic_field_structure():
    f9 = prime_quadratic_field(3)
    elems = list(f9.elements())
    assert len(elems) == 9
    i = f9.sqrt_minus_one()
    assert i * i == -f9.one
    one_plus_i = f9.one + i
    assert one_plus_i * one_plus_i == f9.from_int(2) * i
    for a in elems:
        if not a.is_zero():
            assert a * (f9.one / a) == f9.one
    f49 = prime_quadratic_field(7)
    assert sum(1 for _ in f49.elements()) == 49


@pytest.mark.parametrize("bad", ["F4", "F6", "F1", "F9", "Q(j)", "", "F", "Fx"])
def test_unknown_names_error(bad):
    with pytest.raises(FieldConstructionError):
        field_by_name(bad)


@pytest.mark.parametrize("bad", ["F5(i)", "F2(i)", "F13(i)"])
def test_quadratic_extension_requires_p_3_mod_4(bad):
    with pytest.raises(FieldConstructionError):
        field_by_name(bad)


def test_large_prime_names_work():
    f13 = field_by_name("F13")
    assert f13.sqrt_minus_one().v == 5
    assert field_by_name("F11").sqrt_minus_one() is None


def test_mixed_field_arithmetic_rejected():
    q = rationals()
    f5 = prime_field(5)
    with pytest.raises(FieldMismatchError):
        q.one + f5.one


def test_infinite_fields_cannot_enumerate():
    with pytest.raises(FieldConstructionError):
        list(rationals().elements())


def test_element_equality_and_hash():
    f5 = prime_field(5)
    assert f5.from_int(7) == f5.from_int(2)
    assert hash(f5.from_int(7)) == hash(f5.from_int(2))
    assert f5.from_int(2) != f5.from_int(3)
    assert f5.from_int(0).is_zero() and f5.one.is_one()
