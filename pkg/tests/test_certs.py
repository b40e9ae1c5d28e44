import pytest

from xratio.certs import (COUNTEREXAMPLE_CERT_NAMES, VALID_CERT_NAMES,
                          CertFormatError, parse_certificate,
                          shipped_certificate, shipped_certificates,
                          verify_certificate)
from xratio.fields import XratioError, field_by_name, prime_field, rationals

ODD_NAMES = ("Q", "Q(i)", "F3", "F5", "F7", "F101", "F3(i)", "F7(i)")
CHAR2_CERTS = ("shift_full_char2", "shift_base_char2", "conic_reflection_char2")


def test_shipped_inventory():
    certs = shipped_certificates()
    assert set(certs) == set(VALID_CERT_NAMES) | set(COUNTEREXAMPLE_CERT_NAMES)
    assert len(certs) == 7
    with pytest.raises(XratioError):
        shipped_certificate("no_such_cert")


def test_applies_to_characteristic_gate():
    f2 = prime_field(2)
    q = rationals()
    for name in VALID_CERT_NAMES:
        cert = shipped_certificate(name)
        if name in CHAR2_CERTS:
            assert cert.applies_to(f2)
            assert not cert.applies_to(q)
        else:
            assert not cert.applies_to(f2)
            assert cert.applies_to(q)
    with pytest.raises(XratioError, match="does not apply"):
        verify_certificate(shipped_certificate("negate_invert_full"), f2)


@pytest.mark.parametrize("field_name", ODD_NAMES)
def test_odd_certificates_valid_everywhere_applicable(field_name):
    field = field_by_name(field_name)
    for name in VALID_CERT_NAMES:
        cert = shipped_certificate(name)
        if not cert.applies_to(field):
            continue
        ver = verify_certificate(cert, field)
        assert ver.valid, ver.render()
        assert [c.ok for c in ver.conditions] == [True] * 4
        assert "VALID" in ver.render()


def test_char2_certificates_valid_over_f2():
    f2 = prime_field(2)
    for name in CHAR2_CERTS:
        ver = verify_certificate(shipped_certificate(name), f2)
        assert ver.valid, ver.render()
        assert ver.degree == 2


def test_negate_invert_full_relation_degree():
    ver = verify_certificate(shipped_certificate("negate_invert_full"),
                             rationals())
    assert ver.degree == 2
    assert ver.field_name == "Q"
    assert ver.cert_name == "negate_invert_full"


def test_perturbed_counterexample_fails_only_fixedness():
    cert = shipped_certificate("negate_invert_perturbed")
    ver = verify_certificate(cert, rationals())
    assert not ver.valid
    flags = [c.ok for c in ver.conditions]
    assert flags == [False, True, True, True]
    assert ver.conditions[0].detail
    text = ver.render()
    assert "INVALID" in text
    assert "FAIL" in text


def test_condition_indices_and_descriptions():
    ver = verify_certificate(shipped_certificate("negate_base"), rationals())
    assert [c.index for c in ver.conditions] == [1, 2, 3, 4]
    assert all(c.description for c in ver.conditions)


def test_parse_certificate_rejects_malformed_input():
    with pytest.raises(CertFormatError):
        parse_certificate("characteristic: 0\n[auto]\n", name="broken")
    good = (
        "name: tiny\n"
        "characteristic: 0\n"
        "variables: u\n"
        "[auto]\n"
        "u -> -u\n"
        "[generators]\n"
        "v = u^2\n"
        "[primitive]\n"
        "theta = u\n"
        "[relation]\n"
        "T^2 - v\n"
        "[expressions]\n"
        "u = theta\n"
    )
    cert = parse_certificate(good)
    assert cert.name == "tiny"
    ver = verify_certificate(cert, rationals())
    assert ver.valid
    with pytest.raises(CertFormatError):
        parse_certificate(good.replace("characteristic: 0",
                                       "characteristic: 5"))
    with pytest.raises(CertFormatError):
        parse_certificate(good.replace("[relation]\nT^2 - v\n", ""))


def test_extension_ambient_certificate():
    cert = shipped_certificate("conic_reflection")
    assert cert.extension is not None
    for fname in ("Q", "F5", "F101"):
        ver = verify_certificate(cert, field_by_name(fname))
        assert ver.valid, ver.render()
