"""Derived quantities of the four-point function field and their action tables.

Everything downstream (conic presentations, fixed-field certificates, the
replay checklist) is phrased in a handful of named expressions in
k(x1, x2, x3, x4): three linear combinations w, y, z, the cross ratio a of
the four points, the ratios u, t, and characteristic-dependent invariants.
This module records the definitions, the action of the distinguished
4-cycle on every derived name, and the change-of-variable identities, each
as parseable text so the replay can re-verify them from scratch.

The permutation convention is sigma(x_k) = x_{sigma(k)}.  That orientation
is what makes the recorded tables correct (the other convention flips
sigma and sigma^-1); :func:`point_action` re-derives one table entry and
refuses to hand out an action that violates it.
"""

from __future__ import annotations

from .autos import Automorphism, perm_automorphism
from .exprparse import parse_expression
from .fields import Field, XratioError
from .perms import Perm, parse_perm
from .poly import Ring
from .ratfunc import RatFunc, rf_eq

POINT_VARS = ("x1", "x2", "x3", "x4")

CROSS_RATIO_TEXT = "((x4 - x1)*(x3 - x2))/((x4 - x2)*(x3 - x1))"

# definitions resolve in order: each may use point variables and earlier names
DERIVED_ODD = (
    ("w", "-x1 - x2 + x3 + x4"),
    ("y", "-x1 + x2 + x3 - x4"),
    ("z", "-x1 + x2 - x3 + x4"),
    ("a", CROSS_RATIO_TEXT),
    ("u", "w/y"),
    ("t", "z/y"),
    ("b", "1 - 2*a"),
    ("x", "b^2"),
)

DERIVED_CHAR2 = (
    ("w", "x1 + x2 + x3 + x4"),
    ("y", "x1 + x3"),
    ("z", "x1 + x4"),
    ("a", CROSS_RATIO_TEXT),
    ("u", "y/w"),
    ("t", "z/w"),
    ("inv_x", "a^2 + a"),
    ("inv_y", "u^2 + u"),
    ("inv_z", "a + u"),
)

# image of each derived name under the 4-cycle, written in derived names
SIGMA_ODD = (
    ("w", "-y"), ("y", "w"), ("z", "-z"), ("a", "1 - a"),
    ("u", "-1/u"), ("t", "-t/u"), ("b", "-b"), ("x", "x"),
)

SIGMA2_ODD = (
    ("w", "-w"), ("y", "-y"), ("z", "z"), ("a", "a"),
    ("u", "u"), ("t", "-t"), ("b", "b"), ("x", "x"),
)

SIGMA_CHAR2 = (
    ("w", "w"), ("y", "w + y"), ("z", "w + y + z"), ("a", "1 + a"),
    ("u", "1 + u"), ("t", "1 + u + t"),
    ("inv_x", "inv_x"), ("inv_y", "inv_y"), ("inv_z", "inv_z"),
)

SIGMA2_CHAR2 = (
    ("w", "w"), ("y", "y"), ("z", "w + z"), ("a", "a"),
    ("u", "u"), ("t", "1 + t"),
    ("inv_x", "inv_x"), ("inv_y", "inv_y"), ("inv_z", "inv_z"),
)

# linear change of basis, odd/zero characteristic: point-variable differences
# against derived names, plus the cross ratio rewritten in w, y, z alone
BASIS_IDS_ODD = (
    ("x4 - x1", "(w + z)/2"),
    ("x3 - x1", "(w + y)/2"),
    ("x3 - x2", "(w - z)/2"),
    ("x4 - x2", "(w - y)/2"),
    ("x2 - x1", "(y + z)/2"),
    ("x4 - x3", "(z - y)/2"),
    ("a", "(w^2 - z^2)/(w^2 - y^2)"),
)

# the pair (u, t) satisfies the presentation conic of its characteristic
CONIC_ODD_TEXT = "(1 - a)*u^2 - t^2 + a"
CONIC_CHAR2_TEXT = "a*u^2 + a*u + t^2 + t"


def point_ring(field: Field) -> Ring:
    return Ring(field, POINT_VARS)


def four_cycle() -> Perm:
    return parse_perm("(1 2 3 4)")


def derived_definitions(field: Field):
    return DERIVED_CHAR2 if field.characteristic == 2 else DERIVED_ODD


def derived_values(field: Field) -> dict:
    """Resolve the definition table into rational functions of x1..x4."""
    target = point_ring(field)
    values = {}
    names = []
    for name, text in derived_definitions(field):
        scope = Ring(field, POINT_VARS + tuple(names))
        rf = parse_expression(text, scope)
        values[name] = rf.substitute(values, target)
        names.append(name)
    return values


def in_derived(text: str, field: Field) -> RatFunc:
    """Parse an expression in the point variables and derived names; value in
    k(x1..x4)."""
    values = derived_values(field)
    scope = Ring(field, POINT_VARS + tuple(values))
    return parse_expression(text, scope).substitute(values, point_ring(field))


def point_action(field: Field) -> Automorphism:
    """The 4-cycle acting by sigma(x_k) = x_{sigma(k)}, orientation-checked."""
    act = perm_automorphism(point_ring(field), four_cycle())
    values = derived_values(field)
    if field.characteristic == 2:
        ok = rf_eq(act.apply(values["y"]), values["w"] + values["y"])
    else:
        ok = rf_eq(act.apply(values["w"]), -values["y"])
    if not ok:
        raise XratioError("permutation action violates the recorded orientation")
    return act


def sigma_claims(field: Field):
    return SIGMA_CHAR2 if field.characteristic == 2 else SIGMA_ODD


def sigma2_claims(field: Field):
    return SIGMA2_CHAR2 if field.characteristic == 2 else SIGMA2_ODD


def conic_identity_text(field: Field) -> str:
    return CONIC_CHAR2_TEXT if field.characteristic == 2 else CONIC_ODD_TEXT
