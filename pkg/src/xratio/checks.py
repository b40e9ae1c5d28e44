"""The replay checklist: every computational claim, re-verified from scratch.

Each check is a pure function of a :class:`_Ctx` (run configuration plus the
resolved coefficient fields) returning a verdict and human-readable detail
lines.  Checks never abort the run: any exception inside one becomes a FAIL
with the error message in the details.  Randomized checks draw from
``random.Random(f"{seed}-{check_id}")`` so every check is reproducible in
isolation and the whole run is deterministic for a given configuration.

Several claims are deliberately covered twice by independent routes (for
example, the isotropy criterion is decided symbolically by ISO-CRIT and
confirmed exhaustively by ISO-SEARCH, and the certificate conditions behind
LEM-A-* are re-run wholesale by CERTS); redundancy is the point.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass

from . import certs, conic, tables
from .autos import perm_automorphism
from .exprparse import parse_expression
from .fields import Field, XratioError, field_by_name, prime_field, rationals
from .perms import (all_perms, cyclic_order4_subgroups, has_fixed_point,
                    klein_group, klein_part, splits, subgroup_conjugacy_classes,
                    subgroup_str, subgroups)
from .poly import Ring
from .projline import ProjPoint1, borel_stabilizer
from .ratfunc import DegenerateSubstitutionError, jacobian_rank, rf_eq, rvar
from .report import (ASSUMED, EVIDENCE, FAIL, PASS, SKIPPED, CheckResult,
                     Report, RunConfig)


@dataclass
class _Ctx:
    config: RunConfig
    fields: tuple

    def rng(self, check_id: str) -> random.Random:
        return random.Random(f"{self.config.seed}-{check_id}")

    @property
    def odd_fields(self):
        return [f for f in self.fields if f.characteristic != 2]

    @property
    def char2_fields(self):
        return [f for f in self.fields if f.characteristic == 2]

    @property
    def finite_fields(self):
        return [f for f in self.fields if f.is_finite]


_NO_ODD = "no field of characteristic != 2 selected"
_NO_CHAR2 = "no field of characteristic 2 selected"


def _in_scope(text: str, vals: dict, field: Field):
    """Parse `text` over point variables plus derived names; value in k(x1..x4)."""
    scope = Ring(field, tables.POINT_VARS + tuple(vals))
    return parse_expression(text, scope).substitute(vals, tables.point_ring(field))


def _table_errors(field: Field, act, claims) -> list:
    vals = tables.derived_values(field)
    bad = []
    for name, text in claims:
        expected = _in_scope(text, vals, field)
        if not rf_eq(act.apply(vals[name]), expected):
            bad.append(name)
    return bad


# -- checks, in report order --------------------------------------------------


def _run_cr_inv(ctx):
    ok, details = True, []
    v4 = klein_group()
    for f in ctx.fields:
        ring = tables.point_ring(f)
        a = tables.derived_values(f)["a"]
        bad = []
        for p in all_perms():
            if rf_eq(perm_automorphism(ring, p).apply(a), a) != (p in v4):
                bad.append(str(p))
        if bad:
            ok = False
            details.append(f"{f.name}: wrong invariance at {', '.join(bad)}")
        else:
            details.append(f"{f.name}: all 24 permutations behave as predicted")
    return (PASS if ok else FAIL), details


def _run_sigma_table(ctx):
    flds = ctx.odd_fields
    if not flds:
        return SKIPPED, [_NO_ODD]
    ok, details = True, []
    for f in flds:
        bad = _table_errors(f, tables.point_action(f), tables.SIGMA_ODD)
        ok &= not bad
        details.append(f"{f.name}: " + (f"mismatch at {', '.join(bad)}" if bad
                                        else f"{len(tables.SIGMA_ODD)}/8 entries verified"))
    return (PASS if ok else FAIL), details


def _run_sigma2_table(ctx):
    flds = ctx.odd_fields
    if not flds:
        return SKIPPED, [_NO_ODD]
    ok, details = True, []
    for f in flds:
        act = tables.point_action(f)
        bad = _table_errors(f, act * act, tables.SIGMA2_ODD)
        ok &= not bad
        details.append(f"{f.name}: " + (f"mismatch at {', '.join(bad)}" if bad
                                        else f"{len(tables.SIGMA2_ODD)}/8 entries verified"))
    return (PASS if ok else FAIL), details


def _run_basis_ids(ctx):
    flds = ctx.odd_fields
    if not flds:
        return SKIPPED, [_NO_ODD]
    ok, details = True, []
    for f in flds:
        vals = tables.derived_values(f)
        bad = []
        for lhs, rhs in tables.BASIS_IDS_ODD:
            if not rf_eq(_in_scope(lhs, vals, f), _in_scope(rhs, vals, f)):
                bad.append(f"{lhs} = {rhs}")
        ok &= not bad
        details.append(f"{f.name}: " + (f"failed: {'; '.join(bad)}" if bad
                                        else f"{len(tables.BASIS_IDS_ODD)}/7 identities verified"))
    return (PASS if ok else FAIL), details


def _run_conic_b(ctx):
    flds = ctx.odd_fields
    if not flds:
        return SKIPPED, [_NO_ODD]
    ok, details = True, []
    for f in flds:
        zero = tables.in_derived(tables.CONIC_ODD_TEXT, f).is_zero()
        ok &= zero
        details.append(f"{f.name}: (1 - a)*u^2 - t^2 + a "
                       + ("vanishes identically in k(x1..x4)" if zero else "does NOT vanish"))
    return (PASS if ok else FAIL), details


_LEM_A_CERTS = ("negate_invert_full", "negate_base")


def _run_lem_a_inv(ctx):
    flds = ctx.odd_fields
    if not flds:
        return SKIPPED, [_NO_ODD]
    ok, details = True, []
    for f in flds:
        for name in _LEM_A_CERTS:
            ver = certs.verify_certificate(certs.shipped_certificate(name), f)
            c1 = ver.conditions[0]
            ok &= c1.ok
            details.append(f"{f.name}: {name} invariance "
                           + ("verified" if c1.ok else f"FAILED ({c1.detail})"))
    return (PASS if ok else FAIL), details


def _run_lem_a_rel(ctx):
    flds = ctx.odd_fields
    if not flds:
        return SKIPPED, [_NO_ODD]
    ok, details = True, []
    for f in flds:
        for name in _LEM_A_CERTS:
            ver = certs.verify_certificate(certs.shipped_certificate(name), f)
            rest = ver.conditions[1:]
            good = all(c.ok for c in rest)
            ok &= good
            if good:
                details.append(f"{f.name}: {name} relation kills the primitive, "
                               "generators recovered, action order matches degree "
                               f"{ver.degree}")
            else:
                bad = "; ".join(f"({c.index}) {c.detail or c.description}"
                                for c in rest if not c.ok)
                details.append(f"{f.name}: {name} FAILED {bad}")
        ring2 = Ring(f, ("b", "u"))
        gx = parse_expression("b^2", ring2)
        gy = parse_expression("b*(u^2+1)/(2*u)", ring2)
        gz = parse_expression("(u^2-1)/(2*u)", ring2)
        conic_rel = rf_eq(gy * gy, gx * gz * gz + gx)
        ok &= conic_rel
        details.append(f"{f.name}: y^2 - x*z^2 - x "
                       + ("= 0 holds among the generators" if conic_rel
                          else "does NOT vanish on the generators"))
    return (PASS if ok else FAIL), details


def _run_iso_crit(ctx):
    flds = ctx.odd_fields
    if not flds:
        return SKIPPED, [_NO_ODD]
    ok, details = True, []
    d_obs = ctx.config.obstruction_degree
    for f in flds:
        dec = conic.decide_isotropy(f, d_obs)
        expected = f.sqrt_minus_one() is not None
        ok &= dec.isotropic == expected
        if dec.isotropic:
            details.append(f"{f.name}: isotropic, verified witness {dec.witness}")
        else:
            details.append(f"{f.name}: anisotropic; {len(dec.obstruction.steps)}-step "
                           f"obstruction verified on templates of degree <= {d_obs}")
        if dec.isotropic != expected:
            details.append(f"{f.name}: DISAGREES with the square-root-of-minus-one criterion")
    return (PASS if ok else FAIL), details


def _run_iso_search(ctx):
    flds = ctx.finite_fields
    if not flds:
        return SKIPPED, ["no finite field selected"]
    ok, details = True, []
    for f in flds:
        form = conic.criterion_form(f)
        d = ctx.config.degree_bound
        while d >= 0 and (f.order ** (d + 1)) ** 3 > conic.SEARCH_BUDGET:
            d -= 1
        if d < 0:
            details.append(f"{f.name}: not searched (degree 0 already exceeds the budget)")
            continue
        pt = conic.bounded_point_search(form, d)
        expect_found = True if f.characteristic == 2 else f.sqrt_minus_one() is not None
        if pt is not None:
            on = form.is_point(pt)
            ok &= on and expect_found
            details.append(f"{f.name}: first zero up to degree {d} is {pt}"
                           + ("" if on else " which is NOT on the conic"))
        else:
            ok &= not expect_found
            details.append(f"{f.name}: no zero with coordinates of degree <= {d} "
                           "(exhaustive)")
    return (PASS if ok else FAIL), details


def _param_instance(f: Field):
    """The characteristic-appropriate (form, base point) pair, or None."""
    if f.characteristic == 2:
        form = conic.char2_form(f)
        x = rvar(form.ring, "x")
        return form, conic.ProjPoint2(form.ring, (x, 1, 1))
    s = f.sqrt_minus_one()
    if s is None:
        return None
    form = conic.standard_form(f)
    return form, conic.ProjPoint2(form.ring, (0, s, 1))


def _run_param(ctx):
    ok, details, any_run = True, [], False
    for f in ctx.fields:
        inst = _param_instance(f)
        if inst is None:
            details.append(f"{f.name}: no known point, nothing to parametrize")
            continue
        any_run = True
        form, base = inst
        pm = conic.parametrize(form, base)
        values = (list(f.elements()) if f.is_finite
                  else [f.from_int(k) for k in (-3, -1, 0, 1, 2, 5)])
        good = total = 0
        for v in values:
            try:
                p2 = pm.point_at(v)
            except conic.DegenerateConicError:
                continue
            total += 1
            good += form.is_point(p2)
        ok &= total > 0 and good == total
        details.append(f"{f.name}: base {base}, chart {pm.chart}; forward and inverse "
                       f"identities verified symbolically; {good}/{total} sampled "
                       "parameters land on the conic")
    if not any_run:
        return SKIPPED, details or ["no field with a known conic point selected"]
    return (PASS if ok else FAIL), details


def _run_certs(ctx):
    ok, details = True, []
    shipped = certs.shipped_certificates()
    names = sorted(shipped)
    checked = 0
    for f in ctx.fields:
        parts = []
        for name in names:
            cert = shipped[name]
            if not cert.applies_to(f):
                continue
            ver = certs.verify_certificate(cert, f)
            checked += 1
            if name in certs.COUNTEREXAMPLE_CERT_NAMES:
                cond1_failed = not ver.conditions[0].ok
                good = (not ver.valid) and cond1_failed
                parts.append(f"{name} INVALID at condition 1 as intended"
                             if good else f"{name} UNEXPECTEDLY {ver.render()}")
            else:
                good = ver.valid
                parts.append(f"{name} VALID" if good else ver.render())
            ok &= good
        if parts:
            details.append(f"{f.name}: " + ", ".join(parts))
    details.append(f"{checked} certificate/field instances checked")
    return (PASS if ok else FAIL), details


def _run_char2_table(ctx):
    flds = ctx.char2_fields
    if not flds:
        return SKIPPED, [_NO_CHAR2]
    ok, details = True, []
    for f in flds:
        act = tables.point_action(f)
        bad1 = _table_errors(f, act, tables.SIGMA_CHAR2)
        bad2 = _table_errors(f, act * act, tables.SIGMA2_CHAR2)
        ok &= not bad1 and not bad2
        if bad1 or bad2:
            details.append(f"{f.name}: mismatch at "
                           f"{', '.join(bad1)} / {', '.join(bad2)}")
        else:
            details.append(f"{f.name}: sigma {len(tables.SIGMA_CHAR2)}/9 and "
                           f"sigma^2 {len(tables.SIGMA2_CHAR2)}/9 entries verified")
    return (PASS if ok else FAIL), details


def _run_conic_c(ctx):
    flds = ctx.char2_fields
    if not flds:
        return SKIPPED, [_NO_CHAR2]
    ok, details = True, []
    for f in flds:
        zero = tables.in_derived(tables.CONIC_CHAR2_TEXT, f).is_zero()
        ok &= zero
        details.append(f"{f.name}: a*u^2 + a*u + t^2 + t "
                       + ("vanishes identically in k(x1..x4)" if zero else "does NOT vanish"))
    return (PASS if ok else FAIL), details


_LEM_B_CERTS = ("shift_full_char2", "shift_base_char2", "conic_reflection_char2")


def _run_lem_b_all(ctx):
    flds = ctx.char2_fields
    if not flds:
        return SKIPPED, [_NO_CHAR2]
    ok, details = True, []
    for f in flds:
        form = conic.char2_form(f)
        x = rvar(form.ring, "x")
        pt = conic.ProjPoint2(form.ring, (x, 1, 1))
        on = form.is_point(pt)
        ok &= on
        details.append(f"{f.name}: (x : 1 : 1) "
                       + ("lies on" if on else "is NOT on") + " the conic")
        for name in _LEM_B_CERTS:
            ver = certs.verify_certificate(certs.shipped_certificate(name), f)
            ok &= ver.valid
            details.append(f"{f.name}: {name} "
                           + ("VALID" if ver.valid else ver.render()))
        vals = tables.derived_values(f)
        act = tables.point_action(f)
        moved = [n for n in ("inv_x", "inv_y", "inv_z")
                 if not rf_eq(act.apply(vals[n]), vals[n])]
        ok &= not moved
        details.append(f"{f.name}: invariants a^2+a, u^2+u, a+u "
                       + ("all fixed by the 4-cycle" if not moved
                          else f"moved: {', '.join(moved)}"))
    return (PASS if ok else FAIL), details


def _run_split(ctx):
    subs = subgroups()
    nonsplit, bad_witness = [], []
    for s in subs:
        did, comp = splits(s)
        if not did:
            nonsplit.append(s)
            continue
        kern = klein_part(s)
        if len(comp & kern) != 1 or len(comp) * len(kern) != len(s):
            bad_witness.append(subgroup_str(s))
    expected = set(cyclic_order4_subgroups())
    ok = set(nonsplit) == expected and not bad_witness
    details = [f"{len(subs) - len(nonsplit)}/{len(subs)} subgroups split over "
               "their Klein part"]
    details.append("non-split subgroups: "
                   + "; ".join(sorted(subgroup_str(s) for s in nonsplit)))
    if set(nonsplit) != expected:
        details.append("EXPECTED exactly the three cyclic order-4 subgroups")
    if bad_witness:
        details.append(f"bad complement witnesses: {'; '.join(bad_witness)}")
    return (PASS if ok else FAIL), details


def _run_fix_eq(ctx):
    subs = subgroups()
    bad = [subgroup_str(s) for s in subs
           if has_fixed_point(s) != (len(klein_part(s)) == 1)]
    details = [f"{len(subs) - len(bad)}/{len(subs)} subgroups satisfy: fixed point "
               "on the four letters <=> trivial intersection with the Klein group"]
    if bad:
        details.append(f"equivalence fails for: {'; '.join(bad)}")
    return (PASS if not bad else FAIL), details


def _run_subgrp_count(ctx):
    subs = subgroups()
    classes = subgroup_conjugacy_classes()
    profile = Counter(len(s) for s in subs)
    expected = {1: 1, 2: 9, 3: 4, 4: 7, 6: 4, 8: 3, 12: 1, 24: 1}
    ok = len(subs) == 30 and len(classes) == 11 and dict(profile) == expected
    details = [f"{len(subs)} subgroups in {len(classes)} conjugacy classes",
               "order profile " + " ".join(f"{k}:{v}" for k, v in sorted(profile.items()))]
    if not ok:
        details.append("EXPECTED 30 subgroups, 11 classes, profile "
                       + " ".join(f"{k}:{v}" for k, v in sorted(expected.items())))
    return (PASS if ok else FAIL), details


def _run_genfree(ctx):
    rng = ctx.rng("GENFREE")
    f101 = prime_field(101)
    n = ctx.config.samples
    trivial = 0
    for _ in range(n):
        raw = rng.sample(range(101), 4)
        pts = [ProjPoint1.affine(f101, f101.from_int(v)) for v in raw]
        if len(borel_stabilizer(pts, f101)) == 1:
            trivial += 1
    special = [ProjPoint1.affine(f101, f101.from_int(v)) for v in (0, 1, 2)]
    special.append(ProjPoint1.infinity(f101))
    special_stab = borel_stabilizer(special, f101)
    details = [
        f"{trivial}/{n} sampled 4-subsets of the affine line over F101 have "
        "trivial stabilizer in the upper-triangular group",
        "every exceptional affine set is symmetric under some involution "
        "x -> c - x; such sets are 123725/4082925 (about 3.03%) of all 4-subsets",
        f"designed exceptional tuple (0, 1, 2, infinity) has stabilizer of "
        f"order {len(special_stab)}",
    ]
    if len(special_stab) <= 1:
        details.append("EXPECTED a nontrivial stabilizer for the designed tuple")
        return FAIL, details
    return EVIDENCE, details


def _run_indep(ctx):
    q = rationals()
    vq = tables.derived_values(q)
    rank = jacobian_rank([vq["a"], vq["u"]], tables.POINT_VARS)
    ok0 = rank == 2
    details = [f"Jacobian of (a, u) in (x1..x4) has rank {rank} over Q "
               "(exact, characteristic 0)"]
    if not ctx.char2_fields:
        return (PASS if ok0 else FAIL), details

    f2 = prime_field(2)
    rng = ctx.rng("INDEP")
    sring = Ring(f2, ("s",))
    vals2 = tables.derived_values(f2)
    target_draws, pairs, attempts = 25, [], 0
    while len(pairs) < target_draws and attempts < 500:
        attempts += 1
        imgs = {v: sring.poly({(k,): rng.randrange(2) for k in range(4)})
                for v in tables.POINT_VARS}
        try:
            av = vals2["a"].substitute(imgs, sring)
            uv = vals2["u"].substitute(imgs, sring)
        except DegenerateSubstitutionError:
            continue
        pairs.append((av, uv))
    distinct = 0
    for i, (a1, u1) in enumerate(pairs):
        if all(not (rf_eq(a1, a2) and rf_eq(u1, u2)) for a2, u2 in pairs[:i]):
            distinct += 1
    strength = "supporting" if distinct >= 10 else "WEAK"
    details.append(
        f"characteristic 2: {len(pairs)} valid specializations into F2(s) "
        f"(degree <= 3), {distinct} pairwise distinct (a, u) value pairs; "
        f"{strength} evidence, necessary condition only")
    details.append("independence in characteristic 2 is used without an "
                   "independent mechanical proof here")
    return (ASSUMED if ok0 else FAIL), details


def _run_main_b(ctx):
    flds = ctx.odd_fields
    if not flds:
        return SKIPPED, [_NO_ODD]
    ok, details = True, []
    d_obs = ctx.config.obstruction_degree
    for f in flds:
        dec = conic.decide_isotropy(f, d_obs)
        expected = f.sqrt_minus_one() is not None
        ok &= dec.isotropic == expected
        if dec.isotropic:
            conic.parametrize(conic.standard_form(f), dec.witness)
            details.append(f"{f.name}: RATIONAL over the cross-ratio subfield; "
                           f"conic point {dec.witness} with verified parametrization")
        else:
            details.append(f"{f.name}: NOT rational: the presentation conic is "
                           f"anisotropic (verified obstruction, templates of "
                           f"degree <= {d_obs})")
    details.append("criterion: rational exactly when the coefficient field "
                   "contains a square root of -1")
    return (PASS if ok else FAIL), details


def _run_main_c(ctx):
    flds = ctx.char2_fields
    if not flds:
        return SKIPPED, [_NO_CHAR2]
    ok, details = True, []
    for f in flds:
        form = conic.char2_form(f)
        x = rvar(form.ring, "x")
        pt = conic.ProjPoint2(form.ring, (x, 1, 1))
        on = form.is_point(pt)
        certs_ok = all(
            certs.verify_certificate(certs.shipped_certificate(n), f).valid
            for n in _LEM_B_CERTS)
        if on:
            conic.parametrize(form, pt)
        ok &= on and certs_ok
        details.append(f"{f.name}: RATIONAL; explicit conic point (x : 1 : 1), "
                       "verified parametrization and certificate chain"
                       if on and certs_ok else
                       f"{f.name}: chain broken (point on conic: {on}, "
                       f"certificates valid: {certs_ok})")
    return (PASS if ok else FAIL), details


@dataclass(frozen=True)
class CheckSpec:
    id: str
    anchor: str
    run: object


CHECKS = (
    CheckSpec("CR-INV",
              "the cross ratio of four points is fixed exactly by the Klein "
              "four-group of double transpositions",
              _run_cr_inv),
    CheckSpec("SIGMA-TABLE",
              "away from characteristic 2 the distinguished 4-cycle acts on "
              "(w, y, z, a, u, t, b, x) by the recorded table",
              _run_sigma_table),
    CheckSpec("SIGMA2-TABLE",
              "the square of the 4-cycle negates w, y, t and fixes z, a, u, b, x",
              _run_sigma2_table),
    CheckSpec("BASIS-IDS",
              "point differences are half sums/differences of w, y, z, and the "
              "cross ratio equals (w^2 - z^2)/(w^2 - y^2)",
              _run_basis_ids),
    CheckSpec("CONIC-B",
              "the pair (u, t) satisfies (1 - a)u^2 - t^2 + a = 0 over the "
              "cross-ratio field",
              _run_conic_b),
    CheckSpec("LEM-A-INV",
              "x = b^2, y = b(u^2+1)/(2u), z = (u^2-1)/(2u) are invariant under "
              "b -> -b, u -> -1/u",
              _run_lem_a_inv),
    CheckSpec("LEM-A-REL",
              "u is quadratic over the invariants via T^2 - 2zT - 1, every "
              "ambient generator is recovered, and the action has order 2",
              _run_lem_a_rel),
    CheckSpec("ISO-CRIT",
              "Y^2 - xZ^2 - xW^2 has a k(x)-point precisely when k contains a "
              "square root of -1",
              _run_iso_crit),
    CheckSpec("ISO-SEARCH",
              "exhaustive bounded-degree point search over finite fields agrees "
              "with the isotropy criterion",
              _run_iso_search),
    CheckSpec("PARAM",
              "a conic with a point is parametrized by the pencil of lines "
              "through it, with verified forward and inverse maps",
              _run_param),
    CheckSpec("CERTS",
              "all shipped fixed-field certificates verify, and the deliberately "
              "perturbed fixture fails exactly the invariance condition",
              _run_certs),
    CheckSpec("CHAR2-TABLE",
              "in characteristic 2 the 4-cycle fixes w, shifts a and u by 1, and "
              "the recorded sigma and sigma^2 tables hold",
              _run_char2_table),
    CheckSpec("CONIC-C",
              "in characteristic 2 the pair (u, t) satisfies "
              "t^2 + t = a u^2 + a u over the cross-ratio field",
              _run_conic_c),
    CheckSpec("LEM-B-ALL",
              "the characteristic-2 chain holds: the conic point (x : 1 : 1), "
              "the shift certificates, and the invariance of a^2+a, u^2+u, a+u",
              _run_lem_b_all),
    CheckSpec("SPLIT",
              "all 30 subgroups of the symmetric group on four letters split "
              "over their Klein part except the three cyclic groups of order 4",
              _run_split),
    CheckSpec("FIX-EQ",
              "a subgroup fixes one of the four letters exactly when it meets "
              "the Klein four-group trivially",
              _run_fix_eq),
    CheckSpec("SUBGRP-COUNT",
              "the symmetric group on four letters has 30 subgroups in 11 "
              "conjugacy classes with the recorded order profile",
              _run_subgrp_count),
    CheckSpec("GENFREE",
              "randomly sampled 4-subsets of the affine line over F101 "
              "generically have trivial upper-triangular stabilizer",
              _run_genfree),
    CheckSpec("INDEP",
              "the cross ratio a and the ratio u are algebraically independent",
              _run_indep),
    CheckSpec("MAIN-B-VERDICT",
              "away from characteristic 2, the 4-cycle invariant field is "
              "rational over the cross-ratio invariants exactly when the "
              "coefficient field contains a square root of -1",
              _run_main_b),
    CheckSpec("MAIN-C-VERDICT",
              "in characteristic 2 the 4-cycle invariant field is always "
              "rational over the cross-ratio invariants",
              _run_main_c),
)

CHECK_IDS = tuple(spec.id for spec in CHECKS)


def resolve_fields(names) -> tuple:
    return tuple(field_by_name(n) for n in names)


def run_checklist(config: RunConfig, only=None) -> Report:
    """Run the selected checks (all by default) and collect a Report."""
    fields = resolve_fields(config.fields)
    if only is not None:
        unknown = sorted(set(only) - set(CHECK_IDS))
        if unknown:
            raise XratioError(f"unknown check ids: {', '.join(unknown)}")
        wanted = set(only)
        selected = [spec for spec in CHECKS if spec.id in wanted]
    else:
        selected = list(CHECKS)
    ctx = _Ctx(config, fields)
    results = []
    for spec in selected:
        t0 = time.perf_counter()
        try:
            verdict, details = spec.run(ctx)
        except XratioError as exc:
            verdict, details = FAIL, [f"error: {exc}"]
        except Exception as exc:
            verdict, details = FAIL, [f"internal error: {exc!r}"]
        ms = int((time.perf_counter() - t0) * 1000)
        results.append(CheckResult(spec.id, spec.anchor, verdict, list(details), ms))
    results.sort(key=lambda r: r.id)
    return Report(config, results)
