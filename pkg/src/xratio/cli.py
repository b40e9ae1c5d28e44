"""Command line entry point: `replay`.

Subcommands:
    run             execute the claim checklist and emit a report
    check-identity  compare two expressions in the point/derived scope
    subgroups       census of the 30 subgroups of the symmetric group on 4 letters
    conic           decide / search / parametrize the presentation conics
    stabilizer      upper-triangular stabilizer of a 4-point subset of P^1

Exit codes: 0 success, 1 when a FAIL verdict is present (or an identity does
not hold), 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys

from . import conic, tables
from .checks import CHECK_IDS, run_checklist
from .exprparse import parse_expression
from .fields import XratioError, field_by_name
from .perms import (has_fixed_point, klein_part, splits,
                    subgroup_conjugacy_classes, subgroup_str, subgroups)
from .projline import ProjPoint1, borel_stabilizer
from .ratfunc import rf_eq
from .report import DEFAULT_FIELDS, RunConfig


def _split_csv(text: str) -> list:
    return [part.strip() for part in text.split(",") if part.strip()]


def _cmd_run(args) -> int:
    fields = tuple(_split_csv(args.fields)) if args.fields else DEFAULT_FIELDS
    config = RunConfig(seed=args.seed, fields=fields,
                       degree_bound=args.degree_bound, samples=args.samples)
    only = _split_csv(args.checks) if args.checks else None
    report = run_checklist(config, only=only)
    doc = report.to_json() if args.format == "json" else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(doc)
    else:
        sys.stdout.write(doc)
    return report.exit_code


def _cmd_check_identity(args) -> int:
    field = field_by_name(args.field)
    lhs = tables.in_derived(args.lhs, field)
    rhs = tables.in_derived(args.rhs, field)
    equal = rf_eq(lhs, rhs)
    word = "EQUAL" if equal else "NOT EQUAL"
    print(f"{word} over {field.name}: {args.lhs}  vs  {args.rhs}")
    if not equal:
        print(f"  lhs = {lhs.display_normalized()}")
        print(f"  rhs = {rhs.display_normalized()}")
    return 0 if equal else 1


def _cmd_subgroups(_args) -> int:
    subs = subgroups()
    classes = subgroup_conjugacy_classes()
    for k, s in enumerate(subs, start=1):
        did, _comp = splits(s)
        print(f"#{k:<3} order {len(s):<3} klein-part {len(klein_part(s))}  "
              f"splits {'yes' if did else 'NO '}  "
              f"fixed-point {'yes' if has_fixed_point(s) else 'no '}  "
              f"{subgroup_str(s)}")
    print(f"{len(subs)} subgroups, {len(classes)} conjugacy classes")
    return 0


def _cmd_conic(args) -> int:
    field = field_by_name(args.field)
    if args.action == "decide":
        decision = conic.decide_isotropy(field, args.degree_bound)
        print(decision.render())
        return 0
    if args.action == "search":
        form = conic.criterion_form(field)
        point = conic.bounded_point_search(form, args.degree_bound)
        print(f"form {form} over {field.name}(x)")
        if point is None:
            print(f"no zero with coordinates of degree <= {args.degree_bound} "
                  "(exhaustive)")
        else:
            print(f"first zero: {point}")
        return 0
    # parametrize
    if args.point:
        form = conic.criterion_form(field)
        coords = [parse_expression(t, form.ring)
                  for t in _split_csv(args.point)]
        base = conic.ProjPoint2(form.ring, coords)
    else:
        if field.characteristic == 2:
            form = conic.char2_form(field)
            base = conic.ProjPoint2(form.ring, (parse_expression("x", form.ring), 1, 1))
        else:
            s = field.sqrt_minus_one()
            if s is None:
                raise XratioError(
                    f"{field.name} has no square root of -1, so the standard "
                    "conic has no default point; pass --point Y,Z,W")
            form = conic.standard_form(field)
            base = conic.ProjPoint2(form.ring, (0, s, 1))
    pm = conic.parametrize(form, base)
    print(f"form {form} over {field.name}(x)")
    print(f"base point {base}")
    print(pm.describe())
    return 0


def _cmd_stabilizer(args) -> int:
    field = field_by_name(args.field)
    pts = []
    for token in _split_csv(args.points):
        if token in ("inf", "oo", "infinity"):
            pts.append(ProjPoint1.infinity(field))
        else:
            pts.append(ProjPoint1.affine(field, field.from_int(int(token))))
    stab = borel_stabilizer(pts, field)
    print(f"points {{{', '.join(str(p) for p in pts)}}} over {field.name}")
    for m in stab:
        print(f"  {m}")
    print(f"stabilizer order {len(stab)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="replay",
        description="re-verify the cross-ratio rationality computations")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute the claim checklist")
    p_run.add_argument("--checks", default=None,
                       help="comma-separated check ids (default: all); "
                            "known ids: " + ",".join(CHECK_IDS))
    p_run.add_argument("--fields", default=None,
                       help="comma-separated field names "
                            f"(default: {','.join(DEFAULT_FIELDS)})")
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--degree-bound", type=int, default=2,
                       help="polynomial degree bound for the conic point search")
    p_run.add_argument("--samples", type=int, default=100,
                       help="sample count for the randomized evidence checks")
    p_run.add_argument("--format", choices=("text", "json"), default="text")
    p_run.add_argument("--out", default=None, help="write the report to a file")
    p_run.set_defaults(func=_cmd_run)

    p_id = sub.add_parser("check-identity",
                          help="compare two expressions in x1..x4 and the "
                               "derived quantities")
    p_id.add_argument("--field", default="Q")
    p_id.add_argument("--lhs", required=True)
    p_id.add_argument("--rhs", required=True)
    p_id.set_defaults(func=_cmd_check_identity)

    p_sub = sub.add_parser("subgroups", help="subgroup census with split and "
                                             "fixed-point columns")
    p_sub.set_defaults(func=_cmd_subgroups)

    p_con = sub.add_parser("conic", help="decide, search, or parametrize the "
                                         "presentation conics")
    p_con.add_argument("action", choices=("decide", "search", "parametrize"))
    p_con.add_argument("--field", default="Q")
    p_con.add_argument("--degree-bound", type=int, default=None)
    p_con.add_argument("--point", default=None,
                       help="comma-separated Y,Z,W coordinates (expressions in x)")
    p_con.set_defaults(func=_cmd_conic)

    p_st = sub.add_parser("stabilizer",
                          help="upper-triangular stabilizer of a point list")
    p_st.add_argument("--field", required=True)
    p_st.add_argument("--points", required=True,
                      help="comma-separated values, integers or 'inf'")
    p_st.set_defaults(func=_cmd_stabilizer)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "conic" and args.degree_bound is None:
        args.degree_bound = 4 if args.action == "decide" else 2
    try:
        return args.func(args)
    except XratioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
