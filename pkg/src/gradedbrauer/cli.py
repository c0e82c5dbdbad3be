"""Command-line front end: every computation in, JSON out.

Algebras are passed as compact shorthand (``form:1,-1``, ``end:2,1``,
``ground``, a path to a JSON file, or ``-`` for JSON on stdin), so
commands compose through pipes::

    gradedbrauer tensor form:1 form:1 | gradedbrauer invariants --algebra -

Exit codes: 0 on success, 2 on bad input (with a machine-readable
``{"error": ...}`` document), 1 on internal failure or selftest failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .algebra import (AlgebraError, GradedAlgebra, end_graded, graded_tensor,
                      ground_algebra, hat_center, is_azumaya, opposite)
from .clifford import DiagonalForm, clifford
from .groups import AbGroup
from .invariants import bw_class, invariant_triple
from .scalars import Field, field_from_label
from .selftest import run_selftest
from .spaces import (ComplexCurve, ComplexProjective, ComplexSurfaceWitt,
                     DescriptorError, FreeFourDim, FreeProduct, Graph,
                     RealCurve, RealProjective, RealSurfaceNoPoints,
                     SurfaceWithInvolution, TrivialAction, circle_reports,
                     compute_report, curve_reports, named_examples,
                     surface_reports)


def _parse_form(text: str, field: Field) -> DiagonalForm:
    entries = tuple(field.parse(part.strip()) for part in text.split(",") if part.strip())
    return DiagonalForm(entries, field)


def _parse_group(text: str) -> AbGroup:
    text = text.strip()
    if text in ("", "0", "1", "triv"):
        return AbGroup.trivial()
    return AbGroup.from_cyclics([int(part) for part in text.split(",")])


def _load_algebra(source: str, field: Field) -> GradedAlgebra:
    if source.startswith("form:"):
        return clifford(_parse_form(source[5:], field))
    if source.startswith("end:"):
        even, _, odd = source[4:].partition(",")
        return end_graded(int(even), int(odd or 0), field)
    if source == "ground":
        return ground_algebra(field)
    if source == "-":
        return GradedAlgebra.from_json(json.load(sys.stdin))
    with open(source, encoding="utf-8") as handle:
        return GradedAlgebra.from_json(json.load(handle))


def _algebra_from_args(args) -> GradedAlgebra:
    field = field_from_label(args.field)
    if getattr(args, "form", None) is not None:
        return clifford(_parse_form(args.form, field))
    if getattr(args, "algebra", None) is not None:
        return _load_algebra(args.algebra, field)
    raise ValueError("pass --form or --algebra")


# ---------------------------------------------------------------- handlers

def _cmd_clifford(args):
    field = field_from_label(args.field)
    return clifford(_parse_form(args.form, field)).to_json(), 0


def _cmd_tensor(args):
    field = field_from_label(args.field)
    left = _load_algebra(args.left, field)
    right = _load_algebra(args.right, field)
    return graded_tensor(left, right).to_json(), 0


def _cmd_invariants(args):
    a = _algebra_from_args(args)
    if args.opposite:
        a = opposite(a)
    parity, q2, ungraded = invariant_triple(a)
    return {"parity": parity, "q2": q2, "ungraded": ungraded,
            "bw": bw_class(a)}, 0


def _cmd_azumaya(args):
    return {"azumaya": is_azumaya(_algebra_from_args(args))}, 0


def _cmd_centralizer(args):
    return hat_center(_algebra_from_args(args)).to_json(), 0


_TABLES = {
    "circles": lambda: {name: r.to_json() for name, r in circle_reports().items()},
    "curves": lambda: {f"g={g},nu={nu}": r.to_json()
                       for (g, nu), r in curve_reports().items()},
    "surfaces": lambda: {f"g={g},nu={nu}": r.to_json()
                         for (g, nu), r in surface_reports().items()},
    "named": lambda: {name: r.to_json() for name, r in named_examples().items()},
}


def _cmd_table(args):
    return _TABLES[args.name](), 0


def _cmd_selftest(args):
    report = run_selftest(seed=args.seed)
    return report, 0 if report["passed"] else 1


def _descriptor_command(builder):
    def handler(args):
        if getattr(args, "table", None):
            return _TABLES[args.table](), 0
        if getattr(args, "kind", None) is None:
            raise ValueError("pass a descriptor kind or --table NAME")
        return compute_report(builder[args.kind](args)).to_json(), 0
    return handler


_SPACE_KINDS = {
    "trivial-action": lambda a: TrivialAction(
        b1=a.b1, b2=a.b2, bockstein_rank=a.bockstein, components=a.components),
    "free-product": lambda a: FreeProduct(
        h0=a.h0, h1=a.h1, h3_torsion=_parse_group(a.h3tors)),
    "graph": lambda a: Graph(fixed_components=a.nu, h1_quotient=a.h1quot),
    "surface": lambda a: SurfaceWithInvolution(genus=a.genus, fixed_circles=a.nu),
    "real-curve": lambda a: RealCurve(genus=a.genus, real_components=a.nu),
    "complex-curve": lambda a: ComplexCurve(h1=a.h1),
    "free-4d": lambda a: FreeFourDim(
        h1_quotient=a.h1quot, h1_quotient_reduced=a.h1quot_reduced,
        two_torsion_h3=a.two_tors_h3,
        h3_exponent_at_most_two=a.exponent_le_2),
}

_VARIETY_KINDS = {
    "complex-projective": lambda a: ComplexProjective(
        h0=a.h0, h1=a.h1, divisible_rank=a.rho,
        h3_torsion=_parse_group(a.h3tors)),
    "real-projective": lambda a: RealProjective(
        lefschetz_rank=a.rho0, real_brauer=_parse_group(a.rbr),
        h1_equivariant=a.h1g),
    "complex-surface-witt": lambda a: ComplexSurfaceWitt(
        divisible_rank=a.rho, h1=a.h1, two_torsion_h3=a.two_tors_h3),
    "real-surface-no-points": lambda a: RealSurfaceNoPoints(
        lefschetz_rank=a.rho0, two_torsion_brauer=a.two_tors_br,
        h1_quotient_reduced=a.h1quot_reduced),
}


def _add_algebra_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--form", help="diagonal form entries, e.g. 1,-1,2")
    parser.add_argument("--algebra",
                        help="algebra source: form:..., end:E,O, ground, a "
                             "JSON file path, or - for stdin")
    parser.add_argument("--field", default="R", choices=("R", "C"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedbrauer",
        description="Exact computations of graded Brauer classes at a point "
                    "and closed-form group tables for spaces with involution.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("clifford", help="Clifford algebra of a diagonal form")
    p.add_argument("--form", required=True)
    p.add_argument("--field", default="R", choices=("R", "C"))
    p.set_defaults(handler=_cmd_clifford)

    p = sub.add_parser("tensor", help="graded tensor product of two algebras")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--field", default="R", choices=("R", "C"))
    p.set_defaults(handler=_cmd_tensor)

    p = sub.add_parser("invariants",
                       help="parity, quadratic class, inertia and full class")
    _add_algebra_flags(p)
    p.add_argument("--opposite", action="store_true",
                   help="compute for the graded opposite algebra")
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser("azumaya", help="test the matrix-like condition")
    _add_algebra_flags(p)
    p.set_defaults(handler=_cmd_azumaya)

    p = sub.add_parser("centralizer",
                       help="rank-2 normal form of the graded center")
    _add_algebra_flags(p)
    p.set_defaults(handler=_cmd_centralizer)

    for name, kinds in (("space", _SPACE_KINDS), ("variety", _VARIETY_KINDS)):
        p = sub.add_parser(name, help=f"group report for a {name} descriptor")
        p.add_argument("--table", choices=tuple(_TABLES),
                       help="print a whole golden table instead")
        kind_sub = p.add_subparsers(dest="kind")
        for kind in kinds:
            kp = kind_sub.add_parser(kind)
            _add_descriptor_flags(kp, kind)
        p.set_defaults(handler=_descriptor_command(kinds))

    p = sub.add_parser("table", help="print a golden table")
    p.add_argument("name", choices=tuple(_TABLES))
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("selftest", help="run the built-in consistency checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_selftest)

    return parser


def _add_descriptor_flags(parser: argparse.ArgumentParser, kind: str) -> None:
    def flag(name: str, required: bool = True, default: Optional[int] = None,
             boolean: bool = False, group: bool = False) -> None:
        if boolean:
            parser.add_argument(f"--{name}", action="store_true")
        elif group:
            parser.add_argument(f"--{name}", default="",
                                help="cyclic orders, e.g. 4,2 (empty = trivial)")
        else:
            parser.add_argument(f"--{name}", type=int, required=required,
                                default=default)

    if kind == "trivial-action":
        flag("b1"), flag("b2")
        flag("bockstein", required=False, default=0)
        flag("components", required=False, default=1)
    elif kind == "free-product":
        flag("h0", required=False, default=1)
        flag("h1", required=False, default=0)
        flag("h3tors", group=True)
    elif kind == "graph":
        flag("nu"), flag("h1quot")
    elif kind in ("surface", "real-curve"):
        flag("genus"), flag("nu")
    elif kind == "complex-curve":
        flag("h1")
    elif kind == "free-4d":
        flag("h1quot"), flag("h1quot-reduced")
        flag("two-tors-h3", required=False, default=0)
        flag("exponent-le-2", boolean=True)
    elif kind == "complex-projective":
        flag("rho"), flag("h1")
        flag("h0", required=False, default=1)
        flag("h3tors", group=True)
    elif kind == "real-projective":
        flag("rho0"), flag("h1g")
        flag("rbr", group=True)
    elif kind == "complex-surface-witt":
        flag("rho"), flag("h1")
        flag("two-tors-h3", required=False, default=0)
    elif kind == "real-surface-no-points":
        flag("rho0"), flag("two-tors-br"), flag("h1quot-reduced")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, code = args.handler(args)
    except (AlgebraError, DescriptorError, ValueError, OSError, KeyError) as exc:
        json.dump({"error": {"type": type(exc).__name__, "message": str(exc)}},
                  sys.stdout)
        print()
        return 2
    except Exception as exc:  # noqa: BLE001 - report, then signal internal failure
        json.dump({"error": {"type": type(exc).__name__, "message": str(exc),
                             "internal": True}}, sys.stdout)
        print()
        return 1
    json.dump(payload, sys.stdout, indent=2)
    print()
    return code


if __name__ == "__main__":
    sys.exit(main())
