"""Command-line interface.

Subcommands: decide (with --witness / --solvable), porteous, decompose,
units, graded-action, hall-basis, no-cert, demo. Input is a JSON object read
from a file argument or stdin; output is JSON with a stable field order, or
a human-readable table with --pretty.

Exit codes: 0 decided, 2 invalid input, 3 undecided at the working numeric
precision.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decider import (
    decide,
    decide_solvable,
    decide_with_witness,
    demo,
    no_certificate_search,
    porteous_flat,
)
from .fingrp import DEFAULT_MAX_ORDER, group_rep_from_json_obj
from .freenilp import graded_action, hall_basis, tree_str
from .hyper import DEFAULT_PRECISION_BITS, PrecisionError
from .intpoly import IntPoly, poly_from_json_obj
from .numfield import (
    cyclotomic_field,
    make_field,
    search_c_hyperbolic_unit,
    unit_generators_for_field,
)
from .ratmat import RatMatrix
from .repdec import decompose, decomposition_report


def _read_json_input(path: str | None):
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return json.loads(text)


def _emit(obj, pretty: bool) -> None:
    if pretty:
        print(_pretty(obj))
    else:
        print(json.dumps(obj, indent=2))


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key, value in obj.items():
            if (
                isinstance(value, (dict, list))
                and value
                and not _is_matrix_literal(value)
                and not _is_scalar_list(value)
            ):
                lines.append(f"{pad}{key}:")
                lines.append(_pretty(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_fmt_scalar(value)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if _is_matrix_literal(obj):
            return "\n".join(pad + "[" + "  ".join(str(x) for x in row) + "]" for row in obj)
        return "\n".join(_pretty(item, indent) if isinstance(item, (dict, list)) else pad + str(item) for item in obj)
    return pad + str(obj)


def _is_matrix_literal(value) -> bool:
    return (
        isinstance(value, list)
        and value
        and all(isinstance(r, list) and r and all(isinstance(x, (str, int)) for x in r) for r in value)
    )


def _is_scalar_list(value) -> bool:
    return isinstance(value, list) and all(
        isinstance(x, (str, int, float, bool)) for x in value
    )


def _fmt_scalar(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(x) for x in value) + "]"
    if isinstance(value, dict):
        return json.dumps(value)
    return str(value)


def _load_rep(args):
    obj = _read_json_input(getattr(args, "input", None))
    group, rep, class_c = group_rep_from_json_obj(obj, max_order=args.max_order)
    c = args.class_c if args.class_c is not None else class_c
    return rep, c


def _require_class(c) -> int:
    if c is None:
        raise ValueError("nilpotency class required: pass --class or a \"class\" field")
    return c


def cmd_decide(args) -> None:
    rep, c = _load_rep(args)
    c = _require_class(c)
    if args.solvable is not None:
        verdict = decide_solvable(rep, c, args.solvable, args.seed)
    elif args.witness:
        verdict = decide_with_witness(rep, c, args.seed, precision_bits=args.precision_bits)
    else:
        verdict = decide(rep, c, args.seed)
    _emit(verdict.to_json_obj(), args.pretty)


def cmd_porteous(args) -> None:
    rep, _ = _load_rep(args)
    _emit(porteous_flat(rep, args.seed).to_json_obj(), args.pretty)


def cmd_decompose(args) -> None:
    rep, _ = _load_rep(args)
    _emit(decomposition_report(decompose(rep, args.seed)), args.pretty)


def cmd_no_cert(args) -> None:
    rep, c = _load_rep(args)
    c = _require_class(c)
    _emit(no_certificate_search(rep, c, args.height_bound, args.seed), args.pretty)


def cmd_units(args) -> None:
    request = {}
    if args.input:
        request = _read_json_input(args.input)
    if args.sqrt is not None:
        request["field"] = f"sqrt {args.sqrt}"
    if args.zeta is not None:
        request["field"] = f"zeta {args.zeta}"
    if args.min_poly is not None:
        request["min_poly"] = json.loads(args.min_poly)
    if args.class_c is not None:
        request["c"] = args.class_c
    if args.bound is not None:
        request["bound"] = args.bound
    c = int(request.get("c", 1))
    bound = int(request.get("bound", 10))
    if "min_poly" in request:
        field = make_field(poly_from_json_obj(request["min_poly"]), args.precision_bits)
    elif "field" in request:
        kind, _, value = str(request["field"]).partition(" ")
        d = int(value)
        if kind == "sqrt":
            field = make_field(IntPoly((-d, 0, 1)), args.precision_bits)
        elif kind == "zeta":
            field = cyclotomic_field(d, args.precision_bits)
        else:
            raise ValueError('field must be "sqrt d" or "zeta d"')
    else:
        raise ValueError("units needs a min_poly or a field description")
    generators = unit_generators_for_field(field)
    outcome = search_c_hyperbolic_unit(field, generators, c, bound)
    result = {
        "field_min_poly": [str(x) for x in field.min_poly.coeffs],
        "signature": list(field.signature),
        "c": c,
        "bound": bound,
        "found": outcome.found,
        "reason": outcome.reason,
        "candidates_screened": outcome.candidates_screened,
    }
    if outcome.found:
        result["unit"] = outcome.unit.to_json_obj()
        result["exponents"] = list(outcome.exponents)
        result["certified_exact"] = outcome.report.certified_exact
    _emit(result, args.pretty)


def cmd_graded_action(args) -> None:
    obj = _read_json_input(args.input)
    r, c = int(obj["r"]), int(obj["class"] if "class" in obj else obj["c"])
    matrix = RatMatrix.from_json_obj(obj["matrix"])
    basis = hall_basis(r, c)
    out = {"r": r, "class": c, "degree_dims": basis.degree_dims(), "actions": []}
    for degree in range(1, c + 1):
        action = graded_action(matrix, basis, degree)
        out["actions"].append(
            {
                "degree": degree,
                "basis": [tree_str(t) for t in action.basis_elements],
                "matrix": action.matrix.to_json_obj(),
            }
        )
    _emit(out, args.pretty)


def cmd_hall_basis(args) -> None:
    basis = hall_basis(args.r, args.class_c)
    out = {
        "r": args.r,
        "class": args.class_c,
        "degree_dims": basis.degree_dims(),
        "elements": {
            str(d): [tree_str(t) for t in basis.elements(d)] for d in range(1, args.class_c + 1)
        },
    }
    _emit(out, args.pretty)


def cmd_demo(args) -> None:
    _emit(demo(args.name, args.seed), args.pretty)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anosov",
        description="Decide whether an infra-nilmanifold holonomy datum admits an "
        "Anosov diffeomorphism, and construct verified witness matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default=None, help="JSON file, or - for stdin")
        p.add_argument("--class", dest="class_c", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS)
        p.add_argument("--height-bound", type=int, default=5)
        p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
        p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("decide", help="run the component criterion")
    add_common(p)
    p.add_argument("--witness", action="store_true", help="construct a verified witness on YES")
    p.add_argument("--solvable", type=int, default=None, metavar="D", help="solvable-model metadata")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("porteous", help="the flat c = 1 criterion")
    add_common(p)
    p.set_defaults(func=cmd_porteous)

    p = sub.add_parser("decompose", help="report the Q-irreducible component profiles")
    add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("no-cert", help="exhaustive empty-search report for NO verdicts")
    add_common(p)
    p.set_defaults(func=cmd_no_cert)

    p = sub.add_parser("units", help="search a number field for c-hyperbolic units")
    add_common(p)
    p.add_argument("--sqrt", type=int, default=None, metavar="D")
    p.add_argument("--zeta", type=int, default=None, metavar="D")
    p.add_argument("--min-poly", type=str, default=None, help='ascending coefficients, e.g. "[-1,-1,1]"')
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_units)

    p = sub.add_parser("graded-action", help="induced action on the free nilpotent gradeds")
    add_common(p)
    p.set_defaults(func=cmd_graded_action)

    p = sub.add_parser("hall-basis", help="Hall basis dimensions and elements")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--class", dest="class_c", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_hall_basis)

    p = sub.add_parser("demo", help="run a named corpus entry")
    p.add_argument("name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except PrecisionError as exc:
        print(f"undecided at working precision: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
