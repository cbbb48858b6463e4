"""``symclass`` command line.

Exit status is 0 on success, 1 when a verification suite fails and 2 on
usage errors.  Partition flags take comma-separated parts (``--rho 3,2``);
an empty string is the empty partition.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import classes, diffop, vertex, wick
from .combinat import as_partition, partition_key
from .group_algebra import (
    DEFAULT_MAX_N,
    class_decomposition,
    jm_elementary,
    jm_power_sum,
    structure_constants,
)
from .verify import SUITES, run_suite

OPERATORS = ("D", "D-bernoulli", "V", "W", "T", "T-mode", "H", "d", "dprime", "ddouble", "euler", "goulden")


class UsageError(Exception):
    pass


def partition_arg(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.replace(" ", ",").split(",") if x]
        return as_partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r} ({exc})") from None


def _class_label(mu) -> str:
    return "C_" + "".join(map(str, mu)) if all(p < 10 for p in mu) else "C_{" + ",".join(map(str, mu)) + "}"


def _classes_text(dec: dict) -> str:
    parts = []
    for mu, c in dec.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        parts.append(f"{sign} " + (_class_label(mu) if mag == 1 else f"{mag} {_class_label(mu)}"))
    if not parts:
        return "0"
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def _classes_json(dec: dict) -> list:
    return [{"class": list(mu), "coeff": str(c)} for mu, c in dec.items()]


def _a_json(coeffs: dict) -> list:
    return [
        {"kappa": list(k), "coeff": str(c)}
        for k, c in sorted(coeffs.items(), key=lambda kv: partition_key(kv[0]))
    ]


def _check_n(n: int, max_n: int) -> None:
    if n < 0:
        raise UsageError("n must be nonnegative")
    if n > max_n:
        raise UsageError(f"n={n} exceeds the oracle bound {max_n} (raise --max-n)")


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


# subcommands --------------------------------------------------------------------


def cmd_table(args) -> int:
    if args.max_m < 1:
        raise UsageError("--max-m must be >= 1")
    table = classes.jm_table(args.max_m)
    _emit(args, classes.table_to_json(table), classes.table_to_text(table))
    return 0


def cmd_powersum(args) -> int:
    _check_n(args.n, args.max_n)
    if args.m < 0:
        raise UsageError("--m must be nonnegative")
    elem = jm_elementary(args.n, args.m) if args.elementary else jm_power_sum(args.n, args.m)
    dec = class_decomposition(elem)
    name = "e" if args.elementary else "p"
    doc = {"n": args.n, "m": args.m, "function": name, "classes": _classes_json(dec)}
    _emit(args, doc, f"{name}_{args.m}(Xi_{args.n}) = {_classes_text(dec)}")
    return 0


def cmd_classprod(args) -> int:
    _check_n(args.n, args.max_n)
    for p in (args.alpha, args.beta):
        if sum(p) > args.n:
            raise UsageError(f"partition {list(p)} does not fit in S_{args.n}")
    dec = structure_constants(args.n, args.alpha, args.beta)
    doc = {"n": args.n, "alpha": list(args.alpha), "beta": list(args.beta), "classes": _classes_json(dec)}
    text = f"{_class_label(args.alpha)} * {_class_label(args.beta)} in S_{args.n} = {_classes_text(dec)}"
    _emit(args, doc, text)
    return 0


def cmd_expand(args) -> int:
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    check = [n for n in args.check_n or []]
    for n in check:
        _check_n(n, args.max_n)
    try:
        coeffs = classes.product_in_a(args.m, args.kappa, check_n=check)
    except classes.OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return 1
    doc = {"m": args.m, "kappa": list(args.kappa), "checked_n": check, "terms": _a_json(coeffs)}
    lhs = f"p_{args.m}(Xi)" + (f" x a_{''.join(map(str, args.kappa))}" if args.kappa else "")
    _emit(args, doc, f"{lhs} = {classes.format_row(coeffs)}")
    return 0


def cmd_astruct(args) -> int:
    try:
        coeffs = classes.a_structure(args.alpha, args.beta, offset=args.offset, max_n=args.max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except classes.OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return 1
    doc = {"alpha": list(args.alpha), "beta": list(args.beta), "terms": _a_json(coeffs)}
    label = lambda p: "a_" + ("".join(map(str, p)) or "0")
    _emit(args, doc, f"{label(args.alpha)} x {label(args.beta)} = {classes.format_row(coeffs)}")
    return 0


def _build_operator(args):
    name, k, N = args.name, args.k, args.max_deg
    if name == "D":
        return vertex.d_operator(k, N)
    if name == "D-bernoulli":
        return vertex.d_operator_bernoulli(k, N)
    if name == "V":
        return vertex.vertex_mode(k, N)
    if name == "W":
        return vertex.w_operator(k, N)
    if name == "T":
        return vertex.t_operator(k, N)
    if name == "T-mode":
        return vertex.t_mode(k, args.j, N)
    if name == "H":
        return wick.gps_operator(args.rho, N)
    if name in ("d", "dprime", "ddouble"):
        variant = {"d": "d", "dprime": "prime", "ddouble": "double"}[name]
        return diffop.virasoro_d(k, variant, N)
    if name == "euler":
        return diffop.euler(N)
    return diffop.goulden_closed(N)


def cmd_operator(args) -> int:
    try:
        op = _build_operator(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = op.to_json(ring_tag=True)
    _emit(args, doc, op.pretty())
    return 0


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, max_n=args.max_n, max_deg=args.max_deg)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"passed": ok, "reports": [r.to_json(args.timing) for r in reports]}, indent=2))
    else:
        print("\n".join(r.to_text(args.timing) for r in reports))
        print("ALL PASSED" if ok else "FAILURES PRESENT")
    return 0 if ok else 1


# parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symclass", description="Exact class algebra of the symmetric groups via differential operators."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="largest symmetric group used by the oracle")
        return p

    p = common(sub.add_parser("table", help="p_m of Jucys-Murphy elements in normalized classes"))
    p.add_argument("--max-m", type=int, default=6)
    p.set_defaults(func=cmd_table)

    p = common(sub.add_parser("powersum", help="p_m(Xi_n) as a combination of class sums"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--elementary", action="store_true", help="use e_m instead of p_m")
    p.set_defaults(func=cmd_powersum)

    p = common(sub.add_parser("classprod", help="structure constants C_alpha C_beta in S_n"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=partition_arg, required=True)
    p.add_argument("--beta", type=partition_arg, required=True)
    p.set_defaults(func=cmd_classprod)

    p = common(sub.add_parser("expand", help="p_m(Xi) a_kappa in normalized classes"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kappa", type=partition_arg, default=())
    p.add_argument("--check-n", type=int, nargs="*", help="cross-check against the oracle in these S_n")
    p.set_defaults(func=cmd_expand)

    p = common(sub.add_parser("astruct", help="a_alpha a_beta in normalized classes"))
    p.add_argument("--alpha", type=partition_arg, required=True)
    p.add_argument("--beta", type=partition_arg, required=True)
    p.add_argument("--offset", type=int, default=0, help="shift of the interpolation window in n")
    p.set_defaults(func=cmd_astruct)

    p = common(sub.add_parser("operator", help="dump a differential operator"))
    p.add_argument("--name", choices=OPERATORS, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--j", type=int, default=0, help="t-mode index for T-mode")
    p.add_argument("--rho", type=partition_arg, default=(2,))
    p.add_argument("--max-deg", type=int, default=4)
    p.set_defaults(func=cmd_operator)

    p = common(sub.add_parser("verify", help="run verification suites"))
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--max-deg", type=int, default=8)
    p.add_argument("--timing", action="store_true", help="report wall time (output no longer reproducible)")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"symclass: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
