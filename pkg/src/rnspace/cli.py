"""Command-line entry point: ``rnspace <command> ...``.

Exit status is 0 on success, 1 when a property check fails and 2 on any
usage, parse or range error.
"""
from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from . import checks
from .arith import (UnsupportedOperation, add_trace, cn_add, cn_exact_product,
                    cn_mul, mul_trace, parse_complex, sub_trace)
from .core import (RnError, RnParams, enumerate_values, hierarchy_reading,
                   level_unit, parse_literal, value_of)
from .figures import figure_csv, ratio
from .oracle import DEFAULT_CAP, window_size
from .space import distinguishability_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _params(n: int) -> RnParams:
    if n < 1:
        raise UsageError("--n must be at least 1")
    return RnParams(n)


def _range(e_min: int, e_max: int) -> None:
    if e_min > e_max:
        raise UsageError(f"empty exponent range: --e-min {e_min} > --e-max {e_max}")


def cmd_enum(args, out):
    p = _params(args.n)
    _range(args.e_min, args.e_max)
    if window_size(p, args.e_min, args.e_max, args.signed) > DEFAULT_CAP:
        raise UsageError(f"enumeration exceeds {DEFAULT_CAP} values")
    xs = enumerate_values(p, args.e_min, args.e_max, args.signed)
    rows = [(str(x), ratio(value_of(x)), str(x.exp)) for x in xs]
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(("literal", "value", "exponent"))
        writer.writerows(rows)
    else:
        widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in
                  enumerate(("literal", "value", "exponent"))]
        out.write("  ".join(h.ljust(w) for h, w in zip(("literal", "value", "exponent"), widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    return EXIT_OK


def cmd_arith(args, out):
    p = _params(args.n)
    op = args.op
    if op == "div":
        raise UnsupportedOperation("operation not defined in R_n")
    if op in ("add", "sub", "mul"):
        a, b = parse_literal(args.lhs, p), parse_literal(args.rhs, p)
        trace = {"add": add_trace, "sub": sub_trace, "mul": mul_trace}[op](a, b)
        out.write(f"result: {trace.result}\n")
        out.write(f"exact: {ratio(trace.exact)}\n")
        out.write(f"path: {trace.path}\n")
        return EXIT_OK
    if op in ("cadd", "cmul"):
        a, b = parse_complex(args.lhs, p), parse_complex(args.rhs, p)
        if op == "cadd":
            result = cn_add(a, b)
            exact = (value_of(a.re) + value_of(b.re), value_of(a.im) + value_of(b.im))
        else:
            result = cn_mul(a, b)
            exact = cn_exact_product(a, b)
        out.write(f"result: {result}\n")
        out.write(f"exact: ({ratio(exact[0])},{ratio(exact[1])})\n")
        out.write(f"path: {'componentwise add' if op == 'cadd' else 'exact product, one rounding per part'}\n")
        return EXIT_OK
    raise UsageError(f"unknown operation {op!r}; choose add, sub, mul, cadd or cmul")


def cmd_fig(args, out):
    p = _params(args.n)
    _range(args.e_min, args.e_max)
    if args.which == "fig4" and args.j not in (1, -1):
        raise UsageError("fig4 requires --j 1 or --j -1")
    text = figure_csv(args.which, p, args.e_min, args.e_max, args.j)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_hierarchy(args, out):
    p = _params(args.n)
    try:
        q = Fraction(args.value)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse value {args.value!r}") from None
    if q < 0:
        raise UsageError("--value must be non-negative")
    reading = hierarchy_reading(q, args.level, p, args.base)
    out.write(f"reading: {reading}\n")
    out.write(f"unit: {ratio(level_unit(args.level, p.n, args.base))}\n")
    return EXIT_OK


def cmd_check(args, out):
    _range(*args.e_range)
    for n in args.n:
        _params(n)
    suites = list(checks.SUITES) if args.suite == "all" else [args.suite]
    results = checks.run(suites, args.n, *args.e_range)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.ok for r in results)
    out.write(f"summary: {len(results) - failed} passed, {failed} failed\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_report(args, out):
    _params(args.n)
    for line in distinguishability_report(args.n).lines():
        out.write(line + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rnspace", description="R_n finite-string numbers and R_n space")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enum", help="list elements of R_n in order")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--e-min", type=int, default=-1)
    p.add_argument("--e-max", type=int, default=1)
    p.add_argument("--signed", action="store_true")
    p.add_argument("--format", choices=("csv", "table"), default="csv")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("arith", help="evaluate one R_n or C_n operation")
    p.add_argument("op")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_arith)

    p = sub.add_parser("fig", help="emit figure data as CSV")
    p.add_argument("which", choices=("fig1", "fig2", "fig4"))
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--e-min", type=int, default=-1)
    p.add_argument("--e-max", type=int, default=1)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fig)

    p = sub.add_parser("hierarchy", help="read a value on a level of the dial hierarchy")
    p.add_argument("--value", required=True)
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--base", type=int, default=10)
    p.set_defaults(func=cmd_hierarchy)

    p = sub.add_parser("check", help="run property suites")
    p.add_argument("--n", type=int, nargs="+", default=[1])
    p.add_argument("--e-range", type=int, nargs=2, default=[-4, 4], metavar=("E_MIN", "E_MAX"))
    p.add_argument("--suite", choices=("order", "arith", "space", "all"), default="all")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("report", help="distinguishability report for a given n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (RnError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
