"""Command line interface.

Exit status: 0 on success, 1 for bad arguments or values outside a formula's
domain, 2 for internal integrity failures (an exact computation that should
have produced an integer did not, or a verification run found a mismatch).
Values go to stdout, one per line; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import irreps, newforms, verification
from .arithmetic import is_prime, parse_square_free_level
from .dimensions import (
    dim_full_level,
    dim_gamma0,
    dim_paramodular_weight4,
    dim_principal_level,
)
from .errors import InputError, IntegralityError, NotTabulatedError
from .tables import FORMATS, TableSpec, emit_table


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _parse_weights(text: str) -> tuple[int, ...]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise InputError(f"weight range must look like A..B, got {text!r}")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise InputError(f"weight range must look like A..B, got {text!r}") from None
    if a > b:
        raise InputError(f"empty weight range {text!r}")
    return tuple(range(a, b + 1))


def _parse_levels(text: str) -> tuple[int, ...]:
    try:
        levels = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"levels must be a comma-separated list of integers, got {text!r}") from None
    if not levels:
        raise InputError("empty level list")
    return levels


def build_parser() -> _Parser:
    parser = _Parser(prog="siegel-dims", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_weight_flags(p, single_only=False):
        p.add_argument("--weight", type=int, help="a single weight k")
        if not single_only:
            p.add_argument("--weights", help="inclusive weight range A..B")

    def add_level_flags(p, single_only=False):
        p.add_argument("--level", type=int, help="a single level N")
        if not single_only:
            p.add_argument("--levels", help="comma-separated levels L1,L2,...")

    p_dim = sub.add_parser("dim", help="one dimension value")
    p_dim.add_argument("--family", required=True,
                       choices=("full", "gamma0", "paramodular", "principal"))
    add_weight_flags(p_dim, single_only=True)
    add_level_flags(p_dim, single_only=True)

    p_table = sub.add_parser("table", help="a dimension table")
    p_table.add_argument("--family", required=True,
                         choices=("full", "gamma0", "paramodular", "principal"))
    add_weight_flags(p_table)
    add_level_flags(p_table)
    p_table.add_argument("--format", default="text", choices=FORMATS)
    p_table.add_argument("--group-digits", action="store_true",
                         help="comma-group big integers (text format only)")

    p_bounds = sub.add_parser("bounds", help="newform dimension bounds")
    p_bounds.add_argument("--weight", type=int, required=True)
    p_bounds.add_argument("--level", type=int, required=True)
    p_bounds.add_argument("--integer-envelope", action="store_true",
                          help="print ceil(lower) and floor(upper) instead of fractions")

    p_dec = sub.add_parser("decompose", help="all multiplicity vectors reaching a target")
    p_dec.add_argument("--prime", type=int, required=True)
    p_dec.add_argument("--target", type=int, required=True)
    p_dec.add_argument("--include-nonunitary", action="store_true")
    p_dec.add_argument("--max-solutions", type=int, default=newforms.DEFAULT_SOLUTION_CAP)
    p_dec.add_argument("--format", default="text", choices=("text", "json"))

    p_an = sub.add_parser("analyze", help="dimension, bounds and decomposition report")
    p_an.add_argument("--weight", type=int, required=True)
    p_an.add_argument("--prime", type=int, required=True)
    p_an.add_argument("--max-solutions", type=int, default=newforms.DEFAULT_SOLUTION_CAP)
    p_an.add_argument("--format", default="text", choices=("text", "json"))

    p_ir = sub.add_parser("irreps", help="the GSp(4,F_p) character degree table at p")
    p_ir.add_argument("--prime", type=int, required=True)
    p_ir.add_argument("--format", default="text", choices=FORMATS)

    p_ver = sub.add_parser("verify", help="recompute every reference value")
    p_ver.add_argument("--format", default="text", choices=("text", "json"))

    return parser


def _cmd_dim(args) -> int:
    family = args.family
    if family == "full":
        if args.level is not None:
            raise InputError("the full modular group takes no level")
        if args.weight is None:
            raise InputError("--weight is required")
        value = dim_full_level(args.weight)
    elif family == "gamma0":
        if args.weight is None or args.level is None:
            raise InputError("--weight and --level are required")
        value = dim_gamma0(args.weight, args.level)
    elif family == "paramodular":
        if args.level is None:
            raise InputError("--level is required")
        if args.weight not in (None, 4):
            raise NotTabulatedError("paramodular dimensions are implemented at weight 4 only")
        value = dim_paramodular_weight4(args.level)
    else:
        if args.weight is None or args.level is None:
            raise InputError("--weight and --level are required")
        value = dim_principal_level(args.weight, args.level)
    print(value)
    return 0


def _resolve_axis(single, many, parse):
    if single is not None and many:
        raise InputError("give either the single flag or the range flag, not both")
    if single is not None:
        return (single,)
    if many:
        return parse(many)
    return ()


def _cmd_table(args) -> int:
    spec = TableSpec(
        family=args.family,
        weights=_resolve_axis(args.weight, args.weights, _parse_weights),
        levels=_resolve_axis(args.level, args.levels, _parse_levels),
        fmt=args.format,
        group_digits=args.group_digits,
    )
    sys.stdout.write(emit_table(spec))
    return 0


def _cmd_bounds(args) -> int:
    if is_prime(args.level):
        pair = newforms.bounds_prime(args.weight, args.level)
    else:
        pair = newforms.bounds_squarefree(args.weight, parse_square_free_level(args.level))
    if args.integer_envelope:
        lo, hi = pair.integer_envelope()
        print(lo)
        print(hi)
    else:
        print(_fraction(pair.lower))
        print(_fraction(pair.upper))
    return 0


def _format_solution(sol: newforms.Decomposition) -> str:
    nonzero = sol.nonzero()
    if not nonzero:
        return "trivial"
    return " ".join(f"c{n}={c}" for n, c in sorted(nonzero.items()))


def _cmd_decompose(args) -> int:
    solutions = newforms.decompose(
        args.prime, args.target,
        include_nonunitary=args.include_nonunitary,
        max_solutions=args.max_solutions,
    )
    if args.format == "json":
        payload = {
            "prime": args.prime,
            "target": args.target,
            "include_nonunitary": args.include_nonunitary,
            "count": len(solutions),
            "solutions": [
                {str(n): c for n, c in sol.multiplicities.items()} for sol in solutions
            ],
        }
        print(json.dumps(payload))
    else:
        for sol in solutions:
            print(_format_solution(sol))
        print(f"{len(solutions)} solution(s)", file=sys.stderr)
    return 0


def _cmd_analyze(args) -> int:
    report = newforms.analyze_level(args.weight, args.prime, max_solutions=args.max_solutions)
    if args.format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(report.to_text())
    return 0


def _cmd_irreps(args) -> int:
    rows = irreps.table_at(args.prime)
    fmt = args.format
    if fmt == "json":
        print(json.dumps(rows))
    elif fmt == "csv":
        print("index,formula,dimension,unitary_relevant")
        for r in rows:
            print(f"{r['index']},{r['formula']},{r['dimension']},{str(r['unitary_relevant']).lower()}")
    elif fmt == "latex":
        print("\\begin{tabular}{|l|l|l|l|}")
        print("\\hline")
        print("index & degree & value & unitary \\\\")
        print("\\hline\\hline")
        for r in rows:
            unitary = "yes" if r["unitary_relevant"] else "no"
            print(f"$a_{{{r['index']}}}(p)$ & ${r['formula']}$ & {r['dimension']} & {unitary} \\\\")
        print("\\hline")
        print("\\end{tabular}")
    else:
        width = max(len(r["formula"]) for r in rows)
        for r in rows:
            unitary = "" if r["unitary_relevant"] else "  (non-unitary)"
            print(f"a{r['index']:<3} {r['formula']:<{width}} {r['dimension']}{unitary}")
    return 0


def _cmd_verify(args) -> int:
    report = verification.run_all_checks()
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    if not report.passed:
        print(f"{len(report.failures)} reference check(s) failed", file=sys.stderr)
        return 2
    return 0


_HANDLERS = {
    "dim": _cmd_dim,
    "table": _cmd_table,
    "bounds": _cmd_bounds,
    "decompose": _cmd_decompose,
    "analyze": _cmd_analyze,
    "irreps": _cmd_irreps,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except SystemExit as exc:  # argparse usage errors and --help
        code = exc.code
        return code if isinstance(code, int) else 1
    except IntegralityError as exc:
        print(f"internal integrity failure: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
