"""``boolmeter`` command line.

Exit codes: 0 success (or every checked instance holds), 1 a claim or
invariant is violated, 2 usage, budget or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from ._parallel import ENV_THREADS
from .blocks import (REGIMES, STANDARD, BudgetExceeded, block_budget, minimal_blocks,
                     set_block_budget)
from .core import ArityError, compose, iterate, max_arity, parse_function, set_max_arity
from .measures import MEASURES, argmax, fmt, full_report, measure_at
from .poly import PLUS_MINUS, ZERO_ONE, degree, fourier_transform, mobius_transform, sparsity

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _point(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an input index: {text!r}") from None


def _bit(text: str) -> int:
    if text not in ("0", "1"):
        raise argparse.ArgumentTypeError("z must be 0 or 1")
    return int(text)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _pair(text: str) -> tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("pair must look like M1,M2")
    return parts[0].strip(), parts[1].strip()


def _emit(obj, as_json: bool, text: str | None = None) -> None:
    if as_json:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    else:
        sys.stdout.write((text if text is not None else str(obj)) + "\n")


def _kv(pairs) -> str:
    return "\n".join(f"{k}\t{v}" for k, v in pairs)


# ---------------------------------------------------------------------------
# subcommands


def cmd_measure(args) -> int:
    f = parse_function(args.function)
    if args.at is not None:
        if not 0 <= args.at < f.size:
            raise UsageError(f"input {args.at} out of range for arity {f.n}")
        data = {"function_id": f.to_text(), "n": f.n, "x": f"{args.at:x}"}
        for m in MEASURES:
            data[m] = fmt(measure_at(f, args.at, m))
    elif args.z is not None:
        data = {"function_id": f.to_text(), "n": f.n, "z": args.z}
        for m in MEASURES:
            val, x = argmax(f, m, args.z)
            data[f"{m}^{args.z}"] = fmt(val)
            data[f"{m}^{args.z}.argmax"] = None if x is None else f"{x:x}"
    else:
        data = full_report(f, per_input=args.per_input).to_flat()
        for key, val in list(data.items()):
            if key.endswith(".argmax"):
                data[key] = None if val is None else f"{val:x}"
    text = _kv((k, "-" if v is None else (" ".join(v) if isinstance(v, list) else v))
               for k, v in data.items())
    _emit(data, args.json, text)
    return EXIT_OK


def cmd_poly(args) -> int:
    f = parse_function(args.function)
    p = mobius_transform(f) if args.basis == ZERO_ONE else fourier_transform(f)
    items = [(f"{s:x}", fmt(c)) for s, c in p.items()]
    empty_ok = args.basis == PLUS_MINUS
    data = {"function_id": f.to_text(), "basis": p.basis, "arity": p.arity,
            "coeffs": [{"mask": s, "coeff": c} for s, c in items],
            "spar": sparsity(p, include_empty=empty_ok), "deg": degree(p)}
    _emit(data, args.json, _kv(items) if items else "")
    return EXIT_OK


def cmd_blocks(args) -> int:
    f = parse_function(args.function)
    if not 0 <= args.x < f.size:
        raise UsageError(f"input {args.x} out of range for arity {f.n}")
    fam = minimal_blocks(f, args.x, args.regime)
    masks = [f"{b:x}" for b in fam.blocks]
    data = {"function_id": f.to_text(), "x": f"{args.x:x}", "regime": args.regime,
            "blocks": masks}
    _emit(data, args.json, "\n".join(masks))
    return EXIT_OK


def cmd_compose(args) -> int:
    f = parse_function(args.f)
    if args.iterate is not None:
        if args.g is not None:
            raise UsageError("give either G or --iterate, not both")
        h = iterate(f, args.iterate)
    else:
        if args.g is None:
            raise UsageError("compose needs G or --iterate L")
        h = compose(f, parse_function(args.g))
    _emit({"function_id": h.to_text(), "n": h.n}, args.json, h.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    from .theorems import CLAIMS, run_claim
    if args.claim not in CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; expected one of {', '.join(CLAIMS)}")
    params = {
        "f": parse_function(args.f) if args.f else None,
        "g": parse_function(args.g) if args.g else None,
        "z": args.z, "l": args.l, "x": args.x, "measure": args.measure,
        "alpha": args.alpha, "pair": args.pair, "lmax": args.lmax,
    }
    verdicts = run_claim(args.claim, params, args.threads)
    violated = [v for v in verdicts if not v.holds]
    skipped = sum(v.skipped for v in verdicts)
    summary = {"claim": args.claim, "instances": len(verdicts),
               "holds": len(verdicts) - len(violated) - skipped,
               "violated": len(violated), "skipped": skipped}
    if args.json:
        _emit({"summary": summary, "verdicts": [v.to_dict() for v in verdicts]}, True)
    else:
        lines = [v.line() for v in verdicts]
        lines.append(" ".join(f"{k}={v}" for k, v in summary.items()))
        _emit(None, False, "\n".join(lines))
    return EXIT_VIOLATED if violated else EXIT_OK


def cmd_scan(args) -> int:
    from .scan import scan
    summary = scan(args.n, args.cls, args.out, args.count, args.seed, args.threads)
    text = _kv([("class", summary["class"]), ("n", summary["n"]), ("added", summary["added"]),
                ("skipped", summary["skipped"]), ("records", summary["records"])]
               + [(f"max.{k}", v) for k, v in summary["maxima"].items()]
               + [("chain_violations", len(summary["chain_violations"]))])
    _emit(summary, args.json, text)
    return EXIT_VIOLATED if summary["chain_violations"] else EXIT_OK


def cmd_table(args) -> int:
    from .scan import exponent_table, format_table
    table = exponent_table(args.inp)
    cells = [{"row": c.row, "col": c.col,
              "exponent": None if c.exponent is None else f"{c.exponent:.12g}",
              "bound": c.bound, "within_bound": c.within_bound, "witness": c.witness}
             for c in table.values()]
    _emit(cells, args.json, format_table(table))
    return EXIT_OK if all(c.within_bound for c in table.values()) else EXIT_VIOLATED


# ---------------------------------------------------------------------------
# parser


def _global_options(parser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--threads", type=int, default=d(None),
                        help=f"worker processes (default: ${ENV_THREADS} or 1)")
    parser.add_argument("--max-arity", type=int, default=d(None),
                        help="largest arity any function may have (default 24)")
    parser.add_argument("--block-budget", type=int, default=d(None),
                        help="most candidate blocks examined at one input (default 2^26)")
    parser.add_argument("--json", action="store_true", default=d(False),
                        help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="boolmeter", description=__doc__.splitlines()[0])
    top.add_argument("--version", action="version", version=f"boolmeter {__version__}")
    _global_options(top, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", parents=[common], help="all measures of a function")
    p.add_argument("function", help="n:HEX literal or generator spec")
    p.add_argument("--at", type=_point, help="report measures at this input index")
    p.add_argument("--z", type=_bit, help="report M^z over inputs with f(x) = z")
    p.add_argument("--per-input", action="store_true", help="include per-input values")
    p.set_defaults(run=cmd_measure)

    p = sub.add_parser("poly", parents=[common], help="polynomial coefficients")
    p.add_argument("function")
    p.add_argument("--basis", choices=(ZERO_ONE, PLUS_MINUS), default=ZERO_ONE)
    p.set_defaults(run=cmd_poly)

    p = sub.add_parser("blocks", parents=[common], help="minimal sensitive blocks at an input")
    p.add_argument("function")
    p.add_argument("x", type=_point)
    p.add_argument("--regime", choices=REGIMES, default=STANDARD)
    p.set_defaults(run=cmd_blocks)

    p = sub.add_parser("compose", parents=[common], help="block composition or iteration")
    p.add_argument("f")
    p.add_argument("g", nargs="?")
    p.add_argument("--iterate", type=int, metavar="L")
    p.set_defaults(run=cmd_compose)

    p = sub.add_parser("verify", parents=[common], help="check a claim on an instance or sweep")
    p.add_argument("claim")
    p.add_argument("--f")
    p.add_argument("--g")
    p.add_argument("--z", type=_bit)
    p.add_argument("--l", type=int)
    p.add_argument("--x", type=_point)
    p.add_argument("--measure")
    p.add_argument("--alpha", type=_fraction)
    p.add_argument("--pair", type=_pair)
    p.add_argument("--lmax", type=int)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="measure a class into a CSV store")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_scan)

    p = sub.add_parser("table", parents=[common], help="empirical exponent table of a store")
    p.add_argument("--in", dest="inp", required=True)
    p.set_defaults(run=cmd_table)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is None:
        env = os.environ.get(ENV_THREADS)
        args.threads = int(env) if env and env.isdigit() else 1
    saved = max_arity(), block_budget()
    try:
        if args.max_arity is not None:
            set_max_arity(args.max_arity)
        if args.block_budget is not None:
            set_block_budget(args.block_budget)
        return args.run(args)
    except (UsageError, ValueError, ArityError, BudgetExceeded, IndexError,
            KeyError, OSError) as exc:
        sys.stderr.write(f"boolmeter: error: {exc}\n")
        return EXIT_USAGE
    finally:
        # limits are process-wide; keep in-process callers unaffected
        set_max_arity(saved[0])
        set_block_budget(saved[1])
        sys.stdout.flush()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
