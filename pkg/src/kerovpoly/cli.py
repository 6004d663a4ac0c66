"""Command-line interface.

Exit codes: 0 on success or a passing suite, 1 on a failing suite, 2 on a
usage error.  Documents go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import engine, oracle, verify
from .render import (
    poly_to_json,
    rational_latex,
    rational_str,
    render_poly,
    result_lines,
    result_to_json,
    total_line,
)
from .symfun import validate_partition


def _partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        raise argparse.ArgumentTypeError("partition must be non-empty, e.g. 4,3,3,3,1")
    try:
        parts = [int(p) for p in text.split(",")]
        return validate_partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed partition {text!r}: {exc}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {value}")
    return value


def _even(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0 or value % 2:
        raise argparse.ArgumentTypeError(f"grade must be a non-negative even integer: {value}")
    return value


def _dump(doc) -> str:
    return json.dumps(doc, indent=2)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kerov", description="Kerov character polynomials in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", help="one character polynomial or one graded piece")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--grade", type=_even, help="print only Sigma_{k,grade}")
    p.add_argument("--basis", choices=("R", "C"), default="R")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("table", help="character polynomials for a range of k")
    p.add_argument("--k-min", type=_positive, default=1)
    p.add_argument("--k-max", type=_positive, required=True)
    p.add_argument("--basis", choices=("R", "C"), default="C")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("cumulants", help="free cumulants R_1..R_max of a Young diagram")
    p.add_argument("partition", type=_partition)
    p.add_argument("--max", type=_positive, default=None, help="largest index (default |partition| + 1)")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("character", help="irreducible, normalized or central character")
    p.add_argument("partition", type=_partition)
    p.add_argument("--class", dest="cycle_type", type=_partition, help="cycle type of the class")
    p.add_argument("--k", type=_positive, help="evaluate on the class k 1^(n-k)")
    p.add_argument("--kind", choices=("irreducible", "normalized", "central"), default="irreducible")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--max-n", type=_positive, default=verify.DEFAULT_MAX_N)
    p.add_argument("--max-k", type=_positive, default=None)
    p.add_argument("--max-k-cycles", type=_positive, default=8)
    p.add_argument("--basis", choices=("R", "C"), default="C")
    p.add_argument("--grade", type=_even, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def cmd_sigma(args) -> str:
    res = engine.sigma(args.k, args.basis)
    if args.grade is not None:
        piece = res.piece(args.grade)
        if args.format == "json":
            return _dump({"k": args.k, "grade": args.grade, **poly_to_json(piece)})
        return render_poly(piece, args.format)
    if args.format == "json":
        return _dump(result_to_json(res))
    return "\n".join(result_lines(res, args.format))


def cmd_table(args) -> str:
    ks = range(args.k_min, args.k_max + 1)
    results = [engine.sigma(k, args.basis) for k in ks]
    if args.format == "json":
        return _dump([result_to_json(r) for r in results])
    lines = [total_line(r, args.format) for r in results]
    if args.format == "latex":
        return "\n".join([r"\begin{eqnarray*}", *lines, r"\end{eqnarray*}"])
    return "\n".join(lines)


def cmd_cumulants(args) -> str:
    top = args.max if args.max is not None else sum(args.partition) + 1
    values = oracle.free_cumulants(oracle.profile(args.partition), top)
    if args.format == "json":
        return _dump(
            {
                "partition": list(args.partition),
                "cumulants": [{"index": i, "value": rational_str(v)} for i, v in enumerate(values, 1)],
            }
        )
    if args.format == "latex":
        return "\n".join(rf"R_{{{i}}} = {rational_latex(v)}" for i, v in enumerate(values, 1))
    return "\n".join(f"R_{i} = {v}" for i, v in enumerate(values, 1))


def cmd_character(args, parser) -> str:
    omega = args.partition
    n = sum(omega)
    if (args.k is None) == (args.cycle_type is None):
        parser.error("give exactly one of --class and --k")
    cls = args.cycle_type if args.cycle_type is not None else (args.k,) + (1,) * (n - args.k)
    if sum(cls) != n:
        parser.error(f"class {cls} is not a partition of {n}")
    if args.kind == "irreducible":
        value = oracle.mn_character(omega, cls)
    elif args.kind == "central":
        value = oracle.central_character(omega, cls)
    else:
        if cls[1:] != (1,) * (len(cls) - 1):
            parser.error("the normalized character is defined on classes k 1^(n-k)")
        value = oracle.normalized_character(omega, cls[0])
    if args.format == "json":
        return _dump({"partition": list(omega), "class": list(cls), "kind": args.kind, "value": rational_str(value)})
    return str(value)


def cmd_verify(args) -> tuple[str, int]:
    if args.suite == "characters":
        report = verify.verify_character_identity(args.max_n)
    elif args.suite == "cross":
        report = verify.verify_cross_formulas(args.max_k or verify.DEFAULT_MAX_K_CROSS)
    elif args.suite == "closed":
        report = verify.verify_closed_forms(args.max_k or 15, args.max_k_cycles)
    else:
        report = verify.verify_positivity(args.max_k or verify.DEFAULT_MAX_K_POSITIVITY, args.basis, args.grade)
    print(f"{report.suite}: {report.timing:.2f}s", file=sys.stderr)
    if args.format == "json":
        text = _dump(report.to_dict())
    else:
        params = ", ".join(f"{k}={v}" for k, v in report.parameters.items())
        lines = [f"{report.suite} ({params}): {report.status}, {report.checked} checks, {len(report.counterexamples)} counterexamples"]
        for ce in report.counterexamples:
            lines.append(f"  {ce['inputs']}: expected {ce['expected']}, got {ce['actual']}")
        text = "\n".join(lines)
    return text, 0 if report.passed else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = 0
    if args.command == "sigma":
        out = cmd_sigma(args)
    elif args.command == "table":
        if args.k_min > args.k_max:
            parser.error("--k-min exceeds --k-max")
        out = cmd_table(args)
    elif args.command == "cumulants":
        out = cmd_cumulants(args)
    elif args.command == "character":
        out = cmd_character(args, parser)
    else:
        out, code = cmd_verify(args)
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
