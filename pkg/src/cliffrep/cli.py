"""Command-line interface.

Exit codes: 0 success, 1 parse/usage error, 2 math error (zero divisor /
singular matrix), 3 unsupported signature (degenerate where forbidden, or a
dimension cap exceeded).  Results go to stdout (or --output), errors to
stderr.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time

from .blades import Multivector, Signature, dual_blade
from .errors import (
    CapExceeded,
    CliffrepError,
    DegenerateSignature,
    IndexOutOfRange,
    ParseError,
    Singular,
    ZeroDenominator,
    ZeroDivisor,
)
from .expr import (
    format_multivector,
    format_mult_table,
    format_rep_matrix,
    format_scalar_table,
    parse,
    parse_matrix_text,
)
from .matrep import mv_inverse, rep_multivector, unrep
from .tables import (
    build_mult_table,
    build_scalar_table,
    check_table_lemmas,
)
from .matrep import verify_representation

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2
EXIT_UNSUPPORTED = 3


def _parse_sig(text: str) -> tuple[int, int, int]:
    """Syntactic validation only; Signature construction happens inside the
    command so that cap violations map to exit code 3, not usage errors."""
    parts = text.split(",")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError("signature must be p,q or p,q,r")
    try:
        nums = [int(x) for x in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad signature {text!r}") from exc
    if any(x < 0 for x in nums):
        raise argparse.ArgumentTypeError("signature components must be >= 0")
    return nums[0], nums[1], nums[2] if len(nums) == 3 else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffrep",
        description="Clifford algebra tables, matrix representations and "
        "exact multivector inversion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--sig", type=_parse_sig, required=True, metavar="p,q[,r]")
        p.add_argument(
            "--format",
            choices=["text", "csv", "latex", "json"],
            default="text",
            dest="fmt",
        )
        p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("table", help="print the multiplication table")
    common(p)

    p = sub.add_parser("gtable", help="print the scalar table diagonal")
    common(p)

    p = sub.add_parser("rep", help="representation matrix of an expression")
    common(p)
    p.add_argument("expr")

    p = sub.add_parser("unrep", help="recover a multivector from a matrix file")
    common(p)
    p.add_argument("matrix_file")

    p = sub.add_parser("mul", help="geometric product of two expressions")
    common(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("inv", help="inverse of a multivector")
    common(p)
    p.add_argument("expr")

    p = sub.add_parser("dual", help="blade-wise algebraical dual")
    common(p)
    p.add_argument("expr")

    p = sub.add_parser("verify", help="run table and representation checks")
    common(p)

    p = sub.add_parser("bench", help="blade-form vs matrix-form product timing")
    common(p)
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _require_nondegenerate(sig: Signature) -> None:
    if sig.degenerate:
        raise DegenerateSignature(f"{sig} is degenerate; this command needs r=0")


def _cmd_table(args) -> int:
    table = build_mult_table(args.sig)
    _emit(format_mult_table(table, args.fmt), args.output)
    return EXIT_OK


def _cmd_gtable(args) -> int:
    g = build_scalar_table(args.sig)
    _emit(format_scalar_table(g, args.fmt), args.output)
    return EXIT_OK


def _cmd_rep(args) -> int:
    _require_nondegenerate(args.sig)
    u = parse(args.expr, args.sig)
    _emit(format_rep_matrix(rep_multivector(u), args.fmt), args.output)
    return EXIT_OK


def _cmd_unrep(args) -> int:
    _require_nondegenerate(args.sig)
    with open(args.matrix_file) as fh:
        matrix = parse_matrix_text(args.sig, fh.read())
    u = unrep(args.sig, matrix)
    style = "latex" if args.fmt == "latex" else "plain"
    _emit(format_multivector(u, style) + "\n", args.output)
    return EXIT_OK


def _cmd_mul(args) -> int:
    u = parse(args.left, args.sig)
    v = parse(args.right, args.sig)
    style = "latex" if args.fmt == "latex" else "plain"
    _emit(format_multivector(u * v, style) + "\n", args.output)
    return EXIT_OK


def _cmd_inv(args) -> int:
    _require_nondegenerate(args.sig)
    u = parse(args.expr, args.sig)
    v = mv_inverse(u)
    style = "latex" if args.fmt == "latex" else "plain"
    _emit(format_multivector(v, style) + "\n", args.output)
    return EXIT_OK


def _cmd_dual(args) -> int:
    u = parse(args.expr, args.sig)
    n = args.sig.n
    out = Multivector.zero(args.sig)
    for _, mask, coeff in u.terms():
        out = out + Multivector.blade(args.sig, dual_blade(n, mask), coeff)
    style = "latex" if args.fmt == "latex" else "plain"
    _emit(format_multivector(out, style) + "\n", args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    table = build_mult_table(args.sig)
    g = build_scalar_table(args.sig)
    report = check_table_lemmas(table, g)
    chunks = [report.render()]
    all_ok = report.all_passed
    if not args.sig.degenerate:
        rep_report = verify_representation(args.sig)
        chunks.append(rep_report.render())
        all_ok = all_ok and rep_report.all_passed
    else:
        chunks.append(
            f"representation checks skipped: {args.sig} is degenerate"
        )
    _emit("\n".join(chunks) + "\n", args.output)
    return EXIT_OK if all_ok else EXIT_MATH


def _cmd_bench(args) -> int:
    _require_nondegenerate(args.sig)
    rng = random.Random(args.seed)
    sig = args.sig
    pairs = [
        (Multivector.random(sig, rng), Multivector.random(sig, rng))
        for _ in range(args.reps)
    ]
    blade_times = []
    for u, v in pairs:
        t0 = time.perf_counter()
        u * v
        blade_times.append(time.perf_counter() - t0)
    matrix_times = []
    for u, v in pairs:
        t0 = time.perf_counter()
        unrep(sig, rep_multivector(u) @ rep_multivector(v))
        matrix_times.append(time.perf_counter() - t0)
    lines = [
        f"bench {sig}, reps={args.reps}",
        f"blade form:  median {statistics.median(blade_times) * 1e6:.1f} us",
        f"matrix form: median {statistics.median(matrix_times) * 1e6:.1f} us",
    ]
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


_COMMANDS = {
    "table": _cmd_table,
    "gtable": _cmd_gtable,
    "rep": _cmd_rep,
    "unrep": _cmd_unrep,
    "mul": _cmd_mul,
    "inv": _cmd_inv,
    "dual": _cmd_dual,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        args.sig = Signature(*args.sig)
        return _COMMANDS[args.command](args)
    except (ParseError, IndexOutOfRange, ZeroDenominator) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ZeroDivisor, Singular) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (DegenerateSignature, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (OSError, ValueError, CliffrepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
