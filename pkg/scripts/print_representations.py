#!/usr/bin/env python3
"""Print the multiplication table, scalar table and the representation of
the general element for every non-degenerate signature up to a given n.

The general element is shown symbolically: cell (i, j) holds +-a_k, the
k-th coefficient of u = a_1 1 + a_2 e_1 + ... in graded-lex order.

Usage: python scripts/print_representations.py [--max-n 3] [--latex]
"""

import argparse

from cliffrep import (
    Multivector,
    Signature,
    build_mult_table,
    build_scalar_table,
    format_mult_table,
    format_scalar_table,
    rep_multivector,
)


def symbolic_pattern(sig: Signature) -> list[list[str]]:
    dim = sig.dim
    cells = [["0"] * dim for _ in range(dim)]
    for k in range(1, dim + 1):
        coeffs = [0] * dim
        coeffs[k - 1] = 1
        m = rep_multivector(Multivector(sig, coeffs))
        for i in range(dim):
            for j in range(dim):
                if m[i, j]:
                    cells[i][j] = f"{'-' if m[i, j] < 0 else ''}a{k}"
    return cells


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--latex", action="store_true")
    args = ap.parse_args()
    fmt = "latex" if args.latex else "text"

    for n in range(1, args.max_n + 1):
        for p in range(n, -1, -1):
            sig = Signature(p, n - p)
            print(f"=== {sig} ===")
            print(format_mult_table(build_mult_table(sig), fmt), end="")
            print("G:", format_scalar_table(build_scalar_table(sig), fmt), end="")
            cells = symbolic_pattern(sig)
            width = max(len(c) for row in cells for c in row)
            print("general element:")
            for row in cells:
                print("  " + "  ".join(c.rjust(width) for c in row))
            print()


if __name__ == "__main__":
    main()
