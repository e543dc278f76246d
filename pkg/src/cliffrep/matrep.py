"""Canonical matrix representation E_s = G A_s and exact multivector inversion.

Blade images are signed permutation matrices; the representation of a general
multivector is their rational linear combination.  Recovery goes through the
first row, and inversion goes through exact elimination on the matrix image.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .blades import (
    Multivector,
    Signature,
    blade_product,
    basis_ordinal,
    check_dense_cap,
    ordinal_to_indexset,
)
from .errors import DegenerateSignature, Singular, ZeroDivisor
from .tables import (
    MultTable,
    Report,
    ScalarTable,
    SparseSignedMatrix,
    build_mult_table,
    build_scalar_table,
    coefficient_matrix,
)


@dataclass(frozen=True)
class RepMatrix:
    """Dense 2^n x 2^n exact rational matrix tied to a signature."""

    sig: Signature
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        return self.entries[rc[0]][rc[1]]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.entries))
        rows = tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
            for r in self.entries
        )
        return RepMatrix(self.sig, rows)

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(
            self.sig,
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def scaled(self, factor: Fraction | int) -> "RepMatrix":
        return RepMatrix(
            self.sig, tuple(tuple(factor * x for x in r) for r in self.entries)
        )

    def transpose(self) -> "RepMatrix":
        return RepMatrix(self.sig, tuple(zip(*self.entries)))

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    @classmethod
    def from_rows(cls, sig: Signature, rows) -> "RepMatrix":
        return cls(sig, tuple(tuple(Fraction(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, sig: Signature) -> "RepMatrix":
        d = sig.dim
        return cls.from_rows(
            sig, [[1 if i == j else 0 for j in range(d)] for i in range(d)]
        )


class RepContext:
    """Caches the multiplication and scalar tables of one signature.

    The per-blade images are signed permutation matrices kept in sparse form;
    rep_blade densifies on demand.
    """

    def __init__(self, sig: Signature):
        if sig.degenerate:
            raise DegenerateSignature(
                f"{sig} has r={sig.r} > 0; the matrix representation "
                "requires a non-degenerate signature"
            )
        check_dense_cap(sig.n)
        self.sig = sig
        self.table: MultTable = build_mult_table(sig)
        self.gtable: ScalarTable = build_scalar_table(sig)

    @lru_cache(maxsize=None)
    def blade_image(self, s: int) -> SparseSignedMatrix:
        """E_s = G A_s in sparse signed-permutation form."""
        a_s = coefficient_matrix(self.table, s)
        signs = tuple(
            self.gtable[i + 1] * v for i, v in enumerate(a_s.signs)
        )
        return SparseSignedMatrix(a_s.dim, a_s.cols, signs)

    def coefficient(self, s: int) -> SparseSignedMatrix:
        return coefficient_matrix(self.table, s)


@lru_cache(maxsize=None)
def rep_context(sig: Signature) -> RepContext:
    return RepContext(sig)


def _dense(sig: Signature, sparse: SparseSignedMatrix) -> RepMatrix:
    return RepMatrix.from_rows(sig, sparse.to_dense())


def rep_blade(sig: Signature, s: int) -> RepMatrix:
    """Signed permutation matrix representing the basis blade at ordinal s."""
    ctx = rep_context(sig)
    if not 1 <= s <= sig.dim:
        raise ValueError(f"ordinal {s} outside 1..{sig.dim}")
    return _dense(sig, ctx.blade_image(s))


def rep_multivector(u: Multivector) -> RepMatrix:
    """Linear extension of rep_blade over the coefficients of u."""
    ctx = rep_context(u.sig)
    dim = u.sig.dim
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for ordinal, _, coeff in u.terms():
        image = ctx.blade_image(ordinal)
        for i, (c, sgn) in enumerate(zip(image.cols, image.signs)):
            rows[i][c] += coeff * sgn
    return RepMatrix.from_rows(u.sig, rows)


def unrep(sig: Signature, matrix: RepMatrix) -> Multivector:
    """Recover the multivector from the first row of its representation."""
    if matrix.dim != sig.dim:
        raise ValueError(f"matrix dimension {matrix.dim} != {sig.dim}")
    return Multivector(sig, matrix.row(0))


def matrix_inverse_exact(matrix: RepMatrix) -> RepMatrix:
    """Exact inverse by fraction-free elimination; raises Singular.

    Denominators are cleared first, then a Bareiss-style integer Gauss-Jordan
    runs on the augmented system with first-nonzero pivoting; the single
    division per entry happens at the end.
    """
    dim = matrix.dim
    scale = lcm(*(x.denominator for row in matrix.entries for x in row), 1)
    aug = [
        [int(x * scale) for x in row] + [scale if i == j else 0 for j in range(dim)]
        for i, row in enumerate(matrix.entries)
    ]
    prev = 1
    for k in range(dim):
        pivot_row = next(
            (i for i in range(k, dim) if aug[i][k] != 0), None
        )
        if pivot_row is None:
            raise Singular(f"matrix is rank-deficient at column {k}")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        piv = aug[k][k]
        for i in range(dim):
            if i == k:
                continue
            fac = aug[i][k]
            row_i, row_k = aug[i], aug[k]
            aug[i] = [(piv * a - fac * b) // prev for a, b in zip(row_i, row_k)]
        prev = piv
    det_like = aug[dim - 1][dim - 1]
    if det_like == 0:
        raise Singular("zero pivot at final column")
    rows = [
        [Fraction(aug[i][dim + j], aug[i][i]) for j in range(dim)]
        for i in range(dim)
    ]
    return RepMatrix.from_rows(matrix.sig, rows)


def mv_inverse(u: Multivector) -> Multivector:
    """Inverse of a multivector through its matrix image; verified exactly."""
    if u.is_zero():
        raise ZeroDivisor("the zero multivector has no inverse")
    image = rep_multivector(u)
    try:
        inv = matrix_inverse_exact(image)
    except Singular as exc:
        raise ZeroDivisor(f"{u!r} is a zero divisor: {exc}") from exc
    v = unrep(u.sig, inv)
    one = Multivector.scalar(u.sig, 1)
    if u * v != one or v * u != one:
        raise AssertionError("inverse verification failed; this is a bug")
    return v


# ---------------------------------------------------------------------------
# Representation verifier


def _sparse_eq(a: SparseSignedMatrix, b: SparseSignedMatrix) -> bool:
    return a.cols == b.cols and a.signs == b.signs


def _is_identity(m: SparseSignedMatrix) -> bool:
    return all(c == i and s == 1 for i, (c, s) in enumerate(zip(m.cols, m.signs)))


def verify_representation(sig: Signature) -> Report:
    """Check all structural identities of the blade images E_s.

    Families: blade squares, generator anticommutation, orthogonality,
    the G-transpose relation, the symmetry dichotomy, and the basis-pair
    homomorphism.  First failure coordinates go into the report.
    """
    ctx = rep_context(sig)
    g = ctx.gtable
    n = sig.n
    dim = sig.dim
    report = Report(f"representation checks for {sig}")

    images = [ctx.blade_image(s) for s in range(1, dim + 1)]
    coeffs = [ctx.coefficient(s) for s in range(1, dim + 1)]

    ok, where = True, ""
    for s in range(1, dim + 1):
        e = images[s - 1]
        sq = e @ e
        if not _sparse_eq(sq, _identity_sparse(dim).scaled(g[s])):
            ok, where = False, f"ordinal {s}"
            break
    report.add("E_s^2 = sigma_s I", ok, where)

    ok, where = True, ""
    for s in range(2, n + 2):
        for t in range(2, n + 2):
            if s == t:
                continue
            st = images[s - 1] @ images[t - 1]
            ts = images[t - 1] @ images[s - 1]
            if not _sparse_eq(st, ts.scaled(-1)):
                ok, where = False, f"generators {s - 1},{t - 1}"
                break
        if not ok:
            break
    report.add("generator images anticommute", ok, where)

    ok, where = True, ""
    for s in range(1, dim + 1):
        a = coeffs[s - 1]
        e = images[s - 1]
        if not (_is_identity(a.transpose() @ a) and _is_identity(e.transpose() @ e)):
            ok, where = False, f"ordinal {s}"
            break
    report.add("A_s and E_s orthogonal", ok, where)

    ok, where = True, ""
    g_sparse = SparseSignedMatrix(dim, tuple(range(dim)), g.diag)
    for s in range(1, dim + 1):
        a = coeffs[s - 1]
        lhs = g_sparse @ a
        rhs = (a.transpose() @ g_sparse).scaled(g[s])
        if not _sparse_eq(lhs, rhs):
            ok, where = False, f"ordinal {s}"
            break
    report.add("G A_s = sigma_s A_s^T G", ok, where)

    ok, where = True, ""
    for s in range(1, dim + 1):
        e = images[s - 1]
        if not _sparse_eq(e.transpose(), e.scaled(g[s])):
            ok, where = False, f"ordinal {s}"
            break
    report.add("E_s symmetric iff sigma_s=+1, antisymmetric iff -1", ok, where)

    ok, where = True, ""
    masks = [ordinal_to_indexset(n, j) for j in range(1, dim + 1)]
    for s in range(1, dim + 1):
        for t in range(1, dim + 1):
            sign, blade = blade_product(sig, masks[s - 1], masks[t - 1])
            expected = images[basis_ordinal(n, blade) - 1].scaled(sign)
            if not _sparse_eq(images[s - 1] @ images[t - 1], expected):
                ok, where = False, f"pair ({s},{t})"
                break
        if not ok:
            break
    report.add("basis-pair homomorphism", ok, where)

    return report


@lru_cache(maxsize=None)
def _identity_sparse(dim: int) -> SparseSignedMatrix:
    return SparseSignedMatrix(dim, tuple(range(dim)), (1,) * dim)
