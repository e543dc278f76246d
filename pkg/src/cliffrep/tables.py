"""Multiplication table M, scalar table G, coefficient matrices A_s.

Also provides the structural lemma checker exposed by the CLI `verify`
command and the mirror (complement-blade) ordinal map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .blades import (
    Signature,
    blade_product,
    blade_square_sign,
    basis_ordinal,
    check_dense_cap,
    dual_blade,
    duality_coefficient,
    ordinal_to_indexset,
)


@dataclass(frozen=True)
class MultTable:
    """2^n x 2^n grid of (sign, ordinal) pairs for e_M e_N in graded-lex order.

    Zero entries (degenerate algebras only) store ordinal 1 canonically.
    """

    sig: Signature
    entries: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def dim(self) -> int:
        return self.sig.dim

    def entry(self, mu: int, nu: int) -> tuple[int, int]:
        """Table cell at 1-based row/column ordinals."""
        return self.entries[mu - 1][nu - 1]


@dataclass(frozen=True)
class ScalarTable:
    """Diagonal of blade squares: entry mu is e_M * e_M in {-1, 0, +1}."""

    sig: Signature
    diag: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.sig.dim

    def __getitem__(self, mu: int) -> int:
        """Diagonal value at a 1-based ordinal."""
        return self.diag[mu - 1]


@dataclass(frozen=True)
class SparseSignedMatrix:
    """Signed matrix with at most one nonzero per row.

    cols[i] is the 0-based column of row i's nonzero entry (None for a zero
    row, which only occurs in degenerate algebras); signs[i] is its value.
    """

    dim: int
    cols: tuple[Optional[int], ...]
    signs: tuple[int, ...]

    def __getitem__(self, rc: tuple[int, int]) -> int:
        row, col = rc
        return self.signs[row] if self.cols[row] == col else 0

    def is_sparse(self) -> bool:
        """Exactly one nonzero per row and per column."""
        if any(c is None for c in self.cols):
            return False
        return sorted(self.cols) == list(range(self.dim))

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.dim for _ in range(self.dim)]
        for i, (c, s) in enumerate(zip(self.cols, self.signs)):
            if c is not None and s:
                out[i][c] = s
        return out

    def transpose(self) -> "SparseSignedMatrix":
        cols: list[Optional[int]] = [None] * self.dim
        signs = [0] * self.dim
        for i, (c, s) in enumerate(zip(self.cols, self.signs)):
            if c is not None:
                cols[c] = i
                signs[c] = s
        return SparseSignedMatrix(self.dim, tuple(cols), tuple(signs))

    def __matmul__(self, other: "SparseSignedMatrix") -> "SparseSignedMatrix":
        cols: list[Optional[int]] = [None] * self.dim
        signs = [0] * self.dim
        for i, (c, s) in enumerate(zip(self.cols, self.signs)):
            if c is not None and s and other.cols[c] is not None:
                cols[i] = other.cols[c]
                signs[i] = s * other.signs[c]
        return SparseSignedMatrix(self.dim, tuple(cols), tuple(signs))

    def scaled(self, factor: int) -> "SparseSignedMatrix":
        if factor == 0:
            return SparseSignedMatrix(self.dim, (None,) * self.dim, (0,) * self.dim)
        return SparseSignedMatrix(
            self.dim, self.cols, tuple(s * factor for s in self.signs)
        )


def build_mult_table(sig: Signature) -> MultTable:
    """Full multiplication table over the graded-lex extended basis."""
    check_dense_cap(sig.n)
    n = sig.n
    dim = sig.dim
    masks = [ordinal_to_indexset(n, j) for j in range(1, dim + 1)]
    rows = []
    for s in masks:
        row = []
        for t in masks:
            sign, blade = blade_product(sig, s, t)
            row.append((sign, basis_ordinal(n, blade) if sign else 1))
        rows.append(tuple(row))
    return MultTable(sig, tuple(rows))


def build_scalar_table(sig: Signature) -> ScalarTable:
    """Diagonal scalar product table G."""
    check_dense_cap(sig.n)
    n = sig.n
    diag = tuple(
        blade_square_sign(sig, ordinal_to_indexset(n, j))
        for j in range(1, sig.dim + 1)
    )
    return ScalarTable(sig, diag)


def coefficient_matrix(table: MultTable, s: int) -> SparseSignedMatrix:
    """A_s: the sign of each table cell whose result ordinal is s, else 0."""
    dim = table.dim
    if not 1 <= s <= dim:
        raise ValueError(f"ordinal {s} outside 1..{dim}")
    cols: list[Optional[int]] = [None] * dim
    signs = [0] * dim
    for i, row in enumerate(table.entries):
        for j, (sign, ordinal) in enumerate(row):
            if sign and ordinal == s:
                cols[i] = j
                signs[i] = sign
                break
    return SparseSignedMatrix(dim, tuple(cols), tuple(signs))


def mirror_ordinal(n: int, lam: int) -> int:
    """Ordinal of the complement blade; equals 2^n + 1 - lam in graded-lex."""
    if not 1 <= lam <= (1 << n):
        raise ValueError(f"ordinal {lam} outside 1..{1 << n}")
    return basis_ordinal(n, dual_blade(n, ordinal_to_indexset(n, lam)))


# ---------------------------------------------------------------------------
# Structural lemma checks


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f"  [{self.detail}]" if self.detail else ""
        return f"{status}  {self.name}{suffix}"


@dataclass
class Report:
    title: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.results.append(CheckResult(name, passed, detail))

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def render(self) -> str:
        lines = [self.title]
        lines += ["  " + r.line() for r in self.results]
        verdict = "all checks passed" if self.all_passed else "FAILURES present"
        lines.append(f"  => {verdict}")
        return "\n".join(lines)


def _check_row_col_distinct(table: MultTable, report: Report) -> None:
    dim = table.dim
    ok = True
    where = ""
    for i, row in enumerate(table.entries):
        seen: set[int] = set()
        for j, (sign, ordinal) in enumerate(row):
            if sign == 0:
                continue
            if ordinal in seen:
                ok, where = False, f"row {i + 1}, col {j + 1}"
                break
            seen.add(ordinal)
        if not ok:
            break
    if ok:
        for j in range(dim):
            seen = set()
            for i in range(dim):
                sign, ordinal = table.entries[i][j]
                if sign == 0:
                    continue
                if ordinal in seen:
                    ok, where = False, f"row {i + 1}, col {j + 1}"
                    break
                seen.add(ordinal)
            if not ok:
                break
    report.add("row/column result ordinals distinct (nonzero cells)", ok, where)


def _check_struct_identity(table: MultTable, g: ScalarTable, report: Report) -> None:
    """m(l,l') = m(l,mu) * sigma_mu * m(mu,l') for some witness mu.

    A witness must split the product blade sign-neutrally: the two partial
    results must recombine with reordering sign +1.
    """
    sig = table.sig
    n = sig.n
    dim = table.dim
    masks = [ordinal_to_indexset(n, j) for j in range(1, dim + 1)]
    ok = True
    where = ""
    for lam in range(1, dim + 1):
        for lamp in range(1, dim + 1):
            m, _ = table.entry(lam, lamp)
            if m == 0:
                continue
            found = False
            for mu in range(1, dim + 1):
                s_mu = g[mu]
                if s_mu == 0:
                    continue
                m1, o1 = table.entry(lam, mu)
                m2, o2 = table.entry(mu, lamp)
                if m1 == 0 or m2 == 0:
                    continue
                x, y = masks[o1 - 1], masks[o2 - 1]
                if x & y:
                    continue
                comb = blade_product(sig, x, y)
                if comb.sign != 1:
                    continue
                if m == m1 * s_mu * m2:
                    found = True
                    break
            if not found:
                ok, where = False, f"no witness for ({lam},{lamp})"
                break
        if not ok:
            break
    report.add("product-splitting identity has a witness per cell", ok, where)


def _check_dual_structure(table: MultTable, g: ScalarTable, report: Report) -> None:
    sig = table.sig
    n = sig.n
    dim = table.dim
    pseudo = dim  # pseudoscalar is the maximal graded-lex ordinal
    sigma_i = g[pseudo]
    swap_ok = True
    triple_ok = True
    swap_where = triple_where = ""
    # column of each result ordinal per row, from row-distinctness
    for mu in range(1, dim + 1):
        col_of = {}
        for j in range(1, dim + 1):
            sign, ordinal = table.entry(mu, j)
            if sign:
                col_of[ordinal] = j
        for s in range(1, dim + 1):
            sp = mirror_ordinal(n, s)
            lamp = col_of.get(sp)  # row mu times this column gives e_{S^I}
            lampp = col_of.get(pseudo)
            if lamp is None or lampp is None:
                swap_ok, swap_where = False, f"row {mu} misses an ordinal"
                triple_ok, triple_where = False, swap_where
                break
            q_s = duality_coefficient(sig, ordinal_to_indexset(n, s))
            m_pp_p, o1 = table.entry(lampp, lamp)
            m_p_pp, o2 = table.entry(lamp, lampp)
            m_p_mu, o3 = table.entry(lamp, mu)
            m_pp_mu, o4 = table.entry(lampp, mu)
            m_mu_pp, o5 = table.entry(mu, lampp)
            if (o1, o2, o3, o4, o5) != (s, s, sp, pseudo, pseudo):
                swap_ok, swap_where = False, f"row {mu}, target {s}"
                triple_ok, triple_where = False, swap_where
                continue
            if swap_ok and m_pp_p != g[s] * g[lamp] * g[lampp] * m_p_pp:
                swap_ok, swap_where = False, f"row {mu}, target {s}"
            if triple_ok:
                lhs = m_p_mu
                rhs = q_s * sigma_i * m_p_pp * g[lampp] * m_pp_mu
                q_rhs = g[s] * g[lampp] * m_pp_p * g[lamp] * m_p_mu * g[mu] * m_mu_pp
                if lhs != rhs or q_s != q_rhs:
                    triple_ok, triple_where = False, f"row {mu}, target {s}"
    report.add("dual swap identity", swap_ok, swap_where)
    report.add("dual coefficient triple product", triple_ok, triple_where)


def check_table_lemmas(table: MultTable, g: ScalarTable) -> Report:
    """Verify the structural properties of M and G; failures become report
    lines with first-counterexample coordinates, never exceptions."""
    sig = table.sig
    report = Report(f"table structure checks for {sig}")

    dim = table.dim
    # identity row and column
    ok = all(table.entry(1, nu) == (1, nu) for nu in range(1, dim + 1)) and all(
        table.entry(mu, 1) == (1, mu) for mu in range(1, dim + 1)
    )
    report.add("identity row and column", ok)

    # diagonal equals blade squares, pointing at the scalar ordinal
    ok = True
    where = ""
    for mu in range(1, dim + 1):
        sign, ordinal = table.entry(mu, mu)
        if sign != g[mu] or (sign and ordinal != 1):
            ok, where = False, f"diagonal {mu}"
            break
    report.add("diagonal holds blade squares", ok, where)

    _check_row_col_distinct(table, report)

    if sig.degenerate:
        report.add("dual structure (skipped: degenerate signature)", True)
        # H = G^2 idempotency is the degenerate replacement check
        h = [v * v for v in g.diag]
        ok = all(x * x == x and x in (0, 1) for x in h)
        report.add("H = G^2 idempotent", ok)
    else:
        _check_struct_identity(table, g, report)
        _check_dual_structure(table, g, report)
        ok = all(v * v == 1 for v in g.diag)
        report.add("G^2 = I", ok)

    return report
