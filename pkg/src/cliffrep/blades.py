"""Blade-level Clifford arithmetic.

Basis blades are encoded as integer bitmasks: bit k-1 set means generator
e_k is a factor, mask 0 is the scalar blade 1.  The extended basis is
ordered graded-lexicographically (by grade, then lexicographically on the
sorted index tuple) and addressed by 1-based ordinals.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CapExceeded,
    DegenerateDual,
    SignatureMismatch,
)

#: Hard cap for blade-level operations.
MAX_BLADE_N = 16
#: Hard cap for any dense 2^n x 2^n structure.
MAX_DENSE_N = 12

Rational = Fraction | int


def _env_cap() -> int:
    raw = os.environ.get("CLIFFREP_MAX_N")
    if raw is None:
        return MAX_BLADE_N
    try:
        return int(raw)
    except ValueError:
        return MAX_BLADE_N


def blade_cap() -> int:
    """Current blade-level dimension cap (env var may lower, never raise)."""
    return min(MAX_BLADE_N, _env_cap())


def dense_cap() -> int:
    """Current dense-matrix dimension cap (env var may lower, never raise)."""
    return min(MAX_DENSE_N, _env_cap())


def check_dense_cap(n: int) -> None:
    cap = dense_cap()
    if n > cap:
        raise CapExceeded(f"n={n} exceeds dense 2^n x 2^n cap of {cap}")


@dataclass(frozen=True)
class Signature:
    """Algebra signature: p generators square to +1, q to -1, r to 0."""

    p: int
    q: int
    r: int = 0

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.r < 0:
            raise ValueError("signature components must be non-negative")
        n = self.p + self.q + self.r
        if n < 1:
            raise ValueError("algebra needs at least one generator")
        cap = blade_cap()
        if n > cap:
            raise CapExceeded(f"n={n} exceeds blade-level cap of {cap}")

    @property
    def n(self) -> int:
        return self.p + self.q + self.r

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def degenerate(self) -> bool:
        return self.r > 0

    def sigma(self, k: int) -> int:
        """Square of generator e_k: +1, -1 or 0 per the p/q/r convention."""
        if not 1 <= k <= self.n:
            raise IndexError(f"generator index {k} outside 1..{self.n}")
        if k <= self.p:
            return 1
        if k <= self.p + self.q:
            return -1
        return 0

    def __str__(self) -> str:
        if self.r:
            return f"Cl({self.p},{self.q},{self.r})"
        return f"Cl({self.p},{self.q})"


def sigma(sig: Signature, k: int) -> int:
    return sig.sigma(k)


class SignedBlade(NamedTuple):
    """A basis blade with a sign; sign 0 forces the scalar blade (mask 0)."""

    sign: int
    blade: int


ZERO_BLADE = SignedBlade(0, 0)


def mask_from_indices(indices: Iterable[int]) -> int:
    """Bitmask of a strictly increasing index set (1-based indices)."""
    mask = 0
    for k in indices:
        bit = 1 << (k - 1)
        if k < 1 or mask & bit:
            raise ValueError(f"invalid or repeated index {k}")
        mask |= bit
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based generator indices of a blade mask."""
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def grade(mask: int) -> int:
    return mask.bit_count()


def permutation_sign(seq: Sequence[int]) -> int:
    """Parity sign of stably sorting seq: (-1)**(number of inversions)."""
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return -1 if inversions & 1 else 1


def _reorder_sign(s: int, t: int) -> int:
    """Sign of sorting the concatenation of blades s and t.

    Counts pairs (i in s, j in t) with j < i by shifting s down and
    intersecting with t; equal indices are stable so contribute nothing.
    """
    s >>= 1
    total = 0
    while s:
        total += (s & t).bit_count()
        s >>= 1
    return -1 if total & 1 else 1


def blade_product(sig: Signature, s: int, t: int) -> SignedBlade:
    """Simplified geometric product of basis blades e_S and e_T.

    Result blade is the symmetric difference S ^ T; the sign is the
    reordering parity times the squares of the repeated generators.
    """
    sign = _reorder_sign(s, t)
    common = s & t
    k = 1
    while common:
        if common & 1:
            sq = sig.sigma(k)
            if sq == 0:
                return ZERO_BLADE
            sign *= sq
        common >>= 1
        k += 1
    return SignedBlade(sign, s ^ t)


def blade_square_sign(sig: Signature, s: int) -> int:
    """Sign of e_S e_S: the diagonal of the scalar table."""
    return blade_product(sig, s, s).sign


@lru_cache(maxsize=None)
def _basis_order(n: int) -> tuple[tuple[int, ...], dict[int, int]]:
    """Graded-lex basis for dimension n: ordinal->mask list and inverse map."""
    masks = sorted(range(1 << n), key=lambda m: (grade(m), indices_of(m)))
    to_ordinal = {m: i + 1 for i, m in enumerate(masks)}
    return tuple(masks), to_ordinal


def basis_ordinal(n: int, mask: int) -> int:
    """1-based graded-lex position of the blade e_S, S given as a mask."""
    if not 0 <= mask < (1 << n):
        raise ValueError(f"blade mask {mask} invalid for n={n}")
    return _basis_order(n)[1][mask]


def ordinal_to_indexset(n: int, j: int) -> int:
    """Blade mask at 1-based graded-lex ordinal j; inverse of basis_ordinal."""
    if not 1 <= j <= (1 << n):
        raise ValueError(f"ordinal {j} outside 1..{1 << n}")
    return _basis_order(n)[0][j - 1]


def dual_blade(n: int, s: int) -> int:
    """Algebraical dual: symmetric difference with the full index set."""
    full = (1 << n) - 1
    if not 0 <= s <= full:
        raise ValueError(f"blade mask {s} invalid for n={n}")
    return s ^ full


def duality_coefficient(sig: Signature, s: int) -> int:
    """Sign q with e_{S^I} e_I = q e_S, defined when e_S squares to +/-1."""
    if blade_square_sign(sig, s) == 0:
        raise DegenerateDual(f"blade {indices_of(s)} has zero square")
    full = (1 << sig.n) - 1
    q = blade_product(sig, s ^ full, full)
    if q.sign == 0:
        raise DegenerateDual(f"dual of blade {indices_of(s)} is degenerate")
    assert q.blade == s
    return q.sign


class Multivector:
    """Dense multivector: 2^n exact rational coefficients in graded-lex order.

    Immutable; coefficient 1 (index 0 internally) is the scalar part and
    coefficient 2^n is the pseudoscalar part.
    """

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs: Sequence[Rational]):
        if len(coeffs) != sig.dim:
            raise ValueError(f"expected {sig.dim} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, *_):
        raise AttributeError("Multivector is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig, [0] * sig.dim)

    @classmethod
    def scalar(cls, sig: Signature, value: Rational) -> "Multivector":
        coeffs = [Fraction(0)] * sig.dim
        coeffs[0] = Fraction(value)
        return cls(sig, coeffs)

    @classmethod
    def blade(cls, sig: Signature, mask: int, coeff: Rational = 1) -> "Multivector":
        coeffs = [Fraction(0)] * sig.dim
        coeffs[basis_ordinal(sig.n, mask) - 1] = Fraction(coeff)
        return cls(sig, coeffs)

    @classmethod
    def generator(cls, sig: Signature, k: int) -> "Multivector":
        if not 1 <= k <= sig.n:
            raise IndexError(f"generator index {k} outside 1..{sig.n}")
        return cls.blade(sig, 1 << (k - 1))

    @classmethod
    def random(
        cls, sig: Signature, rng: random.Random, lo: int = -9, hi: int = 9
    ) -> "Multivector":
        return cls(sig, [rng.randint(lo, hi) for _ in range(sig.dim)])

    # -- structure ----------------------------------------------------

    def coeff(self, ordinal: int) -> Fraction:
        """Coefficient at a 1-based graded-lex ordinal."""
        return self.coeffs[ordinal - 1]

    @property
    def scalar_part(self) -> Fraction:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self):
        """Yield (ordinal, mask, coefficient) for every nonzero coefficient."""
        n = self.sig.n
        for i, c in enumerate(self.coeffs):
            if c:
                yield i + 1, ordinal_to_indexset(n, i + 1), c

    # -- arithmetic ---------------------------------------------------

    def _check_sig(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise SignatureMismatch(f"{self.sig} vs {other.sig}")

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._check_sig(other)
            return Multivector(
                self.sig, [a + b for a, b in zip(self.coeffs, other.coeffs)]
            )
        if isinstance(other, (int, Fraction)):
            return self + Multivector.scalar(self.sig, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.sig, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, Fraction)):
            return Multivector(self.sig, [a * other for a in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Multivector(self.sig, [a / other for a in self.coeffs])
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.sig, self.coeffs))

    def __repr__(self):
        from .expr import format_multivector

        return f"<{self.sig}: {format_multivector(self)}>"

    def grade_projection(self, k: int) -> "Multivector":
        """Keep only coefficients whose blades have grade k."""
        if not 0 <= k <= self.sig.n:
            raise ValueError(f"grade {k} outside 0..{self.sig.n}")
        n = self.sig.n
        coeffs = [
            c if grade(ordinal_to_indexset(n, i + 1)) == k else Fraction(0)
            for i, c in enumerate(self.coeffs)
        ]
        return Multivector(self.sig, coeffs)


def geometric_product(u: Multivector, v: Multivector) -> Multivector:
    """Bilinear extension of blade_product; exact rational arithmetic."""
    u._check_sig(v)
    sig = u.sig
    n = sig.n
    out = [Fraction(0)] * sig.dim
    for _, s_mask, a in u.terms():
        for _, t_mask, b in v.terms():
            sign, blade = blade_product(sig, s_mask, t_mask)
            if sign:
                out[basis_ordinal(n, blade) - 1] += sign * a * b
    return Multivector(sig, out)


def grade_projection(u: Multivector, k: int) -> Multivector:
    return u.grade_projection(k)


def scalar_product(u: Multivector, v: Multivector) -> Fraction:
    """Scalar part of the geometric product u v."""
    u._check_sig(v)
    sig = u.sig
    total = Fraction(0)
    for _, s_mask, a in u.terms():
        for _, t_mask, b in v.terms():
            if s_mask == t_mask:
                sign = blade_square_sign(sig, s_mask)
                if sign:
                    total += sign * a * b
            # distinct blades never multiply to a scalar
    return total


def pseudoscalar(sig: Signature) -> Multivector:
    """The maximal blade e_1 ... e_n with coefficient 1."""
    return Multivector.blade(sig, (1 << sig.n) - 1)


def quadratic_form(v: Multivector) -> Fraction:
    """Q(v) = <v v>_0."""
    return scalar_product(v, v)
