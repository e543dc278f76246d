"""Exception hierarchy shared by all cliffrep modules."""


class CliffrepError(Exception):
    """Base class for all cliffrep errors."""


class CapExceeded(CliffrepError):
    """Requested dimension exceeds the blade-level or dense-matrix cap."""


class SignatureMismatch(CliffrepError):
    """Two multivectors from different algebras were combined."""


class DegenerateSignature(CliffrepError):
    """Operation requires a non-degenerate algebra (r = 0)."""


class DegenerateDual(CliffrepError):
    """Duality coefficient is undefined for a blade with zero square."""


class ZeroDivisor(CliffrepError):
    """The multivector has no inverse (its representation matrix is singular)."""


class Singular(CliffrepError):
    """Exact matrix inversion hit a rank-deficient matrix."""


class ParseError(CliffrepError):
    """Syntax error in a multivector expression; carries the 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IndexOutOfRange(CliffrepError):
    """Generator index outside 1..n for the target signature."""


class ZeroDenominator(CliffrepError):
    """Rational literal with denominator zero."""
