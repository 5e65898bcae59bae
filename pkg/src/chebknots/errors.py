"""Exception taxonomy shared across the package.

Every error raised by the library derives from ``ChebknotsError`` so that
callers (and the CLI) can map failures to stable machine-readable codes.
"""

from __future__ import annotations

__all__ = [
    "ChebknotsError",
    "NotCoprime",
    "EvenA",
    "DegenerateAngle",
    "DegenerateSign",
    "OutOfSquare",
    "AmbiguousSign",
    "SearchNotFound",
    "NotAThreeStrand",
    "CFDivisionByZero",
    "NotAKnotFraction",
    "TooManyCrossings",
]


class ChebknotsError(Exception):
    """Base class for all library errors."""

    code = "error"


class NotCoprime(ChebknotsError):
    """Degrees that are required to be coprime share a factor."""

    code = "not-coprime"


class EvenA(ChebknotsError):
    """Operation requires the first curve degree to be odd."""

    code = "even-a"


class DegenerateAngle(ChebknotsError):
    """Angle is a multiple of pi where a nonzero sine was required."""

    code = "degenerate-angle"


class DegenerateSign(ChebknotsError):
    """A crossing sign factor vanished; the space curve is singular."""

    code = "degenerate-sign"


class OutOfSquare(ChebknotsError):
    """Point lies outside the square [-1,1]^2."""

    code = "out-of-square"


class AmbiguousSign(ChebknotsError):
    """A numeric height difference is below the certification margin."""

    code = "ambiguous-sign"

    def __init__(self, message, margin=None):
        super().__init__(message)
        self.margin = margin


class SearchNotFound(ChebknotsError):
    """Phase search exhausted its budget without matching the target.

    This is a statement about the configured budget, not about existence.
    """

    code = "search-not-found"


class NotAThreeStrand(ChebknotsError):
    """Conway normal form extraction requires a three-strand curve (a=3)."""

    code = "not-a-three-strand"


class CFDivisionByZero(ChebknotsError):
    """An inner tail of a continued fraction evaluated to zero."""

    code = "cf-division-by-zero"


class TooManyCrossings(ChebknotsError):
    """Diagram exceeds the state-sum budget of the bracket polynomial."""

    code = "too-many-crossings"


class NotAKnotFraction(ChebknotsError):
    """Fraction with even numerator denotes a two-bridge link, not a knot."""

    code = "not-a-knot-fraction"
