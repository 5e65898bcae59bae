"""Exact sign arithmetic for angles that are rational multiples of pi.

An :class:`AngleFraction` ``(m, N)`` denotes the angle ``m*pi/N``.  All signs
and comparisons reduce to integer arithmetic, so the phase-free pipeline never
touches floating point.  Python integers are unbounded, so cross
multiplications cannot overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DegenerateAngle

__all__ = ["AngleFraction", "sign_sin", "sign_cos", "compare_cos"]


@dataclass(frozen=True, order=False)
class AngleFraction:
    """The angle ``m*pi/N``, canonicalized modulo ``2*pi``.

    The stored numerator lies in ``[0, 2N)`` and ``gcd(m, N)`` is reduced, so
    two representations of the same angle compare (and hash) equal.
    """

    m: int
    N: int

    def __post_init__(self):
        if self.N <= 0:
            raise ValueError("denominator must be positive")
        m = self.m % (2 * self.N)
        g = gcd(m, self.N)
        object.__setattr__(self, "m", m // g)
        object.__setattr__(self, "N", self.N // g)

    def __mul__(self, n: int) -> "AngleFraction":
        return AngleFraction(self.m * n, self.N)

    __rmul__ = __mul__

    def __add__(self, other: "AngleFraction") -> "AngleFraction":
        return AngleFraction(self.m * other.N + other.m * self.N, self.N * other.N)

    def __neg__(self) -> "AngleFraction":
        return AngleFraction(-self.m, self.N)

    def folded_numerator(self) -> tuple[int, int]:
        """Numerator of the angle folded into [0, pi] (cosine is even)."""
        m = self.m % (2 * self.N)
        return min(m, 2 * self.N - m), self.N

    def to_float(self) -> float:
        from math import pi

        return self.m * pi / self.N

    def __repr__(self):
        return f"AngleFraction({self.m}, {self.N})"


def sign_sin(angle: AngleFraction) -> int:
    """Sign of ``sin(m*pi/N)``: 0 on multiples of pi, +1 on (0,pi) mod 2pi."""
    m = angle.m % (2 * angle.N)
    if m % angle.N == 0:
        return 0
    return 1 if m < angle.N else -1


def sign_cos(angle: AngleFraction) -> int:
    """Sign of ``cos(m*pi/N)``, via the shift cos(x) = sin(x + pi/2)."""
    return sign_sin(AngleFraction(2 * angle.m + angle.N, 2 * angle.N))


def compare_cos(x: AngleFraction, y: AngleFraction) -> int:
    """Ordering of ``cos x`` versus ``cos y``: +1, 0 or -1.

    Both angles are folded into [0, pi], where cosine is strictly decreasing,
    and the folded angles are compared as exact rationals.
    """
    mx, nx = x.folded_numerator()
    my, ny = y.folded_numerator()
    lhs = mx * ny
    rhs = my * nx
    # larger folded angle means smaller cosine
    return (lhs < rhs) - (lhs > rhs)


def require_nonzero_sin(angle: AngleFraction) -> int:
    """sign_sin, but a vanishing sine raises :class:`DegenerateAngle`."""
    s = sign_sin(angle)
    if s == 0:
        raise DegenerateAngle(f"sin({angle.m}*pi/{angle.N}) = 0")
    return s
