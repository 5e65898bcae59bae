"""Geometry of the plane Chebyshev curve x = T_a(t), y = T_b(t).

For coprime degrees with ``a`` odd the curve equals the implicit curve
T_b(x) = T_a(y) and has exactly (a-1)(b-1)/2 transversal double points.  Each
double point is hit at two parameters t = cos(u*pi/ab) and t' = cos(u'*pi/ab)
with u = kb + ha and u' = |kb - ha|, where 1 <= k < a, 1 <= h < b and
k/a + h/b < 1.  The traversal index set

    E = { u in (0, ab) : a does not divide u, b does not divide u }

carries the whole diagram combinatorics: walking the curve by increasing t
visits the u values in decreasing order, and the sign of T_b(x) = T_a(y) at
t_u is (-1)^u, which splits the double points into the two rectangular grids
R (value +1) and R' (value -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import acos, gcd, pi

from .angles import AngleFraction
from .errors import EvenA, NotCoprime, OutOfSquare

__all__ = [
    "CurveSpec",
    "Crossing",
    "enumerate_crossings",
    "grid_counts",
    "component_count",
    "billiard_map",
    "plane_braid_word",
    "BraidWord",
]


@dataclass(frozen=True)
class CurveSpec:
    """Degrees (a, b) of the parametrized plane curve x=T_a(t), y=T_b(t)."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("degrees must be positive")

    def require_diagram_form(self):
        """Coprimality and odd a, the preconditions of crossing enumeration."""
        if self.a % 2 == 0:
            raise EvenA(f"a = {self.a} must be odd")
        if gcd(self.a, self.b) != 1:
            raise NotCoprime(f"gcd({self.a}, {self.b}) != 1")

    @property
    def crossing_count(self) -> int:
        return (self.a - 1) * (self.b - 1) // 2


@dataclass(frozen=True)
class Crossing:
    """One double point of the plane curve.

    The two branch parameters are t = cos(tau) < s = cos(sigma), reached at
    traversal indices u (for t) and u2 (for s) with u > u2.  ``parity`` is
    (-1)^u: +1 on grid R, -1 on grid R'.
    """

    k: int
    h: int
    u: int
    u2: int
    tau: AngleFraction
    sigma: AngleFraction
    x_angle: AngleFraction  # abscissa is cos(x_angle)
    y_angle: AngleFraction  # ordinate is cos(y_angle)
    parity: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "h": self.h,
            "u": self.u,
            "u2": self.u2,
            "parity": self.parity,
            "x_angle": [self.x_angle.m, self.x_angle.N],
            "tau": [self.tau.m, self.tau.N],
            "sigma": [self.sigma.m, self.sigma.N],
        }


def enumerate_crossings(spec: CurveSpec) -> list[Crossing]:
    """All (a-1)(b-1)/2 crossings, ordered lexicographically by (k, h).

    The pairs {u, u2} form a perfect matching on the traversal set E, with
    u = u2 modulo 2a and u = -u2 modulo 2b (up to the sign of kb - ha).
    """
    spec.require_diagram_form()
    a, b = spec.a, spec.b
    out = []
    for k in range(1, a):
        for h in range(1, b):
            u = k * b + h * a
            if u >= a * b:
                continue
            u2 = abs(k * b - h * a)
            out.append(
                Crossing(
                    k=k,
                    h=h,
                    u=u,
                    u2=u2,
                    tau=AngleFraction(u, a * b),
                    sigma=AngleFraction(k * b - h * a, a * b),
                    x_angle=AngleFraction(u, b),
                    y_angle=AngleFraction(u, a),
                    parity=-1 if u % 2 else 1,
                )
            )
    return out


def traversal_set(spec: CurveSpec) -> list[int]:
    """The set E of traversal indices, descending (order of increasing t)."""
    a, b = spec.a, spec.b
    return [u for u in range(a * b - 1, 0, -1) if u % a and u % b]


def grid_counts(spec: CurveSpec) -> tuple[int, int]:
    """Sizes (|R|, |R'|) of the two crossing grids."""
    spec.require_diagram_form()
    a, b = spec.a, spec.b
    return ((b - 1) // 2) * (a - 1) // 2, (b // 2) * (a - 1) // 2


def component_count(a: int, b: int) -> int:
    """Number of components of T_b(x) - T_a(y) = 0, namely floor(d/2) + 1."""
    if a % 2 == 0:
        raise EvenA(f"a = {a} must be odd")
    return gcd(a, b) // 2 + 1


def billiard_map(spec: CurveSpec, point: tuple[float, float]) -> tuple[float, float]:
    """Homeomorphism [-1,1]^2 -> [0,b] x [0,a] taking the curve to slope +-1
    billiard trajectories.  Numeric only; not part of the exact pipeline."""
    x, y = point
    if not (-1.0 <= x <= 1.0 and -1.0 <= y <= 1.0):
        raise OutOfSquare(f"({x}, {y}) outside [-1,1]^2")
    return spec.b * (pi - acos(x)) / pi, spec.a * (pi - acos(y)) / pi


@dataclass(frozen=True)
class BraidWord:
    """Plane braid word over the alphabet {s_odd, s_even} on ``strings`` strings.

    ``letters`` lists the word left to right; each abstract letter expands to
    the block of generator indices in ``expansion``.  For even b the curve is
    the plat closure of the word on ``strings + 1`` strings (one free string
    added on top); ``plat_pairs`` then lists the end pairings, identical on
    both sides, for strings labelled 0..strings.
    """

    strings: int
    letters: tuple[str, ...]
    plat_pairs: tuple[tuple[int, int], ...] | None

    @property
    def expansion(self) -> dict[str, tuple[int, ...]]:
        n = self.strings
        return {
            "s_even": tuple(range(2, n, 2)),
            "s_odd": tuple(range(1, n, 2)),
        }

    def generators(self) -> list[int]:
        """The word expanded into elementary generator indices."""
        exp = self.expansion
        return [i for letter in self.letters for i in exp[letter]]


def plane_braid_word(spec: CurveSpec) -> BraidWord:
    """Alternating word describing the curve over |x| < 1 - eps.

    Columns are read left to right: (s_odd s_even)^((b-1)/2) for odd b and
    (s_even s_odd)^((b-2)/2) s_even for even b, on a strings.  Coprimality is
    not required; the letter count is always b - 1.
    """
    if spec.a % 2 == 0:
        raise EvenA(f"a = {spec.a} must be odd")
    a, b = spec.a, spec.b
    if b % 2 == 1:
        letters = ("s_odd", "s_even") * ((b - 1) // 2)
        pairs = None
    else:
        letters = ("s_even", "s_odd") * ((b - 2) // 2) + ("s_even",)
        # plat closure on a+1 strings labelled 0..a: join 0-1, 2-3, ...
        pairs = tuple((i, i + 1) for i in range(0, a + 1, 2))
    return BraidWord(strings=a, letters=letters, plat_pairs=pairs)
