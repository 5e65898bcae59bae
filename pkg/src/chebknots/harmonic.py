"""Harmonic knots: Chebyshev space curves with zero phase, z = T_c(t).

The space curve is embedded iff a, b, c are pairwise coprime, and then every
crossing of the plane projection resolves exactly: with t = cos(tau),
s = cos(sigma) the two branch heights differ by

    z(t) - z(s) = -2 sin(c h pi / b) sin(c k pi / a),

and the twist sign of the crossing is

    sign(D) = sign( -(-1)^(h+k) sin(ah pi/b) sin(bk pi/a)
                    sin(ch pi/b) sin(ck pi/a) ).

Both are pure sine-sign computations on rational angles, so the whole phase
free pipeline is exact.

Diagrams for even ``a`` are drawn with the odd-degree coordinate horizontal
(the only frame in which the plane-curve combinatorics applies); this matches
knot naming with their published diagrams.  The twist signs themselves do not
depend on the frame.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .angles import AngleFraction, sign_sin
from .diagram import KnotDiagram, assemble_diagram
from .errors import DegenerateSign, NotCoprime
from .plane_curve import CurveSpec, enumerate_crossings

__all__ = [
    "HarmonicKnotSpec",
    "crossing_sign",
    "z_difference_sign",
    "build_diagram",
    "is_alternating",
    "normalize_c",
    "mirror_c",
    "enumerate_family",
    "FamilyClasses",
]


@dataclass(frozen=True)
class HarmonicKnotSpec:
    """Degrees (a, b, c) of the space curve x=T_a(t), y=T_b(t), z=T_c(t)."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise ValueError("degrees must be positive")
        if (
            gcd(self.a, self.b) != 1
            or gcd(self.a, self.c) != 1
            or gcd(self.b, self.c) != 1
        ):
            raise NotCoprime(
                f"H({self.a},{self.b},{self.c}): degrees must be pairwise coprime"
            )

    @property
    def curve(self) -> CurveSpec:
        """The plane projection in diagram form (odd degree first)."""
        if self.a % 2 == 1:
            return CurveSpec(self.a, self.b)
        return CurveSpec(self.b, self.a)


def _zdiff(curve: CurveSpec, c: int, k: int, h: int) -> int:
    s1 = sign_sin(AngleFraction(c * h, curve.b))
    s2 = sign_sin(AngleFraction(c * k, curve.a))
    if s1 == 0 or s2 == 0:
        raise DegenerateSign(
            f"z(t) = z(s) at crossing ({k},{h}); degrees are not pairwise coprime"
        )
    return -s1 * s2


def z_difference_sign(spec: HarmonicKnotSpec, k: int, h: int) -> int:
    """Exact sign of z(t) - z(s) at the crossing (k, h) of ``spec.curve``."""
    return _zdiff(spec.curve, spec.c, k, h)


def crossing_sign(spec: HarmonicKnotSpec, k: int, h: int) -> int:
    """Exact twist sign D = (z(t)-z(s)) x'(t) y'(t) at crossing (k, h).

    Never zero for pairwise coprime degrees; a vanishing factor raises
    :class:`DegenerateSign`.
    """
    curve = spec.curve
    a, b = curve.a, curve.b
    s1 = sign_sin(AngleFraction(a * h, b))
    s2 = sign_sin(AngleFraction(b * k, a))
    if s1 == 0 or s2 == 0:
        raise DegenerateSign(f"x'(t) y'(t) = 0 at crossing ({k},{h})")
    xy = (-1) ** (h + k) * s1 * s2
    return _zdiff(curve, spec.c, k, h) * xy


def build_diagram(spec: HarmonicKnotSpec) -> KnotDiagram:
    """Closed diagram of the harmonic knot, exact signs throughout."""
    curve = spec.curve
    crossings = enumerate_crossings(curve)
    zd = [_zdiff(curve, spec.c, cr.k, cr.h) for cr in crossings]
    label = {"a": spec.a, "b": spec.b, "c": spec.c, "phi": 0}
    return assemble_diagram(curve, zd, label=label, crossings=crossings)


def is_alternating(diagram: KnotDiagram) -> bool:
    """Over/under strictly alternates along the traversal."""
    return diagram.is_alternating()


def normalize_c(a: int, b: int, c: int) -> int:
    """Representative of c in (0, ab) under c -> c + 2ab and c -> 2ab - c.

    The full per-crossing sign data of H(a,b,.) is invariant under both
    reductions, so the diagram only depends on this representative.
    """
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a},{b}) != 1")
    c %= 2 * a * b
    return min(c, 2 * a * b - c)


def mirror_c(a: int, b: int, c: int) -> int:
    """The c' with H(a,b,c') the mirror image of H(a,b,c), in (0, ab).

    c' solves c' = c (mod 2a) and c' = -c (mod 2b); every crossing's twist
    sign is negated between the two knots.
    """
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a},{b}) != 1")
    # CRT on moduli 2a and 2b (gcd 2, both sides even-compatible)
    m1, m2 = 2 * a, 2 * b
    r1, r2 = c % m1, (-c) % m2
    # solve x = r1 (m1), x = r2 (m2); step by m1 until the second holds
    x = r1
    while x % m2 != r2:
        x += m1
    return normalize_c(a, b, x)


@dataclass(frozen=True)
class FamilyClasses:
    """The harmonic family of a coprime pair (a, b).

    ``values`` are all c in [1, ab] coprime to a and b (phi(a) phi(b) of
    them); ``mirror_pairs`` groups them into mirror classes; ``self_paired``
    lists any c equal to its own mirror (none occur for b >= 2, but they are
    reported rather than assumed away).
    """

    a: int
    b: int
    values: tuple[int, ...]
    mirror_pairs: tuple[tuple[int, int], ...]
    self_paired: tuple[int, ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(p[0] for p in self.mirror_pairs) + self.self_paired


def enumerate_family(a: int, b: int) -> FamilyClasses:
    """All harmonic knots H(a,b,c) up to the c-equivalences, as mirror classes."""
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a},{b}) != 1")
    values = tuple(
        c for c in range(1, a * b + 1) if gcd(c, a) == 1 and gcd(c, b) == 1
    )
    pairs = []
    self_paired = []
    seen = set()
    for c in values:
        if c in seen:
            continue
        cm = mirror_c(a, b, c)
        if cm == c:
            self_paired.append(c)
            seen.add(c)
        else:
            pairs.append((c, cm))
            seen.update((c, cm))
    return FamilyClasses(
        a=a,
        b=b,
        values=values,
        mirror_pairs=tuple(pairs),
        self_paired=tuple(self_paired),
    )
