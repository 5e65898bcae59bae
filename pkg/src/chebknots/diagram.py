"""Knot diagram assembly: Gauss sequence and PD code from crossing data.

A diagram is built from the plane curve's crossings plus one sign per
crossing, the sign of z(t) - z(s) at its two branch parameters t < s.  The
strand with larger z passes over.  Walking the curve by increasing t (the
traversal indices u in decreasing order) and closing the two ends through the
unbounded face yields a classical closed diagram; arcs are numbered 1..2n
along the traversal, arc 1 being the closure arc at infinity.

PD conventions follow the planar-diagram standard: each crossing is a tuple
(i, j, k, l) of the four incident arcs, counterclockwise, starting at the
incoming under-strand.  The counterclockwise order is resolved exactly from
the branch tangents: at the t-branch the velocity is proportional to
(a sin(a tau), b sin(b tau)) / sin(tau), so the sign of the tangent
determinant between the two branches is a pure sine-sign computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import cos

from .angles import AngleFraction, compare_cos, sign_sin
from .plane_curve import Crossing, CurveSpec, enumerate_crossings

__all__ = ["Passage", "KnotDiagram", "assemble_diagram"]


@dataclass(frozen=True)
class Passage:
    """One visit of the traversal through a crossing."""

    crossing_id: int  # index into KnotDiagram.crossings
    u: int  # traversal index of this visit
    over: bool


@dataclass
class KnotDiagram:
    """Closed diagram of a Chebyshev space curve.

    ``sign_d`` holds the twist sign of each crossing, the sign of
    (z(t)-z(s)) x'(t) y'(t); it is the sign driving Conway normal forms, not
    the orientation-dependent writhe sign (that one is ``writhe_signs``).
    """

    curve: CurveSpec
    crossings: list[Crossing]
    zdiff: list[int]
    sign_d: list[int]
    passages: list[Passage]
    pd: list[tuple[int, int, int, int]]
    writhe_signs: list[int]
    label: dict = field(default_factory=dict)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def gauss_code(self) -> list[int]:
        """Signed crossing ids along the traversal: +id over, -id under."""
        return [
            (p.crossing_id + 1) if p.over else -(p.crossing_id + 1)
            for p in self.passages
        ]

    def is_alternating(self) -> bool:
        """True iff over/under strictly alternates along the traversal."""
        seq = [p.over for p in self.passages]
        return all(seq[i] != seq[i + 1] for i in range(len(seq) - 1))

    def signs_by_abscissa(self) -> list[int]:
        """Twist signs ordered by increasing crossing abscissa (exact order)."""
        order = abscissa_order(self.crossings)
        return [self.sign_d[i] for i in order]

    def writhe(self) -> int:
        return sum(self.writhe_signs)

    def to_json(self) -> dict:
        env = dict(self.label)
        env.update(
            {
                "crossings": [c.to_json() for c in self.crossings],
                "zdiff": self.zdiff,
                "sign_d": self.sign_d,
                "gauss": self.gauss_code(),
                "pd": [list(t) for t in self.pd],
                "writhe_signs": self.writhe_signs,
            }
        )
        return env


def abscissa_order(crossings: list[Crossing]) -> list[int]:
    """Indices sorted by increasing abscissa, ties by increasing ordinate.

    Abscissas are cos(x_angle); the comparison is exact via compare_cos.
    """
    import functools

    # compare_cos(x, y) is -1 exactly when cos x < cos y, so it already is
    # the ascending comparator on coordinates
    def cmp(i, j):
        c = compare_cos(crossings[i].x_angle, crossings[j].x_angle)
        if c:
            return c
        return compare_cos(crossings[i].y_angle, crossings[j].y_angle)

    return sorted(range(len(crossings)), key=functools.cmp_to_key(cmp))


def tangent_det_sign(curve: CurveSpec, cr: Crossing) -> int:
    """Exact sign of det(v(t), v(s)) between the branch velocities.

    det = 2ab (-1)^(h+k) sin(ah pi/b) sin(bk pi/a) / (sin tau sin sigma),
    with sin tau > 0 and sign(sin sigma) = sign(kb - ha).
    """
    a, b = curve.a, curve.b
    k, h = cr.k, cr.h
    s1 = sign_sin(AngleFraction(a * h, b))
    s2 = sign_sin(AngleFraction(b * k, a))
    s_sigma = 1 if k * b > h * a else -1
    return (-1) ** (h + k) * s1 * s2 * s_sigma


def assemble_diagram(
    curve: CurveSpec,
    zdiffs: list[int],
    label: dict | None = None,
    crossings: list[Crossing] | None = None,
) -> KnotDiagram:
    """Build the closed diagram from per-crossing z-difference signs.

    ``zdiffs`` follows the order of :func:`enumerate_crossings`.  The visit at
    the smaller parameter t goes over exactly when its z-difference is +1.
    """
    if crossings is None:
        crossings = enumerate_crossings(curve)
    if len(zdiffs) != len(crossings):
        raise ValueError("one z-difference sign per crossing required")
    if any(z not in (-1, 1) for z in zdiffs):
        raise ValueError("z-difference signs must be +-1")

    n = len(crossings)
    passages = []
    for i, cr in enumerate(crossings):
        over_at_t = zdiffs[i] > 0
        passages.append(Passage(i, cr.u, over_at_t))
        passages.append(Passage(i, cr.u2, not over_at_t))
    passages.sort(key=lambda p: -p.u)

    pos = {}  # (crossing_id, at_t) -> 1-based passage index
    for j, p in enumerate(passages, start=1):
        pos[(p.crossing_id, p.u == crossings[p.crossing_id].u)] = j

    pd = []
    writhe_signs = []
    sign_d = []
    for i, cr in enumerate(crossings):
        i_t = pos[(i, True)]
        i_s = pos[(i, False)]
        dts = tangent_det_sign(curve, cr)
        xy = (-1) ** (cr.h + cr.k) * sign_sin(
            AngleFraction(curve.a * cr.h, curve.b)
        ) * sign_sin(AngleFraction(curve.b * cr.k, curve.a))
        sign_d.append(zdiffs[i] * xy)
        if zdiffs[i] > 0:
            over_i, under_i, det_uo = i_t, i_s, -dts
        else:
            over_i, under_i, det_uo = i_s, i_t, dts
        u_in, u_out = under_i, under_i % (2 * n) + 1
        o_in, o_out = over_i, over_i % (2 * n) + 1
        if det_uo < 0:
            pd.append((u_in, o_out, u_out, o_in))
        else:
            pd.append((u_in, o_in, u_out, o_out))
        writhe_signs.append(-det_uo)

    return KnotDiagram(
        curve=curve,
        crossings=crossings,
        zdiff=list(zdiffs),
        sign_d=sign_d,
        passages=passages,
        pd=pd,
        writhe_signs=writhe_signs,
        label=label or {},
    )
