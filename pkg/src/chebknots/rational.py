"""Conway normal forms, continued fractions and two-bridge classification.

A three-strand diagram (a = 3) is a two-bridge diagram in normal form: its
columns each hold one crossing, alternating between the upper and the lower
row.  Reading the crossings by increasing abscissa and flipping the twist
sign at every second column (the leftmost one unflipped) yields the entries
e_1, ..., e_n of the Conway normal form; the tower

    e_1 + 1/(e_2 + 1/(... + 1/e_n))

evaluated with the first entry outermost is the Schubert fraction p/q of the
underlying two-bridge knot, and |p| is its determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import KnotDiagram
from .errors import CFDivisionByZero, NotAKnotFraction, NotAThreeStrand

__all__ = [
    "ConwayForm",
    "SchubertFraction",
    "conway_from_a3_diagram",
    "continued_fraction_value",
    "two_bridge_normal",
    "two_bridge_equivalent",
    "fraction_mirror",
    "positive_continued_fraction",
]


@dataclass(frozen=True)
class ConwayForm:
    """Sequence of nonzero integer twist counts."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if any(e == 0 for e in self.entries):
            raise ValueError("Conway form entries must be nonzero")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class SchubertFraction:
    """Reduced fraction p/q with p >= 0; q may be negative."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        g = gcd(abs(p), abs(q))
        if g > 1:
            p, q = p // g, q // g
        if p < 0:
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __str__(self):
        return f"{self.p}/{self.q}"


def conway_from_a3_diagram(diagram: KnotDiagram) -> ConwayForm:
    """Conway normal form of a three-strand diagram.

    Entries are the twist signs ordered by increasing abscissa (exact cosine
    comparison), with every second entry negated; the leftmost entry keeps
    its sign.  This is the unique column-sign convention under which the
    nested fraction below reproduces the Schubert fractions of these curves.
    """
    if diagram.curve.a != 3:
        raise NotAThreeStrand(f"a = {diagram.curve.a}; Conway reading needs a = 3")
    signs = diagram.signs_by_abscissa()
    return ConwayForm(tuple(s * (-1) ** i for i, s in enumerate(signs)))


def continued_fraction_value(form, strict: bool = True) -> SchubertFraction:
    """Value of e_1 + 1/(e_2 + 1/(...)), first listed entry outermost.

    With ``strict`` (the default) an inner tail evaluating to zero raises
    :class:`CFDivisionByZero`.  With ``strict=False`` the tower is evaluated
    projectively through such poles via continuant matrices; only a zero
    denominator in the final value still raises.
    """
    entries = list(form.entries if isinstance(form, ConwayForm) else form)
    if not entries:
        raise ValueError("empty continued fraction")
    if strict:
        num, den = entries[-1], 1
        for e in reversed(entries[:-1]):
            if num == 0:
                raise CFDivisionByZero(
                    f"inner tail of {entries} evaluates to zero"
                )
            num, den = e * num + den, num
        return SchubertFraction(num, den)
    p, pp, q, qq = 1, 0, 0, 1
    for e in entries:
        p, pp, q, qq = p * e + pp, p, q * e + qq, q
    if q == 0:
        raise CFDivisionByZero(f"{entries} evaluates to a pole")
    return SchubertFraction(p, q)


def two_bridge_normal(fraction: SchubertFraction) -> tuple[int, int]:
    """Normal form (p, q) with p > 0 and 0 <= q < p.

    Even p denotes a two-bridge link, not a knot, and is rejected.
    """
    p, q = fraction.p, fraction.q
    if p == 0:
        raise NotAKnotFraction("p = 0 is not a knot fraction")
    if p % 2 == 0:
        raise NotAKnotFraction(f"{p}/{q} has even p: a two-bridge link")
    return p, q % p


def two_bridge_equivalent(
    f1: SchubertFraction, f2: SchubertFraction, up_to_mirror: bool = True
) -> bool:
    """Whether two fractions name the same two-bridge knot.

    Same-knot rule: equal p and q2 = q1 or q1*q2 = 1 (mod p).  With
    ``up_to_mirror`` (the default) the mirror classes q2 = -q1 and
    q1*q2 = -1 (mod p) are accepted as well, which is how the loose fraction
    identities in the two-bridge literature are usually meant.  Use
    :func:`fraction_mirror` to test chirality explicitly.
    """
    p1, q1 = two_bridge_normal(f1)
    p2, q2 = two_bridge_normal(f2)
    if p1 != p2:
        return False
    if p1 == 1:
        return True
    same = (q1 - q2) % p1 == 0 or (q1 * q2 - 1) % p1 == 0
    if same or not up_to_mirror:
        return same
    return (q1 + q2) % p1 == 0 or (q1 * q2 + 1) % p1 == 0


def fraction_mirror(fraction: SchubertFraction) -> SchubertFraction:
    """Fraction of the mirror-image knot: (p, q) -> (p, p - q)."""
    p, q = two_bridge_normal(fraction)
    return SchubertFraction(p, p - q if p > 1 else q)


def positive_continued_fraction(p: int, q: int) -> list[int]:
    """All-positive continued fraction of p/q with 0 < q < p.

    For a two-bridge knot the sum of the entries is the crossing number of
    its reduced alternating diagram.
    """
    if not 0 < q < p:
        raise ValueError("need 0 < q < p")
    out = []
    while q:
        out.append(p // q)
        p, q = q, p % q
    return out
