"""Knot identification against the bundled invariant table.

Entries are keyed by (determinant, Jones polynomial); a diagram matches an
entry either directly or through the exponent-negated Jones, which flags the
mirror image.  Ambiguous matches are reported as candidate sets, never
silently resolved.  For three-strand diagrams the Schubert fraction provides
an additional cross-check when the matched entry carries one.

The table ships as a versioned CSV asset (see ``tools/gen_knot_table.py`` for
its provenance) covering the unknot, the named prime knots arising from the
small Chebyshev families, and the (2,m) torus knots through m = 13.
Canonical chirality follows the published diagrams of those families; mirror
images are reported with a ``*`` suffix.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import KnotDiagram
from .errors import CFDivisionByZero, NotAKnotFraction
from .laurent import LaurentPolynomial
from .rational import (
    SchubertFraction,
    continued_fraction_value,
    conway_from_a3_diagram,
    two_bridge_equivalent,
)

__all__ = ["KnotTableEntry", "load_table", "identify", "IdentifyResult"]

TABLE_VERSION = "1"


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    crossings: int
    determinant: int
    jones: LaurentPolynomial
    fraction: SchubertFraction | None

    @property
    def jones_mirror(self) -> LaurentPolynomial:
        return self.jones.mirror()

    @property
    def amphichiral_jones(self) -> bool:
        """Mirror-invariant Jones; chirality is then not distinguishable here."""
        return self.jones.is_palindromic()


@lru_cache(maxsize=1)
def load_table() -> tuple[KnotTableEntry, ...]:
    text = (
        resources.files("chebknots.data").joinpath("knot_table.csv").read_text()
    )
    rows = list(csv.DictReader(text.splitlines()))
    entries = []
    for row in rows:
        fraction = None
        if row["fraction_p"]:
            fraction = SchubertFraction(int(row["fraction_p"]), int(row["fraction_q"]))
        entries.append(
            KnotTableEntry(
                name=row["name"],
                crossings=int(row["crossings"]),
                determinant=int(row["determinant"]),
                jones=LaurentPolynomial.from_canonical_text(row["jones_coeffs"]),
                fraction=fraction,
            )
        )
    return tuple(entries)


@dataclass(frozen=True)
class IdentifyResult:
    status: str  # "identified" | "unknown" | "ambiguous"
    entry: KnotTableEntry | None
    mirrored: bool
    amphichiral: bool
    determinant: int
    jones: LaurentPolynomial
    candidates: tuple = ()
    fraction: SchubertFraction | None = None
    fraction_consistent: bool | None = None

    @property
    def display_name(self) -> str:
        if self.status == "unknown":
            return "?"
        if self.status == "ambiguous":
            return "{" + ", ".join(e.name for e, _ in self.candidates) + "}"
        return self.entry.name + ("*" if self.mirrored and not self.amphichiral else "")


def identify(diagram: KnotDiagram) -> IdentifyResult:
    """Match a diagram against the table by determinant and Jones polynomial."""
    from .bracket import determinant as pd_determinant
    from .bracket import jones as pd_jones

    v = pd_jones(diagram.pd)
    det = abs(v.at_minus_one())

    matches = []
    for entry in load_table():
        if entry.determinant != det:
            continue
        direct = v == entry.jones
        mirrored = v == entry.jones_mirror
        if direct:
            matches.append((entry, False))
        elif mirrored:
            matches.append((entry, True))

    fraction = None
    fraction_ok = None
    if diagram.curve.a == 3:
        try:
            fraction = continued_fraction_value(
                conway_from_a3_diagram(diagram), strict=False
            )
        except CFDivisionByZero:
            fraction = None

    if not matches:
        return IdentifyResult(
            status="unknown",
            entry=None,
            mirrored=False,
            amphichiral=False,
            determinant=det,
            jones=v,
            fraction=fraction,
        )
    if len(matches) > 1:
        return IdentifyResult(
            status="ambiguous",
            entry=None,
            mirrored=False,
            amphichiral=False,
            determinant=det,
            jones=v,
            candidates=tuple(matches),
            fraction=fraction,
        )
    entry, mirrored = matches[0]
    if fraction is not None and entry.fraction is not None and fraction.p > 1:
        try:
            fraction_ok = two_bridge_equivalent(fraction, entry.fraction)
        except NotAKnotFraction:
            fraction_ok = None
    return IdentifyResult(
        status="identified",
        entry=entry,
        mirrored=mirrored and not entry.amphichiral_jones,
        amphichiral=entry.amphichiral_jones,
        determinant=det,
        jones=v,
        fraction=fraction,
        fraction_consistent=fraction_ok,
    )
