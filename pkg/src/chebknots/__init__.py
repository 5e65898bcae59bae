"""Knot diagrams and invariants of Chebyshev space curves.

The curves x = T_a(t), y = T_b(t), z = T_c(t + phi) project to plane curves
whose double points are completely described by integer arithmetic on
rational angles.  This package enumerates those crossings, resolves them into
knot diagrams (exactly for phi = 0, with certified numeric margins
otherwise), extracts Conway normal forms and Schubert fractions for the
three-strand family, computes Kauffman bracket / Jones invariants, identifies
the resulting knots against a bundled table, and searches (c, phi) pairs
realizing prescribed crossing-sign patterns.
"""

from .angles import AngleFraction, compare_cos, sign_cos, sign_sin
from .bracket import (
    determinant,
    goeritz_determinant,
    jones,
    kauffman_bracket,
    mirror_pd,
    pd_writhe,
)
from .chebyshev import coefficients, evaluate
from .diagram import KnotDiagram, assemble_diagram
from .errors import (
    AmbiguousSign,
    CFDivisionByZero,
    ChebknotsError,
    DegenerateAngle,
    DegenerateSign,
    EvenA,
    NotAKnotFraction,
    NotAThreeStrand,
    NotCoprime,
    OutOfSquare,
    SearchNotFound,
    TooManyCrossings,
)
from .harmonic import (
    FamilyClasses,
    HarmonicKnotSpec,
    crossing_sign,
    enumerate_family,
    is_alternating,
    mirror_c,
    normalize_c,
    z_difference_sign,
)
from .harmonic import build_diagram as build_harmonic_diagram
from .laurent import LaurentPolynomial
from .phased import (
    ChebyshevKnotSpec,
    SearchResult,
    format_signs,
    numeric_sign_vector,
    parse_signs,
    reversal_permutation,
    search_phase,
)
from .phased import build_diagram as build_phased_diagram
from .plane_curve import (
    BraidWord,
    CurveSpec,
    Crossing,
    billiard_map,
    component_count,
    enumerate_crossings,
    grid_counts,
    plane_braid_word,
)
from .rational import (
    ConwayForm,
    SchubertFraction,
    continued_fraction_value,
    conway_from_a3_diagram,
    fraction_mirror,
    positive_continued_fraction,
    two_bridge_equivalent,
    two_bridge_normal,
)
from .tables import IdentifyResult, KnotTableEntry, identify, load_table

__version__ = "0.1.0"
