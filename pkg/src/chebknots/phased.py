"""Chebyshev knots with a phase shift in the height: z = T_c(t + phi).

The plane projection (and hence the crossing set) is that of the zero-phase
curve; only the over/under resolution changes.  Signs are numeric here, but
certified: a diagram is accepted only when every height difference clears a
configurable margin, and re-evaluation at higher precision is available for
auditing.  Phases are accepted as decimal strings so published
parametrizations stay bit-reproducible.

``search_phase`` scans integer heights c (coprime to both degrees) and a
symmetric phase grid for a prescribed pattern of crossing signs; density of
{(c tau_i, c sigma_i) mod 2pi} guarantees every pattern occurs eventually,
so failure is only ever a budget statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from math import cos, gcd, pi

from .chebyshev import evaluate
from .diagram import KnotDiagram, assemble_diagram
from .errors import AmbiguousSign, NotCoprime, SearchNotFound
from .plane_curve import CurveSpec, enumerate_crossings

__all__ = [
    "ChebyshevKnotSpec",
    "numeric_sign_vector",
    "build_diagram",
    "search_phase",
    "SearchResult",
    "parse_signs",
    "format_signs",
    "reversal_permutation",
]

DEFAULT_MARGIN = 1e-9


def _as_decimal(phi) -> Decimal:
    if isinstance(phi, Decimal):
        return phi
    if isinstance(phi, str):
        return Decimal(phi)
    if isinstance(phi, int):
        return Decimal(phi)
    if isinstance(phi, float):
        # floats are accepted for convenience; exact reproducibility needs str
        return Decimal(repr(phi))
    raise TypeError(f"unsupported phase type {type(phi)!r}")


@dataclass(frozen=True)
class ChebyshevKnotSpec:
    """Degrees (a, b, c) and phase phi of x=T_a(t), y=T_b(t), z=T_c(t+phi)."""

    a: int
    b: int
    c: int
    phi: Decimal

    def __init__(self, a: int, b: int, c: int, phi="0"):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "phi", _as_decimal(phi))
        if min(a, b, c) < 1:
            raise ValueError("degrees must be positive")
        self.curve.require_diagram_form()

    @property
    def curve(self) -> CurveSpec:
        return CurveSpec(self.a, self.b)


def _deltas(spec: ChebyshevKnotSpec, dps=None) -> list:
    """Height differences z(t_i) - z(s_i) over all crossings."""
    crossings = enumerate_crossings(spec.curve)
    ab = spec.a * spec.b
    if dps is None:
        phi = float(spec.phi)
        out = []
        for cr in crossings:
            t = cos(cr.u * pi / ab)
            s = cos(cr.u2 * pi / ab)
            out.append(evaluate(spec.c, t + phi) - evaluate(spec.c, s + phi))
        return out
    import mpmath

    with mpmath.workdps(dps):
        phi = mpmath.mpf(str(spec.phi))
        out = []
        for cr in crossings:
            t = mpmath.cos(mpmath.pi * cr.u / ab)
            s = mpmath.cos(mpmath.pi * cr.u2 / ab)
            out.append(_mp_cheb(spec.c, t + phi) - _mp_cheb(spec.c, s + phi))
        return out


def _mp_cheb(n, x):
    if n == 0:
        return x * 0 + 1
    prev, cur = x * 0 + 1, x
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def numeric_sign_vector(
    spec: ChebyshevKnotSpec, margin: float = DEFAULT_MARGIN, dps=None
) -> tuple[list[int], float]:
    """Certified crossing signs and the smallest |z(t_i) - z(s_i)|.

    Signs follow the order of ``enumerate_crossings``.  When any height
    difference has magnitude <= margin the phase is near-singular and
    :class:`AmbiguousSign` is raised; perturb phi and retry.  ``dps`` switches
    the evaluation to mpmath with that many decimal digits.
    """
    deltas = _deltas(spec, dps=dps)
    min_margin = min(abs(d) for d in deltas) if deltas else float("inf")
    if min_margin <= margin:
        raise AmbiguousSign(
            f"min |z(t)-z(s)| = {float(min_margin):.3e} <= margin {margin:.1e} "
            f"for (a,b,c,phi)=({spec.a},{spec.b},{spec.c},{spec.phi})",
            margin=float(min_margin),
        )
    return [1 if d > 0 else -1 for d in deltas], float(min_margin)


def build_diagram(
    spec: ChebyshevKnotSpec, margin: float = DEFAULT_MARGIN
) -> KnotDiagram:
    """Diagram with over/under from certified numeric signs.

    The tangent data (hence PD handedness) comes from the exact plane-curve
    pipeline; only the height comparisons are numeric.
    """
    signs, _ = numeric_sign_vector(spec, margin=margin)
    label = {"a": spec.a, "b": spec.b, "c": spec.c, "phi": str(spec.phi)}
    return assemble_diagram(spec.curve, signs, label=label)


def parse_signs(text: str) -> tuple[int, ...]:
    """Sign vector from a '+'/'-' string."""
    table = {"+": 1, "-": -1}
    try:
        return tuple(table[ch] for ch in text.strip())
    except KeyError:
        raise ValueError(f"sign string must contain only '+'/'-': {text!r}")


def format_signs(signs) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


@dataclass(frozen=True)
class SearchResult:
    a: int
    b: int
    c: int
    phi: Decimal
    margin: float
    signs: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "phi": str(self.phi),
            "margin": self.margin,
            "signs": format_signs(self.signs),
        }


def _phase_grid(phi_step: Decimal, phi_max: Decimal) -> list[Decimal]:
    """0, +step, -step, +2 step, ... out to phi_max, exact decimals."""
    grid = [Decimal(0)]
    k = 1
    while k * phi_step <= phi_max:
        grid.append(k * phi_step)
        grid.append(-k * phi_step)
        k += 1
    return grid


def search_phase(
    a: int,
    b: int,
    target,
    c_max: int = 1000,
    phi_step="0.001",
    phi_max=None,
    margin: float = DEFAULT_MARGIN,
) -> SearchResult:
    """First (c, phi) in deterministic order realizing the target signs.

    Candidates: c ascending over integers coprime to both a and b; for each c
    the phase sweeps outward from 0 in exact-decimal steps, with two refined
    probes (phi +- step/4) appended after any near-singular grid point.  The
    returned pair re-verifies by construction (its certified vector is the
    match).  Raises :class:`SearchNotFound` when the budget is exhausted.
    """
    curve = CurveSpec(a, b)
    curve.require_diagram_form()
    if isinstance(target, str):
        target = parse_signs(target)
    target = tuple(target)
    crossings = enumerate_crossings(curve)
    if len(target) != len(crossings):
        raise ValueError(
            f"target length {len(target)} != crossing count {len(crossings)}"
        )
    step = _as_decimal(phi_step)
    if step <= 0:
        raise ValueError("phi_step must be positive")
    if phi_max is None:
        # the paper-style bound keeping t_i + phi inside the fold
        phi_max = Decimal(repr(1 - cos(pi / (a * b))))
    else:
        phi_max = _as_decimal(phi_max)
    base_grid = _phase_grid(step, phi_max)

    ts = [cos(cr.u * pi / (a * b)) for cr in crossings]
    ss = [cos(cr.u2 * pi / (a * b)) for cr in crossings]

    import numpy as np

    for c in range(1, c_max + 1):
        if gcd(c, a) != 1 or gcd(c, b) != 1:
            continue
        queue = list(base_grid)
        qi = 0
        phis = np.array([float(p) for p in queue])
        args = np.concatenate(
            [np.add.outer(ts, phis), np.add.outer(ss, phis)], axis=0
        )
        vals = _np_cheb(c, args)
        deltas = vals[: len(ts)] - vals[len(ts):]
        while qi < len(queue):
            phi = queue[qi]
            if qi < deltas.shape[1]:
                dcol = deltas[:, qi]
            else:
                fphi = float(phi)
                dcol = np.array(
                    [
                        evaluate(c, t + fphi) - evaluate(c, s + fphi)
                        for t, s in zip(ts, ss)
                    ]
                )
            qi += 1
            mn = float(np.min(np.abs(dcol)))
            if mn <= margin:
                # near-singular phase: refine nearby, keep order deterministic
                quarter = step / 4
                for refined in (phi + quarter, phi - quarter):
                    if abs(refined) <= phi_max and refined not in queue:
                        queue.append(refined)
                continue
            signs = tuple(1 if d > 0 else -1 for d in dcol)
            if signs == target:
                return SearchResult(
                    a=a, b=b, c=c, phi=phi, margin=mn, signs=signs
                )
    raise SearchNotFound(
        f"no (c, phi) with c <= {c_max}, |phi| <= {phi_max}, step {step} "
        f"realizes {format_signs(target)}"
    )


def _np_cheb(n, x):
    import numpy as np

    if n == 0:
        return np.ones_like(x)
    prev = np.ones_like(x)
    cur = x.copy()
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def reversal_permutation(curve: CurveSpec) -> list[int]:
    """Crossing re-indexing induced by t -> -t (half-turn about the y axis).

    Entry i gives the index, in ``enumerate_crossings`` order, of the image of
    crossing i; the sign vector of (a,b,c,-phi) at the image equals the sign
    vector of (a,b,c,+phi) at the source when a is odd and b even (parity of
    the coordinate polynomials).
    """
    crossings = enumerate_crossings(curve)
    index = {(cr.k, cr.h): i for i, cr in enumerate(crossings)}
    a, b = curve.a, curve.b
    out = []
    for cr in crossings:
        k, h = cr.k, cr.h
        if k * b > h * a:
            out.append(index[(a - k, h)])
        else:
            out.append(index[(k, b - h)])
    return out
