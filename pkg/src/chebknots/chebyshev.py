"""Chebyshev polynomials of the first kind.

Numeric evaluation uses the three-term recurrence, which is stable on [-1,1]
and costs O(n).  Slightly outside [-1,1] (phase-shifted arguments) the same
recurrence is used as-is; values then grow like cosh(n*arccosh|t|).
Coefficient expansion is provided only for display purposes.
"""

from __future__ import annotations

from .angles import AngleFraction, require_nonzero_sin, sign_sin

__all__ = [
    "evaluate",
    "evaluate_many",
    "eval_at_angle",
    "derivative_sign_at_angle",
    "coefficients",
]


def evaluate(n: int, t: float) -> float:
    """T_n(t) by the recurrence T_{k+1} = 2 t T_k - T_{k-1}."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return 1.0
    prev, cur = 1.0, t
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * t * cur - prev
    return cur


def evaluate_many(n: int, t):
    """Vectorized T_n over a numpy array of arguments."""
    import numpy as np

    t = np.asarray(t, dtype=float)
    if n == 0:
        return np.ones_like(t)
    prev = np.ones_like(t)
    cur = t.copy()
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * t * cur - prev
    return cur


def eval_at_angle(n: int, theta: AngleFraction) -> AngleFraction:
    """The angle n*theta, so that T_n(cos theta) = cos(eval_at_angle(n, theta))."""
    return theta * n


def derivative_sign_at_angle(n: int, theta: AngleFraction) -> int:
    """Exact sign of T_n'(cos theta) = n sin(n theta)/sin(theta).

    Raises :class:`DegenerateAngle` when sin(theta) = 0; returns 0 at the
    critical points of T_n (sin(n theta) = 0).
    """
    s_theta = require_nonzero_sin(theta)
    return sign_sin(theta * n) * s_theta


def coefficients(n: int) -> list[int]:
    """Integer coefficients of T_n, lowest degree first."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return [1]
    prev, cur = [1], [0, 1]
    for _ in range(n - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur
