"""Chebyshev polynomial evaluation and angle identities."""

from math import acos, cos

import pytest

from chebknots import AngleFraction, coefficients, evaluate
from chebknots.chebyshev import derivative_sign_at_angle, eval_at_angle, evaluate_many
from chebknots.errors import DegenerateAngle


def test_point_values():
    assert evaluate(0, 0.37) == 1.0
    for n in (1, 2, 7, 40):
        assert evaluate(n, 1.0) == pytest.approx(1.0, abs=1e-12)
    assert evaluate(3, 0.5) == pytest.approx(-1.0, abs=1e-12)


def test_matches_cosine_form_up_to_degree_200():
    ts = [-1.0 + 2.0 * i / 100 for i in range(101)]
    for n in list(range(1, 30)) + list(range(30, 201, 17)) + [200]:
        for t in ts:
            assert abs(evaluate(n, t) - cos(n * acos(max(-1.0, min(1.0, t))))) < 1e-10


def test_composition_property():
    ts = [-1.0 + 2.0 * i / 999 for i in range(1000)]
    for a, b in ((2, 3), (3, 4), (5, 7), (12, 11)):
        for t in ts[::37]:
            assert abs(evaluate(a, evaluate(b, t)) - evaluate(a * b, t)) < 1e-8
    # denser grid for one pair
    for t in ts:
        assert abs(evaluate(3, evaluate(4, t)) - evaluate(12, t)) < 1e-8


def test_parity_and_bound():
    ts = [-1.0 + 2.0 * i / 999 for i in range(1000)]
    for n in (1, 2, 3, 8, 13):
        for t in ts[::53]:
            assert evaluate(n, -t) == pytest.approx(
                (-1) ** n * evaluate(n, t), abs=1e-12
            )
    for n in (1, 5, 12, 60):
        assert all(abs(evaluate(n, t)) <= 1 + 1e-12 for t in ts)


def test_evaluate_many_matches_scalar():
    import numpy as np

    ts = np.linspace(-1.2, 1.2, 57)
    for n in (0, 1, 2, 9, 33):
        vec = evaluate_many(n, ts)
        for t, v in zip(ts, vec):
            assert v == pytest.approx(evaluate(n, float(t)), rel=1e-13, abs=1e-13)


def test_eval_at_angle():
    assert eval_at_angle(5, AngleFraction(1, 5)) == AngleFraction(1, 1)
    assert eval_at_angle(2, AngleFraction(1, 4)) == AngleFraction(1, 2)
    assert eval_at_angle(10, AngleFraction(1, 15)) == AngleFraction(2, 3)


def test_derivative_sign_at_angle():
    assert derivative_sign_at_angle(3, AngleFraction(1, 4)) == 1
    # critical point of T_3 at theta = pi/3
    assert derivative_sign_at_angle(3, AngleFraction(1, 3)) == 0
    assert derivative_sign_at_angle(8, AngleFraction(5, 8)) == 0
    with pytest.raises(DegenerateAngle):
        derivative_sign_at_angle(3, AngleFraction(0, 1))


def test_derivative_sign_matches_finite_differences():
    eps = 1e-7
    for n in (2, 3, 5, 8):
        for m in range(1, 24):
            theta = AngleFraction(m, 24)
            from chebknots.angles import sign_sin

            if sign_sin(theta) == 0:
                continue
            t = cos(theta.to_float())
            num = (evaluate(n, t + eps) - evaluate(n, t - eps)) / (2 * eps)
            expected = derivative_sign_at_angle(n, theta)
            if expected == 0:
                assert abs(num) < 1e-4
            else:
                assert num * expected > 0


def test_coefficients():
    assert coefficients(0) == [1]
    assert coefficients(1) == [0, 1]
    assert coefficients(3) == [0, -3, 0, 4]
    assert coefficients(5) == [0, 5, 0, -20, 0, 16]
    # coefficient form agrees with the recurrence
    for n in (2, 6, 9):
        cs = coefficients(n)
        for t in (-0.9, -0.3, 0.2, 0.77):
            direct = sum(c * t**i for i, c in enumerate(cs))
            assert direct == pytest.approx(evaluate(n, t), abs=1e-10)
