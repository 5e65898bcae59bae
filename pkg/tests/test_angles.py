"""Exact rational-angle arithmetic."""

import mpmath
import pytest

from chebknots import AngleFraction, compare_cos, sign_cos, sign_sin
from chebknots.angles import require_nonzero_sin
from chebknots.errors import DegenerateAngle


def test_sign_sin_examples():
    assert sign_sin(AngleFraction(1, 3)) == 1
    assert sign_sin(AngleFraction(4, 3)) == -1
    assert sign_sin(AngleFraction(6, 3)) == 0


def test_sign_cos_examples():
    assert sign_cos(AngleFraction(0, 1)) == 1
    assert sign_cos(AngleFraction(1, 2)) == 0
    assert sign_cos(AngleFraction(1, 1)) == -1


def test_compare_cos_examples():
    assert compare_cos(AngleFraction(1, 8), AngleFraction(2, 8)) == 1
    assert compare_cos(AngleFraction(1, 4), AngleFraction(2, 8)) == 0
    # cosine is even: 7pi/4 folds onto pi/4
    assert compare_cos(AngleFraction(7, 4), AngleFraction(1, 4)) == 0


def test_canonical_form_and_equality():
    assert AngleFraction(2, 8) == AngleFraction(1, 4)
    assert hash(AngleFraction(10, 4)) == hash(AngleFraction(5, 2))
    assert AngleFraction(-1, 4) == AngleFraction(7, 4)
    a = AngleFraction(9, 3)
    assert (a.m, a.N) == (1, 1)
    with pytest.raises(ValueError):
        AngleFraction(1, 0)


def test_sign_sin_exhaustive_against_high_precision():
    # spec-level sweep: all denominators N <= 60, numeric magnitude > 1e-12
    with mpmath.workdps(40):
        for N in range(1, 61):
            for m in range(-2 * N, 2 * N + 1):
                val = mpmath.sin(mpmath.pi * m / N)
                if abs(val) <= mpmath.mpf("1e-12"):
                    assert sign_sin(AngleFraction(m, N)) == 0, (m, N)
                else:
                    expected = 1 if val > 0 else -1
                    assert sign_sin(AngleFraction(m, N)) == expected, (m, N)


def test_sign_sin_symmetries():
    for N in range(1, 40):
        for m in range(-N, 3 * N):
            assert sign_sin(AngleFraction(m + 2 * N, N)) == sign_sin(
                AngleFraction(m, N)
            )
            assert sign_sin(AngleFraction(-m, N)) == -sign_sin(AngleFraction(m, N))


def test_compare_cos_matches_numeric_on_grid():
    with mpmath.workdps(40):
        angles = [
            AngleFraction(m, N) for N in range(1, 25) for m in range(0, 2 * N)
        ]
        values = [mpmath.cos(mpmath.pi * a.m / a.N) for a in angles]
        for i in range(0, len(angles), 7):
            for j in range(0, len(angles), 11):
                c = compare_cos(angles[i], angles[j])
                diff = values[i] - values[j]
                if abs(diff) <= mpmath.mpf("1e-25"):
                    assert c == 0, (angles[i], angles[j])
                else:
                    assert c == (1 if diff > 0 else -1), (angles[i], angles[j])


def test_compare_cos_total_order():
    angles = [AngleFraction(m, 12) for m in range(0, 13)]
    # antisymmetry and transitivity on a folded chain
    for x in angles:
        for y in angles:
            assert compare_cos(x, y) == -compare_cos(y, x)
    chain = sorted(angles, key=lambda a: a.folded_numerator()[0] / a.folded_numerator()[1])
    for i in range(len(chain) - 1):
        assert compare_cos(chain[i], chain[i + 1]) >= 0


def test_angle_arithmetic():
    assert AngleFraction(1, 6) * 3 == AngleFraction(1, 2)
    assert AngleFraction(1, 6) + AngleFraction(1, 3) == AngleFraction(1, 2)
    assert -AngleFraction(1, 4) == AngleFraction(7, 4)


def test_require_nonzero_sin():
    assert require_nonzero_sin(AngleFraction(1, 4)) == 1
    with pytest.raises(DegenerateAngle):
        require_nonzero_sin(AngleFraction(0, 1))
    with pytest.raises(DegenerateAngle):
        require_nonzero_sin(AngleFraction(5, 5))
