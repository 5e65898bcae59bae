"""Harmonic knots: exact signs, diagrams, c-equivalences, families."""

import random
from math import gcd

import pytest

from chebknots import (
    AngleFraction,
    HarmonicKnotSpec,
    build_harmonic_diagram,
    crossing_sign,
    enumerate_crossings,
    enumerate_family,
    evaluate,
    is_alternating,
    mirror_c,
    normalize_c,
    sign_sin,
    z_difference_sign,
)
from chebknots.errors import NotCoprime


def lemma_sign(a, b, c, k, h):
    """Four-sine product, an independent route to the twist sign."""
    s = (
        sign_sin(AngleFraction(a * h, b))
        * sign_sin(AngleFraction(b * k, a))
        * sign_sin(AngleFraction(c * h, b))
        * sign_sin(AngleFraction(c * k, a))
    )
    return -((-1) ** (h + k)) * s


def test_pairwise_coprime_required():
    with pytest.raises(NotCoprime):
        HarmonicKnotSpec(3, 6, 5)
    with pytest.raises(NotCoprime):
        HarmonicKnotSpec(3, 4, 9)
    with pytest.raises(NotCoprime):
        HarmonicKnotSpec(3, 4, 8)


def test_trefoil_signs_and_conway():
    spec = HarmonicKnotSpec(3, 4, 5)
    assert crossing_sign(spec, 1, 1) == 1
    assert crossing_sign(spec, 1, 2) == -1
    assert crossing_sign(spec, 2, 1) == 1
    # the twist signs assemble into the all-ones Conway normal form
    from chebknots import conway_from_a3_diagram

    d = build_harmonic_diagram(spec)
    assert conway_from_a3_diagram(d).entries == (1, 1, 1)


def test_zdiff_example_h345():
    spec = HarmonicKnotSpec(3, 4, 5)
    assert z_difference_sign(spec, 1, 1) == -1


def test_torus_proof_pointwise_signs():
    # H(3, 3n+2's proof family): b = 3n+1, c = 3n+2; points A_k, B_k, C_k
    for n in (2, 3, 4):
        b, c = 3 * n + 1, 3 * n + 2
        spec = HarmonicKnotSpec(3, b, c)
        crossings = {cr.u: cr for cr in enumerate_crossings(spec.curve)}
        for k in range(n):
            a_cr = crossings[2 * b - (3 * k + 1)]
            b_cr = crossings[2 * b + 3 * k + 2]
            c_cr = crossings[2 * b + 3 * k + 3]
            assert crossing_sign(spec, a_cr.k, a_cr.h) == 1
            assert crossing_sign(spec, b_cr.k, b_cr.h) == -1
            assert crossing_sign(spec, c_cr.k, c_cr.h) == 1
            # height-difference signs at the smaller branch parameter
            assert z_difference_sign(spec, a_cr.k, a_cr.h) == (-1) ** (k + 1)
            assert z_difference_sign(spec, b_cr.k, b_cr.h) == (-1) ** k
            assert z_difference_sign(spec, c_cr.k, c_cr.h) == (-1) ** (k + 1)


def test_two_sign_routes_agree():
    # product route (zdiff * x'y') equals the four-sine product everywhere
    rng = random.Random(11)
    for _ in range(200):
        a = rng.choice([3, 5, 7, 9])
        b = rng.randrange(2, 15)
        c = rng.randrange(1, 3 * a * b)
        if gcd(a, b) != 1 or gcd(c, a) != 1 or gcd(c, b) != 1:
            continue
        spec = HarmonicKnotSpec(a, b, c)
        for cr in enumerate_crossings(spec.curve):
            ca, cb = spec.curve.a, spec.curve.b
            assert crossing_sign(spec, cr.k, cr.h) == lemma_sign(
                ca, cb, c, cr.k, cr.h
            )


def test_signs_match_floating_point():
    from math import cos

    rng = random.Random(5)
    checked = 0
    while checked < 60:
        a = rng.choice([3, 5])
        b = rng.randrange(2, 13)
        c = rng.randrange(1, a * b + 1)
        if gcd(a, b) != 1 or gcd(c, a) != 1 or gcd(c, b) != 1:
            continue
        checked += 1
        spec = HarmonicKnotSpec(a, b, c)
        eps = 1e-7
        for cr in enumerate_crossings(spec.curve):
            ca, cb = spec.curve.a, spec.curve.b
            t = cos(cr.tau.to_float())
            s = cos(cr.sigma.to_float())
            zd = evaluate(c, t) - evaluate(c, s)
            xp = (evaluate(ca, t + eps) - evaluate(ca, t - eps)) / (2 * eps)
            yp = (evaluate(cb, t + eps) - evaluate(cb, t - eps)) / (2 * eps)
            assert abs(zd) > 1e-12
            numeric = 1 if zd * xp * yp > 0 else -1
            assert numeric == crossing_sign(spec, cr.k, cr.h)
            assert (1 if zd > 0 else -1) == z_difference_sign(spec, cr.k, cr.h)


def test_alternation_for_critical_height():
    for a in range(2, 7):
        for b in range(2, 13):
            c = a * b - a - b
            if gcd(a, b) != 1 or c < 1:
                continue
            spec = HarmonicKnotSpec(a, b, c)
            assert is_alternating(build_harmonic_diagram(spec)), (a, b, c)
            # reduced sign law at every crossing, in the drawn frame
            ca, cb = spec.curve.a, spec.curve.b
            for cr in enumerate_crossings(spec.curve):
                assert crossing_sign(spec, cr.k, cr.h) == -(
                    (-1) ** (ca * cr.h + cb * cr.k)
                )
                assert crossing_sign(spec, cr.k, cr.h) == -((-1) ** cr.u)


def test_alternation_test_discriminates():
    # some other height fails alternation for each of these pairs
    for a, b in ((3, 7), (3, 8), (4, 5), (5, 6)):
        c_alt = a * b - a - b
        found_nonalt = False
        for c in range(1, a * b):
            if gcd(c, a) != 1 or gcd(c, b) != 1 or c == c_alt:
                continue
            if not is_alternating(build_harmonic_diagram(HarmonicKnotSpec(a, b, c))):
                found_nonalt = True
                break
        assert found_nonalt, (a, b)


def test_h378_not_alternating():
    assert not is_alternating(build_harmonic_diagram(HarmonicKnotSpec(3, 7, 8)))


def test_normalize_c():
    assert normalize_c(3, 4, 29) == 5
    assert normalize_c(3, 4, 19) == 5
    assert normalize_c(3, 5, 23) == 7
    with pytest.raises(NotCoprime):
        normalize_c(4, 6, 5)


def test_normalize_preserves_full_sign_data():
    for a, b, c in ((3, 5, 23), (3, 4, 29), (5, 6, 47), (3, 8, 37)):
        cn = normalize_c(a, b, c)
        s1 = build_harmonic_diagram(HarmonicKnotSpec(a, b, c))
        s2 = build_harmonic_diagram(HarmonicKnotSpec(a, b, cn))
        assert s1.sign_d == s2.sign_d
        assert s1.zdiff == s2.zdiff


def test_mirror_c():
    assert mirror_c(3, 4, 5) == 11
    for n in range(1, 5):
        assert mirror_c(3, 3 * n + 1, 3 * n + 2) == 3 * (3 * n + 1) - 1
    # involution on normal representatives
    for a, b in ((3, 4), (3, 5), (5, 6)):
        for c in range(1, a * b):
            if gcd(c, a) != 1 or gcd(c, b) != 1:
                continue
            assert mirror_c(a, b, mirror_c(a, b, c)) == normalize_c(a, b, c)


def test_mirror_negates_sign_vectors():
    for a, b, c in ((3, 4, 5), (3, 7, 8), (5, 6, 7), (3, 8, 13)):
        cm = mirror_c(a, b, c)
        d1 = build_harmonic_diagram(HarmonicKnotSpec(a, b, c))
        d2 = build_harmonic_diagram(HarmonicKnotSpec(a, b, cm))
        assert d2.sign_d == [-s for s in d1.sign_d]
        assert d2.zdiff == [-z for z in d1.zdiff]


def test_enumerate_family():
    fam = enumerate_family(5, 6)
    assert len(fam.values) == 8
    assert len(fam.mirror_pairs) == 4
    assert fam.representatives == (1, 7, 13, 19)
    assert fam.self_paired == ()

    assert len(enumerate_family(3, 4).values) == 4
    fam35 = enumerate_family(3, 5)
    assert len(fam35.values) == 8
    assert len(fam35.mirror_pairs) == 4


def test_family_counts_are_totient_products():
    def phi(n):
        return sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)

    for a, b in ((3, 7), (5, 8), (7, 4)):
        fam = enumerate_family(a, b)
        assert len(fam.values) == phi(a) * phi(b)
        assert 2 * len(fam.mirror_pairs) + len(fam.self_paired) == phi(a) * phi(b)


def test_monotone_height_is_unknotted():
    from chebknots import jones

    for a, b in ((3, 4), (3, 5), (4, 5)):
        d = build_harmonic_diagram(HarmonicKnotSpec(a, b, 1))
        assert all(z == -1 for z in d.zdiff)  # height ordered by parameter
        assert jones(d.pd) == jones([])  # unknot
