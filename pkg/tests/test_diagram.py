"""Diagram structure: Gauss sequences, PD codes, tangent conventions."""

import random
from math import gcd

from chebknots import (
    CurveSpec,
    HarmonicKnotSpec,
    build_harmonic_diagram,
    enumerate_crossings,
)
from chebknots.diagram import abscissa_order, tangent_det_sign


def test_trefoil_pd_frozen():
    d = build_harmonic_diagram(HarmonicKnotSpec(3, 4, 5))
    assert d.pd == [(3, 1, 4, 6), (5, 3, 6, 2), (1, 5, 2, 4)]
    assert d.gauss_code() == [-3, 2, -1, 3, -2, 1]
    assert d.writhe() == 3
    assert d.sign_d == [1, -1, 1]
    assert d.is_alternating()


def test_gauss_structure():
    for a, b, c in ((3, 4, 5), (3, 8, 13), (5, 6, 7), (4, 5, 11)):
        d = build_harmonic_diagram(HarmonicKnotSpec(a, b, c))
        code = d.gauss_code()
        n = d.crossing_count
        assert len(code) == 2 * n
        for cid in range(1, n + 1):
            assert code.count(cid) == 1  # one over pass
            assert code.count(-cid) == 1  # one under pass


def test_pd_structure():
    for a, b, c in ((3, 4, 5), (3, 8, 13), (5, 6, 7)):
        d = build_harmonic_diagram(HarmonicKnotSpec(a, b, c))
        n = d.crossing_count
        counts = {}
        for tup in d.pd:
            for arc in tup:
                counts[arc] = counts.get(arc, 0) + 1
        assert set(counts) == set(range(1, 2 * n + 1))
        assert all(v == 2 for v in counts.values())
        # position 0 and 2 are the under strand, consecutive along the knot
        for tup in d.pd:
            assert tup[2] == tup[0] % (2 * n) + 1


def test_traversal_is_u_descending():
    d = build_harmonic_diagram(HarmonicKnotSpec(3, 8, 13))
    us = [p.u for p in d.passages]
    assert us == sorted(us, reverse=True)


def test_abscissa_order_matches_floats():
    from math import cos

    rng = random.Random(3)
    for _ in range(25):
        a = rng.choice([3, 5, 7])
        b = rng.randrange(2, 13)
        if gcd(a, b) != 1:
            continue
        crossings = enumerate_crossings(CurveSpec(a, b))
        order = abscissa_order(crossings)
        xs = [cos(crossings[i].x_angle.to_float()) for i in order]
        assert xs == sorted(xs)


def test_tangent_det_sign_matches_floats():
    from math import cos

    from chebknots import evaluate

    eps = 1e-7
    for a, b in ((3, 4), (3, 8), (5, 6), (5, 8)):
        for cr in enumerate_crossings(CurveSpec(a, b)):
            t = cos(cr.tau.to_float())
            s = cos(cr.sigma.to_float())

            def vel(u):
                return (
                    (evaluate(a, u + eps) - evaluate(a, u - eps)) / (2 * eps),
                    (evaluate(b, u + eps) - evaluate(b, u - eps)) / (2 * eps),
                )

            vt, vs = vel(t), vel(s)
            det = vt[0] * vs[1] - vt[1] * vs[0]
            assert (1 if det > 0 else -1) == tangent_det_sign(CurveSpec(a, b), cr)


def test_writhe_sign_relation():
    # orientation sign = twist sign times the sign of kb - ha
    for a, b, c in ((3, 4, 5), (3, 7, 8), (5, 6, 13), (3, 8, 10)):
        if gcd(c, a) != 1 or gcd(c, b) != 1:
            continue
        d = build_harmonic_diagram(HarmonicKnotSpec(a, b, c))
        for i, cr in enumerate(d.crossings):
            expected = d.sign_d[i] * (1 if cr.k * d.curve.b > cr.h * d.curve.a else -1)
            assert d.writhe_signs[i] == expected


def test_json_envelope():
    import json

    d = build_harmonic_diagram(HarmonicKnotSpec(3, 4, 5))
    payload = json.loads(json.dumps(d.to_json()))
    assert payload["a"] == 3 and payload["b"] == 4 and payload["c"] == 5
    assert len(payload["crossings"]) == 3
    assert payload["gauss"] == [-3, 2, -1, 3, -2, 1]
    assert payload["crossings"][0]["x_angle"] == [7, 4]


def test_empty_diagram():
    d = build_harmonic_diagram(HarmonicKnotSpec(1, 4, 3))
    assert d.crossing_count == 0
    assert d.gauss_code() == []
    assert d.pd == []
