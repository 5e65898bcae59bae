"""SVG rendering of Chebyshev knot diagrams.

The plane curve is sampled uniformly in the angle t = cos(theta) (constant
angular speed on the folded square), with short tails beyond |t| = 1 for the
two ends.  At every crossing the strand passing under is interrupted inside a
fixed-radius disc around the exact crossing point; crossing coordinates come
from the exact angle data, only the polyline itself is sampled.
"""

from __future__ import annotations

from math import acosh, cos, cosh, pi

from .chebyshev import evaluate
from .diagram import KnotDiagram

__all__ = ["render_svg"]


def _speed(a, b, t, eps=1e-6):
    dx = (evaluate(a, t + eps) - evaluate(a, t - eps)) / (2 * eps)
    dy = (evaluate(b, t + eps) - evaluate(b, t - eps)) / (2 * eps)
    return max((dx * dx + dy * dy) ** 0.5, 1e-9)


def render_svg(
    diagram: KnotDiagram,
    path: str,
    size: int = 560,
    gap: float = 0.06,
    samples: int = 1200,
    stroke: str = "#1a1a1a",
) -> None:
    """Write an SVG drawing of the diagram with under-strand gaps."""
    a, b = diagram.curve.a, diagram.curve.b
    ab = a * b

    # parameter windows to cut around each under passage
    windows = []
    for i, cr in enumerate(diagram.crossings):
        u_under = cr.u2 if diagram.zdiff[i] > 0 else cr.u
        t_under = cos(u_under * pi / ab)
        w = gap / _speed(a, b, t_under)
        windows.append((t_under - w, t_under + w))

    # sample params: tails beyond the square plus the folded interior
    xmax = 1.3
    tail = acosh(xmax) / a  # T_a(cosh s) = cosh(a s)
    ts = []
    n_tail = max(8, samples // 40)
    for i in range(n_tail, 0, -1):
        ts.append(-cosh(tail * i / n_tail))
    ts.extend(cos(pi * (1 - i / samples)) for i in range(samples + 1))
    for i in range(1, n_tail + 1):
        ts.append(cosh(tail * i / n_tail))

    segments = [[]]
    for t in ts:
        if any(lo < t < hi for lo, hi in windows):
            if segments[-1]:
                segments.append([])
            continue
        segments[-1].append((evaluate(a, t), evaluate(b, t)))
    segments = [s for s in segments if len(s) > 1]

    pad = 0.12
    scale = size / (2 * xmax + 2 * pad)

    def to_px(p):
        x, y = p
        return (
            (x + xmax + pad) * scale,
            (xmax + pad - y) * scale,
        )

    paths = []
    for seg in segments:
        pts = " ".join(f"{px:.2f},{py:.2f}" for px, py in map(to_px, seg))
        paths.append(
            f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
            f'stroke-width="2.2" stroke-linecap="round" '
            f'stroke-linejoin="round"/>'
        )

    label = diagram.label
    title = "H({a},{b},{c})".format(**label) if label else "Chebyshev curve"
    if label.get("phi") not in (0, "0", None):
        title += f", phi={label['phi']}"
    svg = "\n".join(
        [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
            f'height="{size}" viewBox="0 0 {size} {size}">',
            f'<rect width="{size}" height="{size}" fill="white"/>',
            f'<title>{title}</title>',
            *paths,
            "</svg>",
        ]
    )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg + "\n")
