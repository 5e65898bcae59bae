"""Command-line interface.

Subcommands: diagram, identify, classes, table, search, braid, billiard.
All outputs are UTF-8 text; ``--format json`` emits the documented JSON
schemas instead, including machine-readable errors.  Exit code 0 means no
library error occurred (for ``table``, additionally that the regenerated
rows match the bundled expected list).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from math import cos, pi

from .bracket import determinant, goeritz_determinant, jones
from .diagram import KnotDiagram
from .errors import CFDivisionByZero, ChebknotsError
from .harmonic import HarmonicKnotSpec, build_diagram as harmonic_diagram
from .harmonic import enumerate_family
from .phased import (
    ChebyshevKnotSpec,
    build_diagram as phased_diagram,
    format_signs,
    numeric_sign_vector,
    parse_signs,
    search_phase,
)
from .plane_curve import CurveSpec, billiard_map, plane_braid_word
from .rational import continued_fraction_value, conway_from_a3_diagram
from .tables import identify as identify_diagram


def _build(a, b, c, phi, margin):
    if phi is None or str(phi) in ("0", "0.0"):
        return harmonic_diagram(HarmonicKnotSpec(a, b, c))
    return phased_diagram(ChebyshevKnotSpec(a, b, c, phi), margin=margin)


def _diagram_payload(diagram: KnotDiagram) -> dict:
    payload = diagram.to_json()
    if diagram.curve.a == 3:
        form = conway_from_a3_diagram(diagram)
        payload["conway"] = list(form.entries)
        try:
            frac = continued_fraction_value(form, strict=False)
            payload["schubert_fraction"] = [frac.p, frac.q]
        except CFDivisionByZero:
            payload["schubert_fraction"] = None
    return payload


def cmd_diagram(args) -> int:
    diagram = _build(args.a, args.b, args.c, args.phi, args.margin)
    if args.svg:
        from .render import render_svg

        render_svg(diagram, args.svg)
    if args.format == "json":
        print(json.dumps(_diagram_payload(diagram)))
        return 0
    if args.format == "gauss":
        print(" ".join(str(g) for g in diagram.gauss_code()))
        return 0
    if args.format == "pd":
        print("; ".join("X[%d,%d,%d,%d]" % tup for tup in diagram.pd))
        return 0
    name = f"H({args.a},{args.b},{args.c})"
    if args.phi:
        name = f"C({args.a},{args.b},{args.c}; phi={args.phi})"
    print(f"{name}: {diagram.crossing_count} crossings, writhe {diagram.writhe()}")
    print("gauss:", " ".join(str(g) for g in diagram.gauss_code()))
    print("pd:   ", "; ".join("X[%d,%d,%d,%d]" % tup for tup in diagram.pd))
    print("twist signs:", format_signs(diagram.sign_d))
    print("alternating:", "yes" if diagram.is_alternating() else "no")
    if diagram.curve.a == 3:
        form = conway_from_a3_diagram(diagram)
        print("conway:", "C(" + ",".join(str(e) for e in form.entries) + ")")
        try:
            frac = continued_fraction_value(form, strict=False)
            print("schubert fraction:", frac)
        except CFDivisionByZero:
            print("schubert fraction: undefined (pole)")
    res = identify_diagram(diagram)
    print("identified as:", res.display_name)
    if args.svg:
        print("svg written to:", args.svg)
    return 0


def cmd_identify(args) -> int:
    diagram = _build(args.a, args.b, args.c, args.phi, args.margin)
    res = identify_diagram(diagram)
    if args.format == "json":
        payload = {
            "status": res.status,
            "name": res.display_name,
            "mirrored": res.mirrored,
            "amphichiral": res.amphichiral,
            "determinant": res.determinant,
            "jones": res.jones.canonical_text(),
        }
        if res.fraction is not None:
            payload["schubert_fraction"] = [res.fraction.p, res.fraction.q]
        print(json.dumps(payload))
        return 0
    print(f"knot: {res.display_name}")
    print(f"determinant: {res.determinant}")
    print(f"jones: {res.jones}")
    if res.fraction is not None:
        print(f"schubert fraction: {res.fraction}")
    return 0


def cmd_classes(args) -> int:
    family = enumerate_family(args.a, args.b)
    rows = []
    for c in family.representatives:
        diagram = harmonic_diagram(HarmonicKnotSpec(args.a, args.b, c))
        res = identify_diagram(diagram)
        rows.append({"c": c, "mirror_c": dict(family.mirror_pairs).get(c, c),
                     "knot": res.display_name})
    if args.format == "json":
        print(json.dumps({"a": args.a, "b": args.b,
                          "values": list(family.values), "classes": rows}))
        return 0
    print(f"H({args.a},{args.b},c): {len(family.values)} coprime heights, "
          f"{len(rows)} mirror classes")
    for row in rows:
        print(f"  c={row['c']:>3} (mirror c'={row['mirror_c']:>3}): {row['knot']}")
    return 0


def cmd_table(args) -> int:
    expected = json.loads(
        resources.files("chebknots.data")
        .joinpath("concluding_tables.json")
        .read_text()
    )
    rows = []
    failures = 0
    for exp in expected["rows"]:
        diagram = harmonic_diagram(HarmonicKnotSpec(exp["a"], exp["b"], exp["c"]))
        res = identify_diagram(diagram)
        ok = res.display_name == exp["knot"]
        failures += 0 if ok else 1
        rows.append(
            {
                "a": exp["a"],
                "b": exp["b"],
                "c": exp["c"],
                "expected": exp["knot"],
                "computed": res.display_name,
                "match": ok,
            }
        )
    if args.format == "json":
        print(json.dumps({"rows": rows, "failures": failures}))
        return 0 if failures == 0 else 1
    for row in rows:
        mark = "ok " if row["match"] else "DIFF"
        print(
            f"  [{mark}] H({row['a']},{row['b']},{row['c']})"
            f" -> {row['computed']} (expected {row['expected']})"
        )
    print(f"{len(rows)} rows, {failures} mismatches")
    return 0 if failures == 0 else 1


def cmd_search(args) -> int:
    target = parse_signs(args.signs)
    result = search_phase(
        args.a,
        args.b,
        target,
        c_max=args.c_max,
        phi_step=args.phi_step,
        phi_max=args.phi_max,
        margin=args.margin,
    )
    if args.format == "json":
        print(json.dumps(result.to_json()))
        return 0
    print(f"c={result.c} phi={result.phi} margin={result.margin:.3g} "
          f"signs={format_signs(result.signs)}")
    return 0


def cmd_braid(args) -> int:
    word = plane_braid_word(CurveSpec(args.a, args.b))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "strings": word.strings,
                    "letters": list(word.letters),
                    "generators": word.generators(),
                    "plat_pairs": list(word.plat_pairs) if word.plat_pairs else None,
                }
            )
        )
        return 0
    print("word:", " ".join(word.letters))
    print("generators:", " ".join(f"s{i}" for i in word.generators()))
    if word.plat_pairs:
        print(
            f"plat closure on {word.strings + 1} strings:",
            " ".join(f"{i}-{j}" for i, j in word.plat_pairs),
        )
    return 0


def cmd_billiard(args) -> int:
    spec = CurveSpec(args.a, args.b)
    spec.require_diagram_form()
    from .chebyshev import evaluate

    points = []
    for i in range(args.samples):
        t = cos(pi * (1 - (i + 0.5) / args.samples))
        x, y = evaluate(args.a, t), evaluate(args.b, t)
        X, Y = billiard_map(spec, (x, y))
        points.append((X, Y))
    if args.format == "json":
        print(json.dumps({"a": args.a, "b": args.b, "points": points}))
        return 0
    for X, Y in points:
        print(f"{X:.6f} {Y:.6f}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebknots",
        description="Diagrams, invariants and phase search for Chebyshev "
        "space-curve knots x=T_a(t), y=T_b(t), z=T_c(t+phi).",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json", "gauss", "pd"),
        default="text",
        help="output format (gauss/pd apply to the diagram subcommand)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec(p, with_c=True):
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)
        if with_c:
            p.add_argument("c", type=int)
            p.add_argument("--phi", default=None,
                           help="phase as a decimal string, e.g. 0.01")
            p.add_argument("--margin", type=float, default=1e-9,
                           help="sign certification margin")

    p = sub.add_parser("diagram", help="build a diagram and print its codes")
    add_spec(p)
    p.add_argument("--svg", metavar="PATH", default=None,
                   help="also write an SVG drawing")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("identify", help="identify the knot of a diagram")
    add_spec(p)
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("classes", help="mirror classes of a harmonic family")
    add_spec(p, with_c=False)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("table", help="regenerate the named-knot tables and diff")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("search", help="search (c, phi) for a crossing-sign pattern")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--signs", required=True, help="target pattern, e.g. '----+++'")
    p.add_argument("--c-max", type=int, default=1000)
    p.add_argument("--phi-step", default="0.001")
    p.add_argument("--phi-max", default=None)
    p.add_argument("--margin", type=float, default=1e-9)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("braid", help="plane braid word of the curve")
    add_spec(p, with_c=False)
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("billiard", help="billiard-map image of curve samples")
    add_spec(p, with_c=False)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_billiard)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChebknotsError as exc:
        if args.format == "json":
            print(json.dumps({"error": {"code": exc.code, "message": str(exc)}}))
        else:
            print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
