"""Command line front end.

Exit codes: 0 on success (identity holds, property verified), 1 on a
verified-false outcome (reciprocity fails, complex not CM, selection not
separable, scan found violations), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import jsonio, suite
from .enumerator import (
    COMPLEMENT,
    SELECTED,
    DomainSpec,
    FacetSelection,
    default_grading,
    domain_gf,
    expand,
    lattice_points,
    reciprocity_check,
    verify_colon_identity,
)
from .geometry import GF2, QQ, FieldSpec
from .lifting import lift, schlegel, schlegel_of_selection, verify_lower_hull
from .separation import DegeneratePoint, line_shelling, separation_witness
from .topology import barycentric, boundary_subcomplex, is_cohen_macaulay, reduced_homology

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INPUT = 2


def _load_json(path):
    with open(path) as handle:
        return json.load(handle)


def _parse_select(text):
    return frozenset(int(t) for t in text.split(",") if t.strip() != "")


def _parse_vector(text):
    return tuple(int(t) for t in text.split(","))


def _parse_point(text):
    return tuple(Fraction(t) for t in text.split(","))


def _fields(args):
    if args.field:
        return tuple(FieldSpec.parse(f) for f in args.field)
    return (QQ, GF2)


def _emit(args, payload: dict, text_lines):
    if args.json:
        sys.stdout.write(jsonio.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _selection(args, cone) -> FacetSelection:
    if not args.select:
        raise ValueError("--select i,j,... is required for this command")
    return FacetSelection(cone, _parse_select(args.select))


def cmd_enumerate(args) -> int:
    cone = jsonio.cone_from_dict(_load_json(args.input))
    selection = _selection(args, cone)
    side = SELECTED if args.side == "selected" else COMPLEMENT
    spec = DomainSpec(selection, side)
    w = _parse_vector(args.grading) if args.grading else default_grading(cone)
    series = lattice_points(spec, w, args.degree)
    gf = domain_gf(spec)
    check = expand(gf, w, args.degree).coeffs == series.coeffs
    payload = {
        "series": jsonio.series_to_dict(series),
        "gf": jsonio.gf_to_dict(gf),
        "expansion_matches": check,
    }
    lines = [
        f"grading {list(w)}, bound {args.degree}",
        f"points by degree: {series.degree_counts()}",
        f"gf numerator terms: {len(gf.numerator.terms)}, denominator rays: {len(gf.denom_rays)}",
        f"expansion matches direct count: {check}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if check else EXIT_FALSIFIED


def cmd_reciprocity(args) -> int:
    cone = jsonio.cone_from_dict(_load_json(args.input))
    selection = _selection(args, cone)
    grading = _parse_vector(args.grading) if args.grading else None
    report = reciprocity_check(selection, _fields(args), grading=grading)
    payload = report.to_json()
    lines = [f"holds: {report.holds}", f"cm: {report.cm_over}"]
    if not report.holds:
        lines.append(f"first disagreement: {payload['first_disagreement']}")
    _emit(args, payload, lines)
    return EXIT_OK if report.holds else EXIT_FALSIFIED


def cmd_cm(args) -> int:
    data = _load_json(args.input)
    if "rays" in data or "inequalities" in data:
        cone = jsonio.cone_from_dict(data)
        selection = _selection(args, cone)
        sc = barycentric(boundary_subcomplex(selection))
    else:
        sc = jsonio.simplicial_from_dict(data)
    verdicts = {}
    betti = {}
    for field in _fields(args):
        cert = is_cohen_macaulay(sc, field)
        verdicts[field.label] = {
            "is_cm": cert.is_cm,
            "failing_face": list(cert.failing_face) if cert.failing_face is not None else None,
            "failing_index": cert.failing_index,
            "failing_betti": cert.failing_betti,
        }
        betti[field.label] = list(reduced_homology(sc, field).betti) if sc.dim >= 0 else []
    payload = {"cm": verdicts, "betti": betti}
    lines = [f"{label}: {v}" for label, v in verdicts.items()]
    _emit(args, payload, lines)
    return EXIT_OK if all(v["is_cm"] for v in verdicts.values()) else EXIT_FALSIFIED


def cmd_separate(args) -> int:
    cone = jsonio.cone_from_dict(_load_json(args.input))
    selection = _selection(args, cone)
    result = separation_witness(selection)
    payload = {
        "separable": result.separable,
        "witness": [jsonio.fraction_str(x) for x in result.witness] if result.witness else None,
    }
    lines = [f"separable: {result.separable}"]
    if result.witness:
        lines.append(f"witness: {payload['witness']}")
    _emit(args, payload, lines)
    return EXIT_OK if result.separable else EXIT_FALSIFIED


def cmd_shell(args) -> int:
    cone = jsonio.cone_from_dict(_load_json(args.input))
    if args.point:
        base = _parse_point(args.point)
    else:
        rng = random.Random(args.seed)
        base = tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(cone.dim))
    attempt_rng = random.Random(args.seed)
    for attempt in range(64):
        if attempt == 0:
            candidate = base
        else:
            eps = Fraction(1, 2 ** (attempt + 3))
            candidate = tuple(b + eps * Fraction(attempt_rng.randint(1, 97), 97) for b in base)
        try:
            shelling = line_shelling(cone, candidate)
        except DegeneratePoint:
            continue
        payload = {
            "order": list(shelling.order),
            "source_point": [jsonio.fraction_str(x) for x in shelling.source_point],
        }
        _emit(args, payload, [f"order: {list(shelling.order)}"])
        return EXIT_OK
    print("error: no generic steering point found", file=sys.stderr)
    return EXIT_INPUT


def cmd_colon(args) -> int:
    cone = jsonio.cone_from_dict(_load_json(args.input))
    selection = _selection(args, cone)
    grading = _parse_vector(args.grading) if args.grading else None
    report = verify_colon_identity(selection, args.degree, grading=grading)
    payload = report.to_json()
    lines = [
        f"points scanned: {report.points_scanned}, members: {report.members}",
        f"product checks: {report.product_checks}, witnesses: {len(report.witnesses)}",
        f"violations: {len(report.violations)}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if report.consistent else EXIT_FALSIFIED


def cmd_lift(args) -> int:
    pc = jsonio.embedded_from_dict(_load_json(args.input))
    result = lift(pc)
    hull_ok = verify_lower_hull(result)
    payload = {
        "max_value": jsonio.fraction_str(result.max_value),
        "margin": result.margin,
        "subdivision": jsonio.embedded_to_dict(result.subdivision),
        "lift_values": [jsonio.fraction_str(v) for v in result.lift_values],
        "polytope_vertices": [
            [jsonio.fraction_str(x) for x in v] for v in result.polytope_vertices
        ],
        "lower_hull_verified": hull_ok,
    }
    lines = [
        f"subdivision cells: {len(result.subdivision.cells)}",
        f"max value M = {jsonio.fraction_str(result.max_value)}, margin = {result.margin}",
        f"polytope vertices: {len(result.polytope_vertices)}",
        f"lower hull verified: {hull_ok}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if hull_ok else EXIT_FALSIFIED


def cmd_schlegel(args) -> int:
    data = _load_json(args.input)
    if "rays" in data or "inequalities" in data:
        cone = jsonio.cone_from_dict(data)
        out = schlegel_of_selection(_selection(args, cone), args.avoid)
    else:
        vertices = [tuple(jsonio.parse_fraction(x) for x in p) for p in data["vertices"]]
        cells = [tuple(int(v) for v in c) for c in data.get("cells", [])]
        if args.cells:
            cells = [tuple(int(v) for v in spec.split(",")) for spec in args.cells]
        if not cells:
            raise ValueError("no boundary cells given (JSON \"cells\" or --cells)")
        out = schlegel(vertices, cells, args.avoid)
    payload = jsonio.embedded_to_dict(out)
    lines = [
        f"projected complex: {len(out.cells)} cells in dimension {out.ambient_dim}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_corpus(args) -> int:
    results = suite.run_all(seed=args.seed, bound=args.degree)
    payload = {
        "results": [
            {"criterion": r.name, "passed": r.passed, "details": _plain(r.details)}
            for r in results
        ]
    }
    lines = [
        f"criterion {r.name}: {'PASS' if r.passed else 'FAIL'}" for r in results
    ]
    _emit(args, payload, lines)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FALSIFIED


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, Fraction):
        return jsonio.fraction_str(value)
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recdom",
        description="reciprocal cone domains: enumerators, reciprocity, CM checks, shellings, lifts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="path to a JSON cone or complex")
        p.add_argument("--select", help="facet indices i,j,... naming the selection")
        p.add_argument("--degree", type=int, default=8, help="degree bound N")
        p.add_argument("--field", action="append", help="Q, F2, or Fp (repeatable)")
        p.add_argument("--grading", help="grading covector w1,...,wd")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("enumerate", help="lattice points and generating function")
    common(p)
    p.add_argument("--side", choices=("selected", "complement"), default="selected")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("reciprocity", help="two-sided enumerator identity")
    common(p)
    p.set_defaults(handler=cmd_reciprocity)

    p = sub.add_parser("cm", help="Cohen-Macaulay certificate")
    common(p)
    p.set_defaults(handler=cmd_cm)

    p = sub.add_parser("separate", help="strict separation witness")
    common(p)
    p.set_defaults(handler=cmd_separate)

    p = sub.add_parser("shell", help="line shelling of the cross-section")
    common(p)
    p.add_argument("--point", help="steering point a/b,c/d,...")
    p.set_defaults(handler=cmd_shell)

    p = sub.add_parser("colon", help="colon-ideal consistency scan")
    common(p)
    p.set_defaults(handler=cmd_colon)

    p = sub.add_parser("lift", help="lift a complex onto a lower hull")
    common(p)
    p.set_defaults(handler=cmd_lift)

    p = sub.add_parser("schlegel", help="project boundary cells past one facet")
    common(p)
    p.add_argument("--avoid", type=int, required=True, help="facet index to project past")
    p.add_argument("--cells", action="append", help="boundary cell i,j,... (repeatable)")
    p.set_defaults(handler=cmd_schlegel)

    p = sub.add_parser("corpus", help="run the full acceptance suite")
    common(p, needs_input=False)
    p.set_defaults(handler=cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except json.JSONDecodeError as err:
        print(f"error: line {err.lineno}, column {err.colno}: {err.msg}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError, RuntimeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
