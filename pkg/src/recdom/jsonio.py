"""JSON schemas for cones, complexes and reports.

Cones: {"dim": d, "rays": [[int, ...], ...]} or {"inequalities": [[int, ...], ...]}.
Complexes: {"vertices": [["p/q", ...], ...], "facets": [[int, ...], ...]} with an
optional "ambient_dim".  Rational numbers are encoded as strings "p/q" (plain
integers are accepted).  All emitters sort keys so output is byte stable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .geometry import Cone
from .lifting import embedded_complex
from .topology import PolyhedralComplex, SimplicialComplex


def parse_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"not a rational: {value!r}")


def fraction_str(f: Fraction) -> str:
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def cone_from_dict(data: dict) -> Cone:
    if "rays" in data:
        cone = Cone.from_rays([tuple(int(a) for a in r) for r in data["rays"]])
    elif "inequalities" in data:
        cone = Cone.from_inequalities(
            [tuple(int(a) for a in r) for r in data["inequalities"]]
        )
    else:
        raise ValueError('cone JSON needs "rays" or "inequalities"')
    if "dim" in data and int(data["dim"]) != cone.dim:
        raise ValueError(f'cone JSON says dim {data["dim"]}, computed {cone.dim}')
    return cone


def cone_to_dict(cone: Cone) -> dict:
    return {"dim": cone.dim, "rays": [list(r) for r in cone.rays]}


def simplicial_from_dict(data: dict) -> SimplicialComplex:
    facets = [tuple(int(v) for v in f) for f in data["facets"]]
    n = 1 + max((v for f in facets for v in f), default=-1)
    if "vertices" in data:
        n = max(n, len(data["vertices"]))
    return SimplicialComplex.from_faces(n, facets)


def simplicial_to_dict(sc: SimplicialComplex) -> dict:
    # placeholder 1-d coordinates: the schema carries vertices, homology does not
    return {
        "vertices": [[fraction_str(Fraction(i))] for i in range(sc.n_vertices)],
        "facets": [list(f) for f in sc.facets],
    }


def embedded_from_dict(data: dict) -> PolyhedralComplex:
    vertices = [tuple(parse_fraction(x) for x in p) for p in data["vertices"]]
    cells = [tuple(int(v) for v in f) for f in data["facets"]]
    pc = embedded_complex(vertices, cells)
    if "ambient_dim" in data and int(data["ambient_dim"]) != pc.ambient_dim:
        raise ValueError(
            f'complex JSON says ambient_dim {data["ambient_dim"]}, got {pc.ambient_dim}'
        )
    return pc


def embedded_to_dict(pc: PolyhedralComplex) -> dict:
    return {
        "ambient_dim": pc.ambient_dim,
        "vertices": [[fraction_str(x) for x in p] for p in pc.vertices],
        "facets": [list(c.vertices) for c in pc.maximal_cells()],
    }


def gf_to_dict(gf) -> dict:
    return {
        "numerator": [
            {"exponent": list(e), "coefficient": c}
            for e, c in sorted(gf.numerator.terms.items())
        ],
        "denominator_rays": [list(v) for v in gf.denom_rays],
    }


def series_to_dict(series) -> dict:
    return {
        "grading": list(series.grading),
        "bound": series.bound,
        "points": [list(e) for e in series.support()],
        "degree_counts": {str(k): v for k, v in series.degree_counts().items()},
    }


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
