"""Lattice-point enumerators of reciprocal cone domains.

Fix a pointed full-dimensional cone and a nonempty proper subset of its
facets.  Removing from the cone all points lying on the selected facets (or,
symmetrically, on the unselected ones) leaves two reciprocal point sets.
This module enumerates their lattice points, assembles exact rational
generating functions for them, decides the sign-and-substitution identity
relating the two sides, and runs a degreewise consistency scan for the
colon-ideal description of one side in terms of the other.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, count, product
from math import ceil, floor

from .geometry import (
    GF2,
    QQ,
    Cone,
    Face,
    Vector,
    dot,
    faces_of,
    rank_over_field,
    solve_exact,
    vadd,
)

SELECTED = "selected"      # strict inequalities on the selected facets
COMPLEMENT = "complement"  # strict inequalities on the complementary facets
SIDES = (SELECTED, COMPLEMENT)

_SPOT_CHECK_SEED = 1009
_SPOT_CHECKS = 5


class BadGrading(ValueError):
    """Grading covector is not strictly positive where it has to be."""


class WitnessSearchExhausted(RuntimeError):
    """No facet-interior witness below the scan cap; raise the bound."""


@dataclass(frozen=True)
class FacetSelection:
    """A nonempty proper subset of the facets of a cone."""

    cone: Cone
    selected: frozenset[int]

    def __post_init__(self):
        sel = frozenset(self.selected)
        object.__setattr__(self, "selected", sel)
        n = len(self.cone.facets)
        if not sel or len(sel) >= n or not all(0 <= i < n for i in sel):
            raise ValueError("selection must be a nonempty proper subset of facet indices")

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(len(self.cone.facets))) - self.selected


@dataclass(frozen=True)
class DomainSpec:
    """One reciprocal domain inside a cone.

    With ``side == SELECTED`` the boundary part carried by the selected
    facets is removed: membership needs every facet value nonnegative and the
    selected ones strictly positive.  ``COMPLEMENT`` swaps the two roles.
    """

    selection: FacetSelection
    side: str = SELECTED

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}")

    @property
    def cone(self) -> Cone:
        return self.selection.cone

    @property
    def strict_facets(self) -> frozenset[int]:
        if self.side == SELECTED:
            return self.selection.selected
        return self.selection.complement

    def opposite(self) -> "DomainSpec":
        other = COMPLEMENT if self.side == SELECTED else SELECTED
        return DomainSpec(self.selection, other)

    def contains(self, point) -> bool:
        strict = self.strict_facets
        for i, facet in enumerate(self.cone.facets):
            v = facet(point)
            if v < 0 or (v == 0 and i in strict):
                return False
        return True


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients, exponents in Z^d."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(e): c for e, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def monomial(cls, exponent, coeff=1) -> "LaurentPoly":
        return cls({tuple(exponent): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def scale(self, factor):
        return LaurentPoly({e: factor * c for e, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = vadd(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def times_one_minus(self, v):
        """Multiply by (1 - x^v)."""
        out = dict(self.terms)
        for e, c in self.terms.items():
            shifted = vadd(e, v)
            out[shifted] = out.get(shifted, 0) - c
        return LaurentPoly(out)

    def substitute_inverse(self):
        """The polynomial with x replaced by 1/x."""
        return LaurentPoly({tuple(-a for a in e): c for e, c in self.terms.items()})

    def shifted(self, v):
        return LaurentPoly({vadd(e, v): c for e, c in self.terms.items()})

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            val = Fraction(c)
            for x, a in zip(point, e):
                val *= Fraction(x) ** a
            total += val
        return total

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self.terms.items()))!r})"


@dataclass(frozen=True, eq=False)
class RationalGF:
    """numerator / prod over denom_rays v of (1 - x^v); denominators sorted."""

    numerator: LaurentPoly
    denom_rays: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "denom_rays", tuple(sorted(tuple(v) for v in self.denom_rays)))

    @property
    def n_variables(self) -> int:
        if self.denom_rays:
            return len(self.denom_rays[0])
        for e in self.numerator.terms:
            return len(e)
        return 0

    def __repr__(self):
        return f"RationalGF({self.numerator!r}, denom={list(self.denom_rays)!r})"


class TruncatedSeries:
    """Exponent-to-coefficient map of a series truncated at a grading bound."""

    __slots__ = ("grading", "bound", "coeffs")

    def __init__(self, grading, bound, coeffs):
        self.grading = tuple(grading)
        self.bound = int(bound)
        self.coeffs = {tuple(e): c for e, c in coeffs.items() if c}

    def coefficient(self, exponent) -> int:
        return self.coeffs.get(tuple(exponent), 0)

    def support(self):
        return sorted(self.coeffs)

    def degree_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e, c in self.coeffs.items():
            deg = dot(self.grading, e)
            out[deg] = out.get(deg, 0) + c
        return {k: v for k, v in sorted(out.items()) if v}

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.grading == other.grading
            and self.bound == other.bound
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"TruncatedSeries(bound={self.bound}, {len(self.coeffs)} terms)"


def default_grading(cone: Cone) -> Vector:
    """Componentwise sum of the facet covectors.

    Strictly positive on every nonzero cone point because the cone is pointed,
    so it always works as a grading; no user input needed.
    """
    return tuple(sum(f.coeffs[i] for f in cone.facets) for i in range(cone.dim))


def _check_grading(cone, w):
    if len(w) != cone.dim:
        raise BadGrading(f"grading length {len(w)} != dim {cone.dim}")
    for r in cone.rays:
        if dot(w, r) <= 0:
            raise BadGrading(f"grading {w} is not strictly positive on ray {r}")


def _degree_box(cone, w, bound):
    # The region {x in cone : w.x <= bound} is a polytope with vertices at the
    # origin and the scaled rays, so its bounding box is easy to write down.
    lows = [0] * cone.dim
    highs = [0] * cone.dim
    for r in cone.rays:
        s = Fraction(bound, dot(w, r))
        for i, a in enumerate(r):
            x = s * a
            lows[i] = min(lows[i], floor(x))
            highs[i] = max(highs[i], ceil(x))
    return lows, highs


def lattice_points(spec: DomainSpec, grading=None, bound: int = 8) -> TruncatedSeries:
    """All lattice points of the domain with grading degree at most ``bound``.

    A box scan over the truncation polytope with exact membership filtering;
    exhaustive because the truncated cone is bounded."""
    cone = spec.cone
    w = tuple(grading) if grading is not None else default_grading(cone)
    _check_grading(cone, w)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    lows, highs = _degree_box(cone, w, bound)
    coeffs = {}
    for pt in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if dot(w, pt) <= bound and spec.contains(pt):
            coeffs[pt] = 1
    return TruncatedSeries(w, bound, coeffs)


def _cone_points(cone, w, bound):
    """All cone lattice points with w-degree <= bound, sorted by (degree, lex)."""
    lows, highs = _degree_box(cone, w, bound)
    pts = [
        pt
        for pt in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs)))
        if dot(w, pt) <= bound and cone.contains(pt)
    ]
    pts.sort(key=lambda p: (dot(w, p), p))
    return pts


@dataclass(frozen=True)
class HalfOpenCone:
    """Simplicial subcone with wall flags.

    Wall ``i`` is spanned by all generators except ``generators[i]``; when it
    is open, points whose coefficient on that generator vanishes are excluded.
    """

    generators: tuple[Vector, ...]
    open_walls: tuple[bool, ...]


def triangulate(cone: Cone) -> tuple[HalfOpenCone, ...]:
    """Half-open simplicial decomposition of the cone.

    Subcones are spanned by rays of the cone (a pulling triangulation of the
    face lattice).  Wall flags are chosen against a fixed generic interior
    reference point, so every lattice point of the cone lies in exactly one
    flagged subcone."""
    top = next(f for f in faces_of(cone) if f.dim == cone.dim)
    return _face_decomposition(cone, top)


@lru_cache(maxsize=None)
def _pulling_triangulation(cone: Cone, face: Face) -> tuple[tuple[int, ...], ...]:
    # Cone each non-simplicial face from its smallest ray over the facets of
    # the face avoiding that ray; the choice depends only on the face, so the
    # pieces agree across shared walls.
    ray_list = sorted(face.rays)
    if len(ray_list) == face.dim:
        return (tuple(ray_list),)
    apex = ray_list[0]
    simplices = []
    for sub in faces_of(cone):
        if sub.dim == face.dim - 1 and apex not in sub.rays and sub.rays < face.rays:
            for s in _pulling_triangulation(cone, sub):
                simplices.append(tuple(sorted((apex,) + s)))
    return tuple(sorted(simplices))


def _wall_functional(gens, omit):
    """Covector vanishing on every generator except ``gens[omit]``, value 1 there.

    Restricted to the span of the generators this normalization pins it down.
    """
    rows = [g for i, g in enumerate(gens) if i != omit]
    rows.append(gens[omit])
    rhs = [Fraction(0)] * (len(gens) - 1) + [Fraction(1)]
    sol = solve_exact(rows, rhs)
    assert sol is not None
    return sol


@lru_cache(maxsize=None)
def _face_decomposition(cone: Cone, face: Face) -> tuple[HalfOpenCone, ...]:
    simplices = _pulling_triangulation(cone, face)
    gens = {s: tuple(cone.rays[i] for i in s) for s in simplices}
    walls = {}
    for s in simplices:
        for i in range(len(s)):
            walls[(s, i)] = _wall_functional(gens[s], i)
    ray_vectors = [cone.rays[i] for i in sorted(face.rays)]
    reference = None
    for b in count(2):
        s_param = Fraction(1, b)
        q = tuple(
            sum(s_param**j * v[i] for j, v in enumerate(ray_vectors))
            for i in range(cone.dim)
        )
        if all(dot(n, q) != 0 for n in walls.values()):
            reference = q
            break
    pieces = []
    for s in simplices:
        flags = tuple(dot(walls[(s, i)], reference) < 0 for i in range(len(s)))
        pieces.append(HalfOpenCone(gens[s], flags))
    return tuple(pieces)


def _parallelepiped_points(generators):
    """Integer points of {sum l_i v_i : 0 <= l_i < 1} with their coefficients."""
    d = len(generators[0])
    lows = [sum(min(0, v[i]) for v in generators) for i in range(d)]
    highs = [sum(max(0, v[i]) for v in generators) for i in range(d)]
    rows = [[v[i] for v in generators] for i in range(d)]
    points = []
    for z in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        lam = solve_exact(rows, z)
        if lam is None:
            continue
        if all(0 <= l < 1 for l in lam):
            points.append((z, lam))
    return points


def simplicial_gf(generators, open_walls=None) -> RationalGF:
    """Generating function of a half-open simplicial cone.

    Numerator monomials run over the integer points of the fundamental
    parallelepiped; a point sitting on an open wall is shifted off it by the
    omitted generator.  Denominator rays are the generators."""
    gens = tuple(tuple(v) for v in generators)
    if rank_over_field(gens) != len(gens):
        raise ValueError("generators must be linearly independent")
    flags = tuple(open_walls) if open_walls is not None else (False,) * len(gens)
    terms: dict[tuple, int] = {}
    for z, lam in _parallelepiped_points(gens):
        pt = z
        for i, is_open in enumerate(flags):
            if is_open and lam[i] == 0:
                pt = vadd(pt, gens[i])
        terms[pt] = terms.get(pt, 0) + 1
    return RationalGF(LaurentPoly(terms), gens)


def _multiset_difference(big, small):
    counts = Counter(big)
    counts.subtract(Counter(small))
    assert all(v >= 0 for v in counts.values())
    out = []
    for v, k in sorted(counts.items()):
        out.extend([v] * k)
    return out


@lru_cache(maxsize=None)
def _face_gf(cone: Cone, face: Face) -> RationalGF:
    """Closed generating function of all lattice points of one face."""
    if face.dim == 0:
        return RationalGF(LaurentPoly.monomial((0,) * cone.dim), ())
    denom = tuple(sorted(cone.rays[i] for i in face.rays))
    total = LaurentPoly.zero()
    for piece in _face_decomposition(cone, face):
        part = simplicial_gf(piece.generators, piece.open_walls)
        num = part.numerator
        for v in _multiset_difference(denom, part.denom_rays):
            num = num.times_one_minus(v)
        total = total + num
    return RationalGF(total, denom)


def domain_gf(spec: DomainSpec) -> RationalGF:
    """Exact rational generating function of a reciprocal domain.

    Strictness on each facet of the strict group is unfolded by
    inclusion-exclusion over the faces where subsets of those facets are
    tight; every face contributes its closed generating function, and the sum
    is written over the canonical denominator (all rays of the cone)."""
    cone = spec.cone
    strict = sorted(spec.strict_facets)
    faces_by_rays = {f.rays: f for f in faces_of(cone)}
    denom = tuple(sorted(cone.rays))
    all_rays = frozenset(range(len(cone.rays)))
    total = LaurentPoly.zero()
    for size in range(len(strict) + 1):
        for subset in combinations(strict, size):
            tight_rays = all_rays
            for j in subset:
                tight_rays &= cone.facets[j].incident_rays
            gf = _face_gf(cone, faces_by_rays[tight_rays])
            num = gf.numerator
            for v in _multiset_difference(denom, gf.denom_rays):
                num = num.times_one_minus(v)
            total = total + num if size % 2 == 0 else total - num
    return RationalGF(total, denom)


def expand(gf: RationalGF, grading, bound: int) -> TruncatedSeries:
    """Series expansion of a rational generating function up to a grading bound.

    Each factor 1/(1 - x^v) is a geometric series in x^v; the grading must be
    strictly positive on every denominator ray so truncation terminates."""
    w = tuple(grading)
    steps = []
    for v in gf.denom_rays:
        wv = dot(w, v)
        if wv <= 0:
            raise BadGrading(f"grading {w} not positive on denominator ray {v}")
        steps.append((v, wv))
    terms = {e: c for e, c in gf.numerator.terms.items() if dot(w, e) <= bound}
    for v, wv in steps:
        nxt: dict[tuple, int] = {}
        for e, c in terms.items():
            we = dot(w, e)
            k = 0
            while we + k * wv <= bound:
                ee = tuple(a + k * b for a, b in zip(e, v))
                nxt[ee] = nxt.get(ee, 0) + c
                k += 1
        terms = nxt
    return TruncatedSeries(w, bound, terms)


def invert_variables(gf: RationalGF) -> RationalGF:
    """Substitute x -> 1/x and rewrite over the original denominator.

    Each factor (1 - x^-v) equals -x^-v (1 - x^v), so the substitution shifts
    the numerator by the sum of the denominator rays and flips its sign once
    per denominator ray.  Applying it twice is the identity."""
    d = gf.n_variables
    shift = tuple(sum(v[i] for v in gf.denom_rays) for i in range(d))
    num = gf.numerator.substitute_inverse().shifted(shift)
    if len(gf.denom_rays) % 2:
        num = -num
    return RationalGF(num, gf.denom_rays)


def gf_scale(gf: RationalGF, factor) -> RationalGF:
    return RationalGF(gf.numerator.scale(factor), gf.denom_rays)


def _power(point, exponent) -> Fraction:
    val = Fraction(1)
    for x, a in zip(point, exponent):
        val *= Fraction(x) ** a
    return val


def gf_equal(a: RationalGF, b: RationalGF) -> bool:
    """Equality in the field of rational functions.

    Shared denominator factors cancel as multisets; the remainder is decided
    by cross multiplication.  Five seeded rational evaluations run first as a
    cheap reject (sound: a differing value proves inequality)."""
    if a.n_variables != b.n_variables:
        raise ValueError("generating functions in different variable counts")
    counts_a, counts_b = Counter(a.denom_rays), Counter(b.denom_rays)
    common = counts_a & counts_b
    a_extra = sorted((counts_a - common).elements())
    b_extra = sorted((counts_b - common).elements())
    d = a.n_variables
    rng = random.Random(_SPOT_CHECK_SEED)
    for _ in range(_SPOT_CHECKS):
        pt = []
        for _ in range(d):
            while True:
                num, den = rng.randint(2, 96), rng.randint(2, 97)
                if num != den:
                    break
            pt.append(Fraction(num, den))
        lhs = a.numerator.evaluate(pt)
        for v in b_extra:
            lhs *= 1 - _power(pt, v)
        rhs = b.numerator.evaluate(pt)
        for v in a_extra:
            rhs *= 1 - _power(pt, v)
        if lhs != rhs:
            return False
    lhs_poly = a.numerator
    for v in b_extra:
        lhs_poly = lhs_poly.times_one_minus(v)
    rhs_poly = b.numerator
    for v in a_extra:
        rhs_poly = rhs_poly.times_one_minus(v)
    return lhs_poly == rhs_poly


def specialize(gf: RationalGF, weights) -> RationalGF:
    """Substitute x_i -> t^{weights[i]}, giving a univariate function of t.

    Every denominator ray must have strictly positive weight."""
    num: dict[tuple, int] = {}
    for e, c in gf.numerator.terms.items():
        key = (dot(weights, e),)
        num[key] = num.get(key, 0) + c
    rays = []
    for v in gf.denom_rays:
        wv = dot(weights, v)
        if wv <= 0:
            raise BadGrading(f"weights {weights} not positive on denominator ray {v}")
        rays.append((wv,))
    return RationalGF(LaurentPoly(num), tuple(rays))


@dataclass
class ReciprocityReport:
    """Outcome of the two-sided enumerator comparison."""

    holds: bool
    cm_over: dict[str, bool]
    witness: dict

    def to_json(self) -> dict:
        first = None
        if not self.holds:
            first = {k: self.witness[k] for k in ("degree", "lhs", "rhs")}
        return {"holds": self.holds, "cm": dict(self.cm_over), "first_disagreement": first}


def reciprocity_check(selection: FacetSelection, fields=(QQ, GF2), grading=None) -> ReciprocityReport:
    """Check F_complement(1/x) == (-1)^d F_selected(x) as rational functions.

    The report carries per-field Cohen-Macaulay verdicts for the removed
    boundary part's cross-section.  When the identity holds the witness is the
    shared canonical form of both sides; otherwise it is the smallest grading
    degree where the expansions disagree, with both per-degree totals."""
    cone = selection.cone
    g_selected = domain_gf(DomainSpec(selection, SELECTED))
    g_complement = domain_gf(DomainSpec(selection, COMPLEMENT))
    lhs = invert_variables(g_complement)
    rhs = gf_scale(g_selected, (-1) ** cone.dim)
    holds = gf_equal(lhs, rhs)

    from . import topology  # deferred: topology imports FacetSelection from here

    cross_section = topology.boundary_subcomplex(selection)
    subdivided = topology.barycentric(cross_section)
    cm_over = {f.label: topology.is_cohen_macaulay(subdivided, f).is_cm for f in fields}

    if holds:
        # Both sides live over the same denominator, so equality of functions
        # forces equality of canonical numerators.
        assert lhs.denom_rays == rhs.denom_rays and lhs.numerator == rhs.numerator
        witness = {
            "kind": "identity",
            "denominator_rays": [list(v) for v in rhs.denom_rays],
            "numerator": sorted((list(e), c) for e, c in rhs.numerator.terms.items()),
        }
    else:
        w = tuple(grading) if grading is not None else default_grading(cone)
        witness = _first_disagreement(lhs, rhs, w)
    return ReciprocityReport(holds, cm_over, witness)


def _first_disagreement(lhs, rhs, w):
    for bound in (4, 8, 16, 32, 64):
        sa = expand(lhs, w, bound)
        sb = expand(rhs, w, bound)
        exponents = set(sa.coeffs) | set(sb.coeffs)
        bad_degrees = sorted(
            {dot(w, e) for e in exponents if sa.coefficient(e) != sb.coefficient(e)}
        )
        if bad_degrees:
            degree = bad_degrees[0]
            lhs_total = sum(c for e, c in sa.coeffs.items() if dot(w, e) == degree)
            rhs_total = sum(c for e, c in sb.coeffs.items() if dot(w, e) == degree)
            return {"kind": "disagreement", "degree": degree, "lhs": lhs_total, "rhs": rhs_total}
    raise RuntimeError("series agree to high order although the functions differ")


@dataclass
class ColonReport:
    """Result of the degreewise colon-ideal consistency scan."""

    bound: int
    grading: Vector
    points_scanned: int
    members: int
    product_checks: int
    witnesses: dict
    violations: list

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "points_scanned": self.points_scanned,
            "members": self.members,
            "product_checks": self.product_checks,
            "witnesses": sorted(
                (list(a), {"facet": wdata["facet"], "ideal_point": list(wdata["ideal_point"])})
                for a, wdata in self.witnesses.items()
            ),
            "violations": [
                {k: (list(v) if isinstance(v, tuple) else v) for k, v in item.items()}
                for item in self.violations
            ],
        }


def _facet_interior_witness(cone, facet_index, w, cap):
    """Smallest lattice point in the relative interior of one facet."""
    for p in _cone_points(cone, w, cap):
        values = cone.facet_values(p)
        if values[facet_index] == 0 and all(
            v > 0 for i, v in enumerate(values) if i != facet_index
        ):
            return p
    return None


def verify_colon_identity(selection: FacetSelection, bound: int = 6, grading=None) -> ColonReport:
    """Degreewise scan of the colon-ideal description of one reciprocal side.

    For every cone point ``a`` up to the bound: if ``a`` lies in the
    complement-side domain, adding any selected-side domain point up to the
    bound must land in the cone's interior (checked exhaustively).  Otherwise
    ``a`` sits on some unselected facet, and a relative-interior point of that
    facet is produced as an explicit witness whose sum with ``a`` stays on the
    facet.  Witness search is capped at degree 3 * bound; running out signals
    a bound too small, not a mathematical failure."""
    cone = selection.cone
    w = tuple(grading) if grading is not None else default_grading(cone)
    _check_grading(cone, w)
    points = _cone_points(cone, w, bound)
    selected = selection.selected
    complement = selection.complement
    ideal_points = [
        p for p in points if all(cone.facets[i](p) > 0 for i in selected)
    ]
    members = 0
    product_checks = 0
    witnesses = {}
    violations = []
    witness_cache: dict[int, tuple | None] = {}
    for a in points:
        if all(cone.facets[i](a) > 0 for i in complement):
            members += 1
            for b in ideal_points:
                product_checks += 1
                s = vadd(a, b)
                if not cone.interior_contains(s):
                    violations.append({"point": a, "ideal_point": b, "sum": s})
        else:
            facet_index = next(i for i in sorted(complement) if cone.facets[i](a) == 0)
            if facet_index not in witness_cache:
                witness_cache[facet_index] = _facet_interior_witness(
                    cone, facet_index, w, 3 * bound
                )
            b = witness_cache[facet_index]
            if b is None:
                raise WitnessSearchExhausted(
                    f"no relative-interior point on facet {facet_index} up to degree {3 * bound}"
                )
            assert all(cone.facets[i](b) > 0 for i in selected)
            s = vadd(a, b)
            assert cone.facets[facet_index](s) == 0  # the sum is not interior
            witnesses[a] = {"facet": facet_index, "ideal_point": b, "sum": s}
    return ColonReport(bound, w, len(points), members, product_checks, witnesses, violations)
