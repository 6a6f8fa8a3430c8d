"""Exact rational cone geometry: dual descriptions, face lattices, field ranks.

Every coordinate is an integer or a ``fractions.Fraction``; nothing in this
module ever touches floating point.  Outputs are canonically ordered (rays and
facet covectors sorted lexicographically) so downstream results are
reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm

Vector = tuple[int, ...]

# Dual descriptions are found by brute force over ray subsets; plenty for the
# instance sizes this toolkit targets.
MAX_RAYS = 12


class NotPointed(ValueError):
    """The cone contains a line."""


class NotFullDimensional(ValueError):
    """The rays do not span the ambient space."""


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def primitive(vector) -> Vector:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for a in vector:
        g = gcd(g, a)
    if g == 0:
        raise ValueError("the zero vector has no primitive form")
    return tuple(a // g for a in vector)


def primitive_rational(vector) -> Vector:
    """Clear denominators of a rational vector and reduce to primitive form."""
    fracs = [Fraction(a) for a in vector]
    scale = lcm(*(f.denominator for f in fracs))
    return primitive(tuple(int(f * scale) for f in fracs))


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 for the rationals, or a prime p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"characteristic must be 0 or prime, got {p}")

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().upper()
        if t in ("Q", "QQ", "0"):
            return cls(0)
        if t.startswith("GF(") and t.endswith(")"):
            return cls(int(t[3:-1]))
        if t.startswith("F"):
            return cls(int(t[1:]))
        return cls(int(t))

    def __str__(self):
        return self.label


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


def rank_over_field(rows, field: FieldSpec = QQ) -> int:
    """Rank of an integer matrix over Q (fraction-free) or over F_p."""
    matrix = [list(r) for r in rows]
    if not matrix or not matrix[0]:
        return 0
    width = len(matrix[0])
    if any(len(r) != width for r in matrix):
        raise ValueError("ragged matrix")
    if field.characteristic:
        return _rank_mod_p(matrix, field.characteristic)
    try:
        return _rank_bareiss([list(r) for r in matrix])
    except _InexactDivision:
        return rational_rank(matrix)


class _InexactDivision(ArithmeticError):
    pass


def _rank_bareiss(m):
    # One-step Bareiss elimination; intermediate entries are minors of the
    # original matrix, so the divisions stay exact.
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        lead = m[rank][col]
        for i in range(rank + 1, rows):
            fi = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, cols):
                num = lead * row_i[j] - fi * row_r[j]
                q, r = divmod(num, prev)
                if r:
                    raise _InexactDivision
                row_i[j] = q
            row_i[col] = 0
        prev = lead
        rank += 1
        if rank == rows:
            break
    return rank


def _rank_mod_p(m, p):
    rows = [[a % p for a in r] for r in m]
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        row_r = rows[rank]
        for i in range(rank + 1, n_rows):
            f = (rows[i][col] * inv) % p
            if f:
                row_i = rows[i]
                for j in range(col, n_cols):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        rank += 1
        if rank == n_rows:
            break
    return rank


def rref(rows):
    """Reduced row echelon form over Q.  Returns (rows, pivot columns)."""
    m = [[Fraction(a) for a in r] for r in rows]
    pivots = []
    r = 0
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [a / lead for a in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rational_rank(rows) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def kernel_basis(rows, width) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel of a matrix with ``width`` columns."""
    if not rows:
        basis = []
        for i in range(width):
            v = [Fraction(0)] * width
            v[i] = Fraction(1)
            basis.append(tuple(v))
        return basis
    m, pivots = rref(rows)
    free = [c for c in range(width) if c not in pivots]
    out = []
    for fc in free:
        v = [Fraction(0)] * width
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        out.append(tuple(v))
    return out


def solve_exact(rows, rhs):
    """One exact solution of A x = b (free variables set to 0), or None."""
    if not rows:
        return None
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    width = len(rows[0])
    m, pivots = rref(aug)
    if width in pivots:
        return None
    x = [Fraction(0)] * width
    for r, pc in enumerate(pivots):
        x[pc] = m[r][-1]
    return tuple(x)


@dataclass(frozen=True)
class FacetFunctional:
    """Primitive integer covector of one facet inequality, nonnegative on the cone."""

    coeffs: Vector
    incident_rays: frozenset[int]

    def __call__(self, point):
        return dot(self.coeffs, point)


@dataclass(frozen=True)
class Face:
    """A face of a cone: the facets containing it, the rays spanning it, its dimension."""

    tight_facets: frozenset[int]
    rays: frozenset[int]
    dim: int


@dataclass(frozen=True)
class Cone:
    """Pointed full-dimensional rational cone carried in both descriptions.

    ``rays`` are primitive integer generators and ``facets`` the primitive
    inequality covectors, each recording the rays it vanishes on.  Build
    instances with :func:`dual_description` / ``Cone.from_rays``; they are
    immutable and safe to share between threads.
    """

    dim: int
    rays: tuple[Vector, ...]
    facets: tuple[FacetFunctional, ...]

    @classmethod
    def from_rays(cls, rays) -> "Cone":
        return dual_description(rays)

    @classmethod
    def from_inequalities(cls, covectors) -> "Cone":
        """Cone {x : a.x >= 0 for all rows a}; redundant rows are dropped."""
        covs = _canonical_vectors(covectors)
        d = len(covs[0])
        if len(covs) > MAX_RAYS:
            raise ValueError(f"brute-force conversion is capped at {MAX_RAYS} inequalities")
        rays = set()
        for subset in combinations(range(len(covs)), d - 1):
            kb = kernel_basis([covs[i] for i in subset], d)
            if len(kb) != 1:
                continue
            candidate = primitive_rational(kb[0])
            values = [dot(c, candidate) for c in covs]
            if all(v >= 0 for v in values):
                rays.add(candidate)
            elif all(v <= 0 for v in values):
                rays.add(tuple(-a for a in candidate))
        if not rays:
            raise NotFullDimensional("inequalities admit no extreme rays")
        return dual_description(sorted(rays))

    def facet_values(self, point) -> tuple:
        return tuple(f(point) for f in self.facets)

    def contains(self, point) -> bool:
        return all(f(point) >= 0 for f in self.facets)

    def interior_contains(self, point) -> bool:
        return all(f(point) > 0 for f in self.facets)


def _canonical_vectors(vectors) -> list[Vector]:
    prims = sorted({primitive(tuple(int(a) for a in v)) for v in vectors})
    widths = {len(v) for v in prims}
    if len(widths) != 1:
        raise ValueError("vectors of mixed lengths")
    return prims


def dual_description(rays) -> Cone:
    """Pointed full-dimensional cone generated by ``rays``, facets recovered.

    Facets are enumerated by testing every (d-1)-subset of rays spanning a
    hyperplane and keeping the primitive normals that are nonnegative on all
    rays.  Raises :class:`NotFullDimensional` / :class:`NotPointed`.
    """
    ray_list = tuple(_canonical_vectors(rays))
    d = len(ray_list[0])
    if len(ray_list) > MAX_RAYS:
        raise ValueError(f"brute-force dual description is capped at {MAX_RAYS} rays")
    if rank_over_field(ray_list) < d:
        raise NotFullDimensional("rays do not span the ambient space")
    found = {}
    for subset in combinations(range(len(ray_list)), d - 1):
        kb = kernel_basis([ray_list[i] for i in subset], d)
        if len(kb) != 1:
            continue
        normal = primitive_rational(kb[0])
        values = [dot(normal, r) for r in ray_list]
        if all(v <= 0 for v in values):
            normal = tuple(-a for a in normal)
            values = [-v for v in values]
        elif not all(v >= 0 for v in values):
            continue
        found[normal] = frozenset(i for i, v in enumerate(values) if v == 0)
    if rank_over_field(sorted(found)) < d:
        raise NotPointed("the given rays span a cone containing a line")
    # keep only extreme rays: those tight on a rank-(d-1) set of facets
    extreme = []
    for i, r in enumerate(ray_list):
        tight = [n for n, incident in found.items() if i in incident]
        if rank_over_field(tight) == d - 1:
            extreme.append(r)
    rays = tuple(extreme)
    facets = []
    for normal in sorted(found):
        incident = frozenset(i for i, r in enumerate(rays) if dot(normal, r) == 0)
        facets.append(FacetFunctional(normal, incident))
    return Cone(d, rays, tuple(facets))


@lru_cache(maxsize=None)
def faces_of(cone: Cone) -> tuple[Face, ...]:
    """Every face of the cone exactly once, including the cone itself and the
    origin, represented by (tight facet set, spanning ray set, dimension)."""
    nf = len(cone.facets)
    all_rays = frozenset(range(len(cone.rays)))
    by_rays = {}
    for mask in range(1 << nf):
        ray_set = all_rays
        for j in range(nf):
            if mask >> j & 1:
                ray_set &= cone.facets[j].incident_rays
        if ray_set in by_rays:
            continue
        tight = frozenset(
            j for j in range(nf) if ray_set <= cone.facets[j].incident_rays
        )
        dim = rank_over_field([cone.rays[i] for i in ray_set]) if ray_set else 0
        by_rays[ray_set] = Face(tight, ray_set, dim)
    return tuple(sorted(by_rays.values(), key=lambda f: (f.dim, sorted(f.rays))))
