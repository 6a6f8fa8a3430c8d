"""Complexes and their topology over a field.

Cross-sections of cone boundary parts, barycentric subdivision, reduced
simplicial homology via boundary-matrix ranks, link-based Cohen-Macaulay
certificates, and recognition of balls, spheres and manifolds-with-boundary
in dimension at most three.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .enumerator import FacetSelection, default_grading
from .geometry import QQ, FieldSpec, dot, faces_of, rank_over_field


class FaceNotPresent(KeyError):
    """The requested face is not in the complex."""


class DimensionTooHigh(ValueError):
    """Recognition is only decisive in low dimensions."""


class NotAManifold(ValueError):
    """The link scan rejected the complex."""


@dataclass(frozen=True)
class Cell:
    """One cell of a polyhedral complex: sorted vertex indices plus dimension."""

    vertices: tuple[int, ...]
    dim: int


@dataclass(frozen=True, eq=False)
class PolyhedralComplex:
    """Finite polyhedral complex with rational vertex coordinates.

    Cells are vertex index sets with explicit dimensions and the list must be
    closed under taking faces.  The face-of relation is vertex-set
    containment, which is faithful for complexes whose cells meet in common
    faces (the only kind built here).
    """

    vertices: tuple[tuple[Fraction, ...], ...]
    cells: tuple[Cell, ...]

    def __post_init__(self):
        verts = tuple(tuple(Fraction(x) for x in p) for p in self.vertices)
        cells = tuple(
            sorted(
                {Cell(tuple(sorted(c.vertices)), c.dim) for c in self.cells},
                key=lambda c: (c.dim, c.vertices),
            )
        )
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "cells", cells)
        for c in cells:
            if not c.vertices or any(not 0 <= i < len(verts) for i in c.vertices):
                raise ValueError(f"bad cell {c}")

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0

    @property
    def dim(self) -> int:
        return max(c.dim for c in self.cells)

    def point(self, index):
        return self.vertices[index]

    def cell_points(self, cell: Cell):
        return [self.vertices[i] for i in cell.vertices]

    def maximal_cells(self) -> tuple[Cell, ...]:
        out = []
        for c in self.cells:
            cv = set(c.vertices)
            if not any(o is not c and cv < set(o.vertices) for o in self.cells):
                out.append(c)
        return tuple(out)

    def covering_faces(self, cell: Cell) -> list[Cell]:
        """Faces of ``cell`` of dimension exactly one less."""
        target = set(cell.vertices)
        return [c for c in self.cells if c.dim == cell.dim - 1 and set(c.vertices) < target]


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex given by its maximal faces (an antichain).

    ``facets == ()`` encodes the complex containing only the empty face.
    """

    n_vertices: int
    facets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_faces(cls, n_vertices, faces) -> "SimplicialComplex":
        normalized = sorted(
            {tuple(sorted(set(f))) for f in faces}, key=lambda f: (-len(f), f)
        )
        maximal: list[tuple[int, ...]] = []
        for f in normalized:
            if f and not any(set(f) <= set(g) for g in maximal):
                maximal.append(f)
        return cls(n_vertices, tuple(sorted(maximal)))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self) -> frozenset:
        return _all_faces(self)

    def vertices_used(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for f in self.faces():
            if f:
                counts[len(f) - 1] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1


@lru_cache(maxsize=None)
def _all_faces(sc: SimplicialComplex) -> frozenset:
    out = {()}
    for f in sc.facets:
        for k in range(1, len(f) + 1):
            out.update(combinations(f, k))
    return frozenset(out)


def simplicial_as_polyhedral(sc: SimplicialComplex, vertices=None) -> PolyhedralComplex:
    """Wrap a simplicial complex as a polyhedral one.

    Coordinates default to the standard basis of R^n (a geometric simplex
    realization); they only matter to callers doing geometry."""
    used = sc.vertices_used()
    relabel = {v: i for i, v in enumerate(used)}
    if vertices is None:
        n = len(used)
        vertices = tuple(
            tuple(Fraction(1 if j == i else 0) for j in range(n)) for i in range(n)
        )
    cells = [
        Cell(tuple(sorted(relabel[v] for v in f)), len(f) - 1)
        for f in sc.faces()
        if f
    ]
    return PolyhedralComplex(tuple(vertices), tuple(cells))


def barycentric(pc: PolyhedralComplex) -> SimplicialComplex:
    """Abstract barycentric subdivision.

    One vertex per cell (its barycenter), one top simplex per maximal chain
    in the face poset of the cells."""
    index = {cell: i for i, cell in enumerate(pc.cells)}
    chains_cache: dict[Cell, tuple] = {}

    def chains(cell):
        if cell in chains_cache:
            return chains_cache[cell]
        if cell.dim == 0:
            out = ((index[cell],),)
        else:
            covers = pc.covering_faces(cell)
            assert covers, "complex is not closed under faces"
            out = tuple(ch + (index[cell],) for f in covers for ch in chains(f))
        chains_cache[cell] = out
        return out

    facets = []
    for cell in pc.maximal_cells():
        facets.extend(chains(cell))
    return SimplicialComplex.from_faces(len(pc.cells), facets)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers b_0 .. b_dim over one field."""

    field: FieldSpec
    betti: tuple[int, ...]


def _assert_boundary_squares_to_zero(levels):
    # Symbolic check, one simplex at a time: removing two vertices in either
    # order carries opposite signs.
    for k in range(1, len(levels)):
        for f in levels[k]:
            acc: dict[tuple, int] = {}
            for i in range(len(f)):
                sub = f[:i] + f[i + 1 :]
                sign_i = -1 if i % 2 else 1
                for j in range(len(sub)):
                    subsub = sub[:j] + sub[j + 1 :]
                    sign_j = -1 if j % 2 else 1
                    acc[subsub] = acc.get(subsub, 0) + sign_i * sign_j
            assert all(v == 0 for v in acc.values()), f"boundary^2 != 0 at {f}"


def _boundary_matrix(faces_k, faces_km1):
    row_index = {f: i for i, f in enumerate(faces_km1)}
    matrix = [[0] * len(faces_k) for _ in faces_km1]
    for j, f in enumerate(faces_k):
        for i in range(len(f)):
            sub = f[:i] + f[i + 1 :]
            matrix[row_index[sub]][j] += -1 if i % 2 else 1
    return matrix


def reduced_homology(sc: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    """Reduced Betti numbers from augmented boundary-matrix ranks.

    Asserts that consecutive boundaries compose to zero and that the
    alternating Betti sum equals the reduced Euler characteristic."""
    d = sc.dim
    if d < 0:
        raise ValueError("homology of the empty complex is not computed here")
    levels: list[list[tuple[int, ...]]] = [[] for _ in range(d + 1)]
    for f in sc.faces():
        if f:
            levels[len(f) - 1].append(f)
    for level in levels:
        level.sort()
    _assert_boundary_squares_to_zero(levels)
    ranks = {0: 1, d + 1: 0}  # the augmentation map has rank 1 on a nonempty complex
    for k in range(1, d + 1):
        ranks[k] = rank_over_field(_boundary_matrix(levels[k], levels[k - 1]), field)
    betti = []
    for k in range(d + 1):
        betti.append((len(levels[k]) - ranks[k]) - ranks[k + 1])
    reduced_euler = sum((-1) ** k * len(levels[k]) for k in range(d + 1)) - 1
    assert sum((-1) ** k * b for k, b in enumerate(betti)) == reduced_euler
    return HomologyProfile(field, tuple(betti))


def link(sc: SimplicialComplex, face) -> SimplicialComplex:
    """Faces disjoint from ``face`` whose union with it is again a face."""
    face = tuple(sorted(face))
    faces = sc.faces()
    if face not in faces:
        raise FaceNotPresent(face)
    if not face:
        return sc
    fs = set(face)
    members = [
        t
        for t in faces
        if t and not fs & set(t) and tuple(sorted(t + face)) in faces
    ]
    return SimplicialComplex.from_faces(sc.n_vertices, members)


@dataclass(frozen=True)
class CMCertificate:
    """Cohen-Macaulay verdict; failures carry a verifiable witness."""

    is_cm: bool
    failing_face: tuple[int, ...] | None = None
    failing_index: int | None = None
    failing_betti: int | None = None


def is_cohen_macaulay(sc: SimplicialComplex, field: FieldSpec = QQ) -> CMCertificate:
    """Link criterion: every face's link needs vanishing reduced homology
    below the complementary dimension.

    On a pure complex the bound dim(sc) - |face| is just the link's own
    dimension; on an impure complex the same scan necessarily fails (a
    non-top maximal face has an empty link of deficient dimension), so
    impurity can never pass."""
    d = sc.dim
    if d < 0:
        return CMCertificate(True)
    for face in sorted(sc.faces(), key=lambda f: (len(f), f)):
        lk = link(sc, face)
        required_below = d - len(face)
        if lk.dim < 0:
            if required_below > 0:
                return CMCertificate(False, face, -1, 1)
            continue
        profile = reduced_homology(lk, field)
        for i, b in enumerate(profile.betti):
            if i < required_below and b:
                return CMCertificate(False, face, i, b)
    return CMCertificate(True)


def _graph_shape(sc: SimplicialComplex) -> str:
    """Classify a complex of dimension <= 1 as path, cycle, or other."""
    if sc.dim > 1 or sc.dim < 0:
        return "other"
    edges = [f for f in sc.facets if len(f) == 2]
    verts = sc.vertices_used()
    if not edges:
        return "path" if len(verts) == 1 else "other"
    if any(len(f) == 1 for f in sc.facets):
        return "other"  # isolated vertex next to edges
    degree = {v: 0 for v in verts}
    adjacency = {v: [] for v in verts}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
        adjacency[a].append(b)
        adjacency[b].append(a)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for u in adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(verts):
        return "other"
    degs = sorted(degree.values())
    if all(g == 2 for g in degs) and len(edges) == len(verts):
        return "cycle"
    if degs.count(1) == 2 and all(g <= 2 for g in degs) and len(edges) == len(verts) - 1:
        return "path"
    return "other"


def _is_connected(sc: SimplicialComplex) -> bool:
    verts = sc.vertices_used()
    if not verts:
        return False
    adjacency = {v: set() for v in verts}
    for f in sc.facets:
        for a, b in combinations(f, 2):
            adjacency[a].add(b)
            adjacency[b].add(a)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for u in adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(verts)


def _recognize_surface(sc: SimplicialComplex) -> str:
    if not sc.is_pure() or not _is_connected(sc):
        return "other"
    triangles = sc.facets
    edge_count: dict[tuple, int] = {}
    for t in triangles:
        for e in combinations(t, 2):
            edge_count[e] = edge_count.get(e, 0) + 1
    if any(c > 2 for c in edge_count.values()):
        return "other"
    link_shapes = {v: _graph_shape(link(sc, (v,))) for v in sc.vertices_used()}
    if any(shape not in ("path", "cycle") for shape in link_shapes.values()):
        return "other"
    boundary_edges = [e for e, c in edge_count.items() if c == 1]
    chi = sc.euler_characteristic()
    if not boundary_edges:
        if chi == 2 and all(shape == "cycle" for shape in link_shapes.values()):
            return "sphere"
        return "other"
    boundary = SimplicialComplex.from_faces(sc.n_vertices, boundary_edges)
    if chi == 1 and _graph_shape(boundary) == "cycle":
        return "ball"
    return "other"


def recognize_ball_sphere(sc: SimplicialComplex) -> str:
    """Decide ball / sphere / other for complexes of dimension at most 2.

    Dimension 3 and above returns "unknown": vanishing homology no longer
    forces ball-ness there, and sphere recognition is out of reach."""
    d = sc.dim
    if d < 0:
        return "other"
    if d == 0:
        n = len(sc.facets)
        if n == 1:
            return "ball"
        if n == 2:
            return "sphere"
        return "other"
    if d == 1:
        shape = _graph_shape(sc)
        if shape == "path":
            return "ball"
        if shape == "cycle":
            return "sphere"
        return "other"
    if d == 2:
        return _recognize_surface(sc)
    return "unknown"


def is_manifold_with_boundary(sc: SimplicialComplex):
    """Link scan: every nonempty face below the top dimension must have a ball
    or sphere link.  Returns (verdict, boundary complex of ball-link faces)."""
    d = sc.dim
    if d > 3:
        raise DimensionTooHigh("link recognition is only decisive up to dimension 3")
    if d < 0 or not sc.is_pure():
        return False, None
    boundary_faces = []
    for face in sorted(sc.faces(), key=lambda f: (len(f), f)):
        if not face or len(face) == d + 1:
            continue
        shape = recognize_ball_sphere(link(sc, face))
        if shape == "ball":
            boundary_faces.append(face)
        elif shape != "sphere":
            return False, None
    return True, SimplicialComplex.from_faces(sc.n_vertices, boundary_faces)


@dataclass(frozen=True)
class BoundaryInequalityReport:
    """First homology of a compact 3-manifold versus its boundary."""

    field: FieldSpec
    h1_complex: int
    h1_boundary: int

    @property
    def holds(self) -> bool:
        return 2 * self.h1_complex >= self.h1_boundary


def boundary_inequality_check(sc: SimplicialComplex, field: FieldSpec = QQ) -> BoundaryInequalityReport:
    """For a compact 3-manifold, dim H1 is at least half of the boundary's.

    Verifies the manifold hypothesis by the link scan before computing."""
    if sc.dim != 3:
        raise NotAManifold("expected a 3-dimensional complex")
    ok, boundary = is_manifold_with_boundary(sc)
    if not ok:
        raise NotAManifold("the link scan rejected the complex")
    h1 = reduced_homology(sc, field).betti[1]
    h1_boundary = reduced_homology(boundary, field).betti[1] if boundary.facets else 0
    return BoundaryInequalityReport(field, h1, h1_boundary)


def boundary_subcomplex(selection: FacetSelection) -> PolyhedralComplex:
    """Cross-section of the boundary part carried by the selected facets.

    The cone is cut with {w.x = 1} for the default grading w; rays meeting a
    selected facet become rational points, and every positive-dimensional
    cone face inside a selected facet becomes a cell one dimension down."""
    cone = selection.cone
    w = default_grading(cone)
    used_faces = [
        f
        for f in faces_of(cone)
        if f.dim >= 1 and f.tight_facets & selection.selected
    ]
    ray_ids = sorted({i for f in used_faces for i in f.rays})
    relabel = {ray: k for k, ray in enumerate(ray_ids)}
    vertices = []
    for i in ray_ids:
        r = cone.rays[i]
        scale = Fraction(1, dot(w, r))
        vertices.append(tuple(scale * a for a in r))
    cells = [
        Cell(tuple(sorted(relabel[i] for i in f.rays)), f.dim - 1) for f in used_faces
    ]
    return PolyhedralComplex(tuple(vertices), tuple(cells))
