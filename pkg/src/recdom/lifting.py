"""Piecewise-linear embeddings and convex lifting.

An embedded complex is a :class:`~recdom.topology.PolyhedralComplex` whose
rational coordinates realize a PL embedding: any two cells meet in a common
(possibly empty) face.  This module validates that property exactly, projects
boundary subcomplexes of a polytope into the hyperplane of an avoided facet,
slices complexes along hyperplane arrangements, and lifts an embedded complex
onto the lower hull of a polytope one dimension up via the convex height
``sum_i |a_i . x - b_i|``.

The Euclidean distance to a hyperplane is replaced throughout by the absolute
functional value: it is piecewise linear and convex with the same domains of
linearity, and it keeps every computation rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor

from .geometry import dot, kernel_basis, primitive_rational, rational_rank, solve_exact
from .topology import Cell, PolyhedralComplex


class SubcomplexTouchesAvoidedFacet(ValueError):
    """The kept subcomplex meets the facet chosen for projection."""


class ArrangementDoesNotCover(ValueError):
    """Some cell is not an intersection of halfspaces from the arrangement."""


Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class AffineHyperplane:
    """Primitive integer functional and offset: the set {x : coeffs.x == rhs}."""

    coeffs: tuple[int, ...]
    rhs: int

    def value(self, point):
        return dot(self.coeffs, point) - self.rhs

    @classmethod
    def through(cls, normal, base) -> "AffineHyperplane":
        offset = dot(normal, base)
        extended = primitive_rational(tuple(normal) + (-offset,))
        lead = next(a for a in extended if a)
        if lead < 0:
            extended = tuple(-a for a in extended)
        return cls(extended[:-1], -extended[-1])


@dataclass(frozen=True)
class Arrangement:
    """A finite set of affine hyperplanes, canonically ordered."""

    hyperplanes: tuple[AffineHyperplane, ...]

    def __post_init__(self):
        dedup = sorted({h for h in self.hyperplanes}, key=lambda h: (h.coeffs, h.rhs))
        object.__setattr__(self, "hyperplanes", tuple(dedup))


def _affine_basis(points):
    """Base point plus independent direction vectors spanning the affine hull."""
    base = points[0]
    dirs: list[Point] = []
    for p in points[1:]:
        d = tuple(a - b for a, b in zip(p, base))
        if any(d) and rational_rank(dirs + [list(d)]) > len(dirs):
            dirs.append(d)
    return base, tuple(dirs)


def _left_inverse(dirs):
    """Rows L with L . (x in span(dirs)) giving coordinates in the dirs basis."""
    k = len(dirs)
    d = len(dirs[0])
    gram = [[dot(a, b) for b in dirs] for a in dirs]
    rows = []
    for unit in range(k):
        rhs = [Fraction(1) if i == unit else Fraction(0) for i in range(k)]
        col = solve_exact(gram, rhs)
        assert col is not None
        rows.append(tuple(sum(col[j] * dirs[j][i] for j in range(k)) for i in range(d)))
    return tuple(rows)


class _Polytope:
    """Exact V/H bookkeeping for one convex cell at desk scale."""

    __slots__ = ("vertices", "base", "dirs", "chart", "inequalities", "ambient_inequalities")

    def __init__(self, points):
        pts = tuple(tuple(Fraction(x) for x in p) for p in points)
        base, dirs = _affine_basis(pts)
        self.base = base
        self.dirs = dirs
        if dirs:
            left = _left_inverse(dirs)
            chart = tuple(
                tuple(dot(row, tuple(a - b for a, b in zip(p, base))) for row in left)
                for p in pts
            )
        else:
            chart = tuple(() for _ in pts)
        self.chart = chart
        self.vertices = pts
        self.inequalities = self._chart_facets()
        left = _left_inverse(dirs) if dirs else ()
        ambient = []
        for normal, rhs in self.inequalities:
            coeffs = tuple(
                sum(normal[j] * left[j][i] for j in range(len(normal)))
                for i in range(len(base))
            )
            ambient.append((coeffs, rhs + dot(coeffs, base)))
        self.ambient_inequalities = tuple(ambient)

    @property
    def dim(self):
        return len(self.dirs)

    def _chart_facets(self):
        """Facet inequalities (n, b) with n.y <= b in chart coordinates."""
        k = self.dim
        if k == 0:
            return ()
        chart = self.chart
        found = {}
        for subset in combinations(range(len(chart)), k):
            pts = [chart[i] for i in subset]
            diffs = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
            if rational_rank(diffs) != k - 1:
                continue
            kb = kernel_basis(diffs, k) if diffs else kernel_basis([], k)
            if len(kb) != 1:
                continue
            normal = kb[0]
            rhs = dot(normal, pts[0])
            values = [dot(normal, p) - rhs for p in chart]
            if all(v <= 0 for v in values):
                pass
            elif all(v >= 0 for v in values):
                normal = tuple(-a for a in normal)
                rhs = -rhs
            else:
                continue
            scaled = primitive_rational(tuple(normal) + (rhs,))
            found[(scaled[:-1], scaled[-1])] = None
        return tuple(sorted(found))

    def to_chart(self, point):
        """Chart coordinates of an ambient point, or None when off the hull."""
        shifted = tuple(Fraction(a) - b for a, b in zip(point, self.base))
        if not self.dirs:
            return () if not any(shifted) else None
        rows = [[v[i] for v in self.dirs] for i in range(len(self.base))]
        return solve_exact(rows, shifted)

    def contains(self, point) -> bool:
        y = self.to_chart(point)
        if y is None:
            return False
        return all(dot(n, y) <= b for n, b in self.inequalities)

    def hull_equations(self):
        """Independent integer hyperplanes cutting out the affine hull."""
        normals = kernel_basis([list(v) for v in self.dirs], len(self.base)) if self.dirs else kernel_basis([], len(self.base))
        return tuple(AffineHyperplane.through(primitive_rational(n), self.base) for n in normals)

    def facet_vertex_sets(self):
        """For each facet inequality, the indices of vertices it is tight on."""
        out = []
        for n, b in self.inequalities:
            tight = tuple(i for i, y in enumerate(self.chart) if dot(n, y) == b)
            out.append(tight)
        return tuple(out)

    def exposed_vertices(self, active):
        """Vertex indices tight on every inequality in ``active``."""
        return tuple(
            i
            for i, y in enumerate(self.chart)
            if all(dot(n, y) == b for n, b in active)
        )

    def face_vertex_sets(self):
        """Vertex index sets of all nonempty faces, with their dimensions."""
        faces = {}
        for mask_size in range(len(self.inequalities) + 1):
            for active in combinations(self.inequalities, mask_size):
                vs = self.exposed_vertices(active)
                if not vs or vs in faces:
                    continue
                pts = [self.vertices[i] for i in vs]
                faces[vs] = len(_affine_basis(pts)[1])
        return faces

    def is_face(self, vertex_ids) -> bool:
        """Exposed-face test: the active inequalities of the candidate must
        cut out exactly the candidate's vertices."""
        target = tuple(sorted(vertex_ids))
        chart_pts = [self.chart[i] for i in target]
        active = [
            (n, b)
            for n, b in self.inequalities
            if all(dot(n, y) == b for y in chart_pts)
        ]
        return tuple(sorted(self.exposed_vertices(active))) == target


def _vertices_from_constraints(equalities, inequalities, dim):
    """Vertex enumeration of {x : eq.x == rhs, ineq.x <= rhs} by brute force."""
    rows = [(tuple(c), r) for c, r in equalities] + [(tuple(c), r) for c, r in inequalities]
    n_eq = len(equalities)
    candidates = set()
    for subset in combinations(range(len(rows)), dim):
        mat = [list(rows[i][0]) for i in subset]
        if rational_rank(mat) != dim:
            continue
        rhs = [rows[i][1] for i in subset]
        pt = solve_exact(mat, rhs)
        if pt is None:
            continue
        ok = all(dot(c, pt) == r for c, r in (rows[i] for i in range(n_eq)))
        ok = ok and all(dot(c, pt) <= r for c, r in (rows[i] for i in range(n_eq, len(rows))))
        if ok:
            candidates.add(pt)
    return sorted(candidates)


def _cell_polytopes(pc: PolyhedralComplex):
    return {cell: _Polytope(pc.cell_points(cell)) for cell in pc.cells}


def embedded_complex(vertices, maximal_cells) -> PolyhedralComplex:
    """Build a polyhedral complex from maximal cells, closing under faces.

    Face structure comes from each cell's exact convex geometry; shared faces
    are deduplicated by vertex set."""
    pts = tuple(tuple(Fraction(x) for x in p) for p in vertices)
    cells = {}
    for cell in maximal_cells:
        ids = tuple(sorted(cell))
        poly = _Polytope([pts[i] for i in ids])
        for local_vs, dim in poly.face_vertex_sets().items():
            global_vs = tuple(sorted(ids[i] for i in local_vs))
            cells[global_vs] = dim
    return PolyhedralComplex(pts, tuple(Cell(vs, dim) for vs, dim in cells.items()))


def verify_embedding(pc: PolyhedralComplex) -> bool:
    """True when every pair of cells meets in a common face of each.

    Pairwise exact polytope intersections; the intersection must consist of
    shared vertices and be an exposed face on both sides."""
    polys = _cell_polytopes(pc)
    order = list(pc.cells)
    boxes = {}
    for cell in order:
        pts = pc.cell_points(cell)
        boxes[cell] = (
            tuple(min(p[i] for p in pts) for i in range(pc.ambient_dim)),
            tuple(max(p[i] for p in pts) for i in range(pc.ambient_dim)),
        )
    for a, b in combinations(order, 2):
        lo_a, hi_a = boxes[a]
        lo_b, hi_b = boxes[b]
        if any(hi_a[i] < lo_b[i] or hi_b[i] < lo_a[i] for i in range(pc.ambient_dim)):
            continue
        pa, pb = polys[a], polys[b]
        set_a, set_b = set(a.vertices), set(b.vertices)
        if set_a <= set_b or set_b <= set_a:
            small, big = (a, b) if set_a <= set_b else (b, a)
            inter = [pc.point(i) for i in small.vertices]
        else:
            eqs = [(h.coeffs, h.rhs) for h in pa.hull_equations() + pb.hull_equations()]
            ineqs = list(pa.ambient_inequalities) + list(pb.ambient_inequalities)
            inter = _vertices_from_constraints(eqs, ineqs, pc.ambient_dim)
            if not inter:
                continue
        point_ids = {pt: i for i, pt in enumerate(pc.vertices)}
        ids = [point_ids.get(tuple(p)) for p in inter]
        if any(i is None for i in ids):
            return False
        id_set = set(ids)
        if not id_set <= set_a or not id_set <= set_b:
            return False
        local_a = [a.vertices.index(i) for i in ids]
        local_b = [b.vertices.index(i) for i in ids]
        if not pa.is_face(local_a) or not pb.is_face(local_b):
            return False
    return True


def _beyond_point(poly: _Polytope, facet_index):
    """A point beyond one facet and strictly inside every other, chart coords."""
    normal, rhs = poly.inequalities[facet_index]
    tight = poly.facet_vertex_sets()[facet_index]
    k = poly.dim
    centroid = tuple(
        sum(poly.chart[i][j] for i in tight) / len(tight) for j in range(k)
    )
    step = Fraction(1)
    while True:
        z = tuple(c + step * n for c, n in zip(centroid, normal))
        if all(
            dot(n2, z) < b2
            for idx, (n2, b2) in enumerate(poly.inequalities)
            if idx != facet_index
        ):
            assert dot(normal, z) > rhs
            return z
        step /= 2


def schlegel(vertices, cells, avoid: int, validate: bool = True) -> PolyhedralComplex:
    """Project boundary cells of a polytope into the avoided facet's hyperplane.

    ``vertices`` spans the polytope, ``cells`` lists vertex index tuples of
    the boundary faces to keep (their faces are added), and ``avoid`` indexes
    the canonical facet list.  The kept subcomplex must stay off the avoided
    facet's relative interior, i.e. that facet may not itself be a kept cell;
    central projection happens from an exactly computed point just beyond it,
    and the image is returned in affine coordinates of the facet hyperplane
    (one dimension down)."""
    pts = tuple(tuple(Fraction(x) for x in v) for v in vertices)
    poly = _Polytope(pts)
    if not 0 <= avoid < len(poly.inequalities):
        raise ValueError(f"facet index {avoid} out of range")
    avoid_vertices = set(poly.facet_vertex_sets()[avoid])
    closure: dict[tuple[int, ...], int] = {}
    for cell in cells:
        ids = tuple(sorted(cell))
        if not poly.is_face(ids) or len(ids) == len(pts):
            raise ValueError(f"{ids} is not a proper boundary face of the polytope")
        if avoid_vertices <= set(ids):
            # distinct proper faces meet only along boundary faces, so the
            # projection is injective unless the avoided facet itself is kept
            raise SubcomplexTouchesAvoidedFacet(
                f"cell {ids} contains the avoided facet"
            )
        cell_poly = _Polytope([pts[i] for i in ids])
        for local_vs, dim in cell_poly.face_vertex_sets().items():
            closure[tuple(sorted(ids[i] for i in local_vs))] = dim
    normal, rhs = poly.inequalities[avoid]
    z = _beyond_point(poly, avoid)
    used = sorted({i for vs in closure for i in vs})
    images = {}
    for i in used:
        v = poly.chart[i]
        denom = dot(normal, v) - dot(normal, z)
        assert denom != 0
        s = Fraction(rhs - dot(normal, z), denom)
        images[i] = tuple(zc + s * (vc - zc) for zc, vc in zip(z, v))
    facet_pts = [poly.chart[i] for i in sorted(avoid_vertices)]
    base, dirs = _affine_basis(facet_pts)
    left = _left_inverse(dirs) if dirs else ()
    new_coords = {}
    for i, img in images.items():
        shifted = tuple(a - b for a, b in zip(img, base))
        new_coords[i] = tuple(dot(row, shifted) for row in left)
    relabel = {i: k for k, i in enumerate(used)}
    new_vertices = tuple(new_coords[i] for i in used)
    new_cells = tuple(
        Cell(tuple(sorted(relabel[i] for i in vs)), dim) for vs, dim in closure.items()
    )
    out = PolyhedralComplex(new_vertices, new_cells)
    if validate:
        assert verify_embedding(out)
    return out


def schlegel_of_selection(selection, avoid_facet: int, validate: bool = True) -> PolyhedralComplex:
    """Schlegel projection of a cone's boundary cross-section part.

    The cone's cross-section polytope plays the polytope role; the cells are
    the cross-sections of the selected facets, and ``avoid_facet`` is a cone
    facet index (translated to the matching cross-section facet)."""
    from .separation import cross_section_vertices

    cone = selection.cone
    vertices = cross_section_vertices(cone)
    poly = _Polytope(vertices)
    target = set(cone.facets[avoid_facet].incident_rays)
    avoid = next(
        i
        for i, tight in enumerate(poly.facet_vertex_sets())
        if set(tight) == target
    )
    cells = [tuple(sorted(cone.facets[i].incident_rays)) for i in sorted(selection.selected)]
    return schlegel(vertices, cells, avoid, validate=validate)


def covering_arrangement(pc: PolyhedralComplex) -> Arrangement:
    """Hyperplanes cutting out every cell: each cell's affine hull equations
    plus, for every facet of every cell, one hyperplane through the facet
    that misses the rest of the cell."""
    hyperplanes = set()
    polys = _cell_polytopes(pc)
    for cell in pc.cells:
        poly = polys[cell]
        hyperplanes.update(poly.hull_equations())
        for tight in poly.facet_vertex_sets():
            facet_points = [poly.vertices[i] for i in tight]
            hyperplanes.add(_cut_through(facet_points, poly.vertices))
    return Arrangement(tuple(hyperplanes))


def _cut_through(facet_points, cell_points) -> AffineHyperplane:
    """Canonical hyperplane containing the facet but not the whole cell."""
    base, dirs = _affine_basis(list(facet_points))
    normals = kernel_basis([list(v) for v in dirs], len(base)) if dirs else kernel_basis([], len(base))
    for n in normals:
        if any(dot(n, p) != dot(n, base) for p in cell_points):
            return AffineHyperplane.through(primitive_rational(n), base)
    raise AssertionError("facet hyperplane candidates all contain the cell")


def _arrangement_covers(poly: _Polytope, arrangement: Arrangement) -> bool:
    containing = [
        h
        for h in arrangement.hyperplanes
        if all(h.value(v) == 0 for v in poly.vertices)
    ]
    codim = len(poly.base) - poly.dim
    if rational_rank([list(h.coeffs) for h in containing]) != codim:
        return False
    for tight in poly.facet_vertex_sets():
        facet_points = [poly.vertices[i] for i in tight]
        if not any(
            all(h.value(p) == 0 for p in facet_points)
            and any(h.value(v) != 0 for v in poly.vertices)
            for h in arrangement.hyperplanes
        ):
            return False
    return True


def induced_subdivision(pc: PolyhedralComplex, arrangement: Arrangement, check_cover: bool = True) -> PolyhedralComplex:
    """Slice every cell of the complex along all hyperplanes of the arrangement.

    The result is a subdivision with the same support; requires (and checks,
    by default) that every cell is an intersection of halfspaces bounded by
    arrangement hyperplanes."""
    polys = _cell_polytopes(pc)
    if check_cover:
        for cell in pc.cells:
            if not _arrangement_covers(polys[cell], arrangement):
                raise ArrangementDoesNotCover(f"cell {cell.vertices} is not covered")
    pieces = []
    for cell in pc.maximal_cells():
        regions = [polys[cell]]
        for h in arrangement.hyperplanes:
            nxt = []
            for region in regions:
                values = [h.value(v) for v in region.vertices]
                if all(v >= 0 for v in values) or all(v <= 0 for v in values):
                    nxt.append(region)
                    continue
                eqs = [(e.coeffs, e.rhs) for e in region.hull_equations()]
                base_ineqs = list(region.ambient_inequalities)
                for sign in (1, -1):
                    cut = (tuple(sign * -c for c in h.coeffs), sign * -h.rhs)
                    verts = _vertices_from_constraints(eqs, base_ineqs + [cut], len(h.coeffs))
                    if verts:
                        half = _Polytope(verts)
                        if half.dim == region.dim:
                            nxt.append(half)
            regions = nxt
        pieces.extend(regions)
    faces: dict[tuple[Point, ...], int] = {}
    for piece in pieces:
        for local_vs, dim in piece.face_vertex_sets().items():
            key = tuple(sorted(piece.vertices[i] for i in local_vs))
            faces[key] = dim
    all_points = sorted({p for key in faces for p in key})
    index = {p: i for i, p in enumerate(all_points)}
    cells = tuple(
        Cell(tuple(sorted(index[p] for p in key)), dim) for key, dim in faces.items()
    )
    return PolyhedralComplex(tuple(all_points), cells)


def _box_complex(lows, highs) -> PolyhedralComplex:
    """The axis-aligned box [lows, highs] as a complex with all its faces."""
    d = len(lows)
    corners = sorted(product(*((Fraction(lo), Fraction(hi)) for lo, hi in zip(lows, highs))))
    index = {c: i for i, c in enumerate(corners)}
    cells = []
    for state in product((0, 1, 2), repeat=d):  # 0 low, 1 high, 2 free
        choices = []
        for axis, s in enumerate(state):
            if s == 0:
                choices.append((Fraction(lows[axis]),))
            elif s == 1:
                choices.append((Fraction(highs[axis]),))
            else:
                choices.append((Fraction(lows[axis]), Fraction(highs[axis])))
        vs = tuple(sorted(index[c] for c in product(*choices)))
        cells.append(Cell(vs, sum(1 for s in state if s == 2)))
    return PolyhedralComplex(tuple(corners), tuple(cells))


def lift_height(arrangement: Arrangement, point) -> Fraction:
    """The convex piecewise-linear height: sum of absolute functional values."""
    return sum(abs(Fraction(h.value(point))) for h in arrangement.hyperplanes)


@dataclass(frozen=True)
class LiftResult:
    """Outcome of lifting an embedded complex onto a lower hull.

    ``subdivision`` is the arrangement-induced refinement of the input,
    ``lift_values`` the height at each of its vertices, ``polytope_vertices``
    the vertex list of the region between the height graph and a flat top
    (truncated over an enlarged bounding box), and ``lifted_complex`` the
    graph cells over the subdivision, combinatorially identical to it."""

    subdivision: PolyhedralComplex
    lift_values: tuple[Fraction, ...]
    arrangement: Arrangement
    polytope_vertices: tuple[Point, ...]
    lifted_complex: PolyhedralComplex
    affine_pieces: tuple[tuple[tuple[int, ...], int], ...]
    max_value: Fraction
    margin: int


def lift(pc: PolyhedralComplex) -> LiftResult:
    """Lift an embedded complex onto the lower hull of a polytope one
    dimension up.

    A covering arrangement is read off the cells; the induced subdivision
    refines the complex into domains of linearity of the height function, and
    the graph of the height over the subdivision sits on the lower hull of
    {(x, t) : height(x) <= t <= M + 1} truncated over the bounding box of the
    complex enlarged by 1."""
    arrangement = covering_arrangement(pc)
    subdivision = induced_subdivision(pc, arrangement)
    values = tuple(lift_height(arrangement, v) for v in subdivision.vertices)
    max_value = max(values)
    d = pc.ambient_dim
    lows = [floor(min(p[i] for p in pc.vertices)) - 1 for i in range(d)]
    highs = [ceil(max(p[i] for p in pc.vertices)) + 1 for i in range(d)]
    box = _box_complex(lows, highs)
    ambient_pieces = induced_subdivision(box, arrangement, check_cover=False)
    pieces = {}
    for cell in ambient_pieces.maximal_cells():
        pts = ambient_pieces.cell_points(cell)
        barycenter = tuple(sum(p[i] for p in pts) / len(pts) for i in range(d))
        signs = tuple(
            1 if h.value(barycenter) >= 0 else -1 for h in arrangement.hyperplanes
        )
        coeffs = tuple(
            sum(s * h.coeffs[i] for s, h in zip(signs, arrangement.hyperplanes))
            for i in range(d)
        )
        offset = sum(s * h.rhs for s, h in zip(signs, arrangement.hyperplanes))
        pieces[(coeffs, offset)] = None
    affine_pieces = tuple(sorted(pieces))
    inequalities = []
    for coeffs, offset in affine_pieces:
        # t >= coeffs.x - offset written as coeffs.x - t <= offset
        inequalities.append((tuple(coeffs) + (-1,), Fraction(offset)))
    for i in range(d):
        unit = [0] * (d + 1)
        unit[i] = 1
        inequalities.append((tuple(unit), Fraction(highs[i])))
        inequalities.append((tuple(-u for u in unit), Fraction(-lows[i])))
    top = [0] * (d + 1)
    top[d] = 1
    inequalities.append((tuple(top), max_value + 1))
    polytope_vertices = tuple(_vertices_from_constraints([], inequalities, d + 1))
    lifted_vertices = tuple(
        v + (values[i],) for i, v in enumerate(subdivision.vertices)
    )
    lifted = PolyhedralComplex(lifted_vertices, subdivision.cells)
    return LiftResult(
        subdivision,
        values,
        arrangement,
        polytope_vertices,
        lifted,
        affine_pieces,
        max_value,
        1,
    )


def cell_affine_piece(result: LiftResult, cell: Cell):
    """The affine piece of the height active on one subdivision cell."""
    pts = result.subdivision.cell_points(cell)
    d = result.subdivision.ambient_dim
    barycenter = tuple(sum(p[i] for p in pts) / len(pts) for i in range(d))
    signs = tuple(
        1 if h.value(barycenter) >= 0 else -1 for h in result.arrangement.hyperplanes
    )
    coeffs = tuple(
        sum(s * h.coeffs[i] for s, h in zip(signs, result.arrangement.hyperplanes))
        for i in range(d)
    )
    offset = sum(s * h.rhs for s, h in zip(signs, result.arrangement.hyperplanes))
    return coeffs, offset


def verify_lower_hull(result: LiftResult) -> bool:
    """Every lifted cell must be supported from below by its affine piece.

    Checks that the piece interpolates the lift values on the cell and that
    t >= piece(x) is valid on every polytope vertex."""
    for cell in result.subdivision.maximal_cells():
        coeffs, offset = cell_affine_piece(result, cell)
        for i in cell.vertices:
            x = result.subdivision.point(i)
            if dot(coeffs, x) - offset != result.lift_values[i]:
                return False
        for v in result.polytope_vertices:
            if dot(coeffs, v[:-1]) - offset > v[-1]:
                return False
    return True


def cell_measure(points) -> Fraction:
    """Exact Lebesgue volume of a full-dimensional convex cell, ambient dim <= 2."""
    poly = _Polytope(points)
    k = poly.dim
    d = len(poly.base)
    if k == 0:
        return Fraction(0)
    if k != d:
        raise NotImplementedError("only full-dimensional cells are measured")
    if d == 1:
        coords = sorted(p[0] for p in poly.vertices)
        return coords[-1] - coords[0]
    if d == 2:
        ring = _boundary_cycle(poly)
        area2 = Fraction(0)
        for i in range(len(ring)):
            x1, y1 = poly.vertices[ring[i]]
            x2, y2 = poly.vertices[ring[(i + 1) % len(ring)]]
            area2 += x1 * y2 - x2 * y1
        return abs(area2) / 2
    raise NotImplementedError("volumes implemented for ambient dimension <= 2")


def _boundary_cycle(poly: _Polytope):
    """Vertex indices of a 2-cell in boundary order, walking its edges."""
    edges = []
    for tight in poly.facet_vertex_sets():
        assert len(tight) == 2
        edges.append(tight)
    adjacency: dict[int, list[int]] = {}
    for a, b in edges:
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    start = min(adjacency)
    ring = [start]
    prev = None
    while True:
        options = [v for v in adjacency[ring[-1]] if v != prev]
        nxt = options[0]
        if nxt == start:
            break
        prev = ring[-1]
        ring.append(nxt)
    return ring


def support_measure(pc: PolyhedralComplex) -> Fraction:
    """Total top-dimensional volume of a complex's maximal cells."""
    top = pc.dim
    total = Fraction(0)
    for cell in pc.maximal_cells():
        if cell.dim == top:
            total += cell_measure(pc.cell_points(cell))
    return total
