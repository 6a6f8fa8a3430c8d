"""Embedding validation, Schlegel projection, subdivision, and lifting."""

import random
from fractions import Fraction

import pytest

from recdom.corpus import (
    cube_vertices,
    one_point_1d,
    segment_2d,
    two_segments_1d,
    two_triangles_2d,
    unit_square_2d,
)
from recdom.geometry import QQ, GF2, dot
from recdom.lifting import (
    AffineHyperplane,
    Arrangement,
    ArrangementDoesNotCover,
    SubcomplexTouchesAvoidedFacet,
    cell_affine_piece,
    covering_arrangement,
    embedded_complex,
    induced_subdivision,
    lift,
    lift_height,
    schlegel,
    support_measure,
    verify_embedding,
    verify_lower_hull,
)
from recdom.topology import barycentric, reduced_homology


def test_verify_embedding_shared_edge():
    assert verify_embedding(two_triangles_2d())


def test_verify_embedding_overlapping_squares():
    vertices = [
        (0, 0), (2, 0), (0, 2), (2, 2),
        (1, 1), (3, 1), (1, 3), (3, 3),
    ]
    pc = embedded_complex(vertices, [(0, 1, 2, 3)])
    shifted = embedded_complex(vertices, [(4, 5, 6, 7)])
    combined_cells = pc.cells + shifted.cells
    from recdom.topology import PolyhedralComplex

    bad = PolyhedralComplex(pc.vertices, combined_cells)
    assert not verify_embedding(bad)


def test_verify_embedding_vertex_not_shared():
    # two segments crossing in their interiors
    pc = embedded_complex([(0, 0), (2, 2)], [(0, 1)])
    from recdom.topology import PolyhedralComplex

    other = embedded_complex([(0, 2), (2, 0)], [(0, 1)])
    vertices = pc.vertices + other.vertices
    cells = pc.cells + tuple(
        type(c)(tuple(v + 2 for v in c.vertices), c.dim) for c in other.cells
    )
    assert not verify_embedding(PolyhedralComplex(vertices, cells))


# -- schlegel ----------------------------------------------------------------------


def test_schlegel_cube_two_squares():
    cube = cube_vertices()
    # squares z=0 {0,2,4,6} and y=0 {0,1,4,5}, avoid z=1 facet {1,3,5,7}
    out = schlegel(cube, [(0, 2, 4, 6), (0, 1, 4, 5)], 5)
    assert out.ambient_dim == 2
    maximal = out.maximal_cells()
    assert len(maximal) == 2
    assert all(len(c.vertices) == 4 and c.dim == 2 for c in maximal)
    shared = set(maximal[0].vertices) & set(maximal[1].vertices)
    assert len(shared) == 2  # one common edge
    assert verify_embedding(out)


def test_schlegel_tetrahedron_triangle():
    tet = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    out = schlegel(tet, [(1, 2, 3)], 0)
    assert out.ambient_dim == 2
    assert [c.dim for c in out.maximal_cells()] == [2]
    assert verify_embedding(out)


def test_schlegel_rejects_kept_avoided_facet():
    cube = cube_vertices()
    with pytest.raises(SubcomplexTouchesAvoidedFacet):
        schlegel(cube, [(1, 3, 5, 7)], 5)


def test_schlegel_rejects_non_face():
    cube = cube_vertices()
    with pytest.raises(ValueError):
        schlegel(cube, [(0, 3, 5)], 5)


def test_schlegel_of_cone_selection():
    from recdom.corpus import facet_pairs_sharing_a_ray, pentagon_cone, square_cone
    from recdom.enumerator import FacetSelection
    from recdom.lifting import schlegel_of_selection

    pent = pentagon_cone()
    pair = facet_pairs_sharing_a_ray(pent)[0]
    used = set().union(*(pent.facets[i].incident_rays for i in pair))
    avoid = next(
        i
        for i in range(5)
        if i not in pair and not (pent.facets[i].incident_rays & used)
    )
    out = schlegel_of_selection(FacetSelection(pent, pair), avoid)
    assert out.ambient_dim == 1
    maximal = out.maximal_cells()
    assert len(maximal) == 2 and all(c.dim == 1 for c in maximal)
    # the two segments share one endpoint: a path, as in the cross-section
    assert len(set(maximal[0].vertices) & set(maximal[1].vertices)) == 1

    square = square_cone()
    out2 = schlegel_of_selection(FacetSelection(square, frozenset({0})), 3)
    assert out2.ambient_dim == 1 and len(out2.maximal_cells()) == 1


def test_lift_lower_dimensional_cell_in_plane():
    result = lift(segment_2d())
    assert verify_lower_hull(result)
    assert result.lifted_complex.cells == result.subdivision.cells
    # every subdivision vertex carries height zero on its own hull line only
    # if no other cuts pass through it; values are just checked for exactness
    for i, v in enumerate(result.subdivision.vertices):
        assert result.lift_values[i] == lift_height(result.arrangement, v)


# -- induced subdivision --------------------------------------------------------------


def test_subdivision_segment():
    seg = embedded_complex([(0,), (2,)], [(0, 1)])
    arr = Arrangement(
        (AffineHyperplane((1,), 0), AffineHyperplane((1,), 1), AffineHyperplane((1,), 2))
    )
    sub = induced_subdivision(seg, arr)
    assert [c.vertices for c in sub.maximal_cells()] == [(0, 1), (1, 2)]
    assert support_measure(sub) == support_measure(seg) == 2


def test_subdivision_square_with_diagonal():
    square = unit_square_2d()
    arr = Arrangement(
        (
            AffineHyperplane((1, 0), 0),
            AffineHyperplane((1, 0), 1),
            AffineHyperplane((0, 1), 0),
            AffineHyperplane((0, 1), 1),
            AffineHyperplane((1, -1), 0),
        )
    )
    sub = induced_subdivision(square, arr)
    maximal = sub.maximal_cells()
    assert len(maximal) == 2
    assert all(len(c.vertices) == 3 for c in maximal)
    assert support_measure(sub) == 1
    assert verify_embedding(sub)


def test_subdivision_compatible_arrangement_is_identity():
    square = unit_square_2d()
    arr = covering_arrangement(square)
    sub = induced_subdivision(square, arr)
    assert {c.vertices for c in sub.maximal_cells()} == {(0, 1, 2, 3)}
    assert len(sub.cells) == len(square.cells)


def test_subdivision_cover_check():
    seg = embedded_complex([(0,), (2,)], [(0, 1)])
    missing = Arrangement((AffineHyperplane((1,), 0),))  # no cut at x = 2
    with pytest.raises(ArrangementDoesNotCover):
        induced_subdivision(seg, missing)


def test_covering_arrangement_covers_own_complex():
    for pc in (two_segments_1d(), two_triangles_2d(), segment_2d()):
        arr = covering_arrangement(pc)
        induced_subdivision(pc, arr)  # raises if not covered


# -- lift --------------------------------------------------------------------------


def test_lift_two_segments_breakpoints():
    result = lift(two_segments_1d())
    assert result.lift_values == (Fraction(6), Fraction(4), Fraction(4), Fraction(6))
    assert result.max_value == 6 and result.margin == 1
    assert verify_lower_hull(result)
    # the lifted graph cells are exactly the two segments, projecting back
    assert result.lifted_complex.cells == result.subdivision.cells
    assert [c.vertices for c in result.subdivision.maximal_cells()] == [(0, 1), (2, 3)]
    lower = {
        (Fraction(0), Fraction(6)),
        (Fraction(1), Fraction(4)),
        (Fraction(2), Fraction(4)),
        (Fraction(3), Fraction(6)),
    }
    assert lower <= set(result.polytope_vertices)


def test_lift_single_point():
    result = lift(one_point_1d())
    assert result.max_value == 0
    lifted_vertex = result.lifted_complex.vertices[0]
    assert lifted_vertex in result.polytope_vertices


def test_lift_two_triangles():
    source = two_triangles_2d()
    result = lift(source)
    assert verify_lower_hull(result)
    assert support_measure(result.subdivision) == support_measure(source)
    assert result.lifted_complex.cells == result.subdivision.cells
    # gradient changes across the shared wall
    pieces = [cell_affine_piece(result, c) for c in result.subdivision.maximal_cells()]
    assert pieces[0][0] != pieces[1][0]
    # but both pieces agree on the shared edge
    shared = set(result.subdivision.maximal_cells()[0].vertices) & set(
        result.subdivision.maximal_cells()[1].vertices
    )
    for i in shared:
        x = result.subdivision.point(i)
        for coeffs, offset in pieces:
            assert dot(coeffs, x) - offset == result.lift_values[i]


def test_lift_height_convexity_seeded():
    for source in (two_segments_1d(), two_triangles_2d()):
        result = lift(source)
        rng = random.Random(11)
        cells = result.subdivision.maximal_cells()
        for _ in range(100):
            pts = []
            for _ in range(2):
                cell = cells[rng.randrange(len(cells))]
                corners = result.subdivision.cell_points(cell)
                weights = [Fraction(rng.randint(1, 9)) for _ in corners]
                total = sum(weights)
                pts.append(
                    tuple(
                        sum(w * p[i] for w, p in zip(weights, corners)) / total
                        for i in range(result.subdivision.ambient_dim)
                    )
                )
            a, b = pts
            mid = tuple((x + y) / 2 for x, y in zip(a, b))
            fa = lift_height(result.arrangement, a)
            fb = lift_height(result.arrangement, b)
            fm = lift_height(result.arrangement, mid)
            assert 2 * fm <= fa + fb


def test_lift_height_affine_on_each_cell():
    result = lift(two_triangles_2d())
    for cell in result.subdivision.maximal_cells():
        coeffs, offset = cell_affine_piece(result, cell)
        for i in cell.vertices:
            x = result.subdivision.point(i)
            assert dot(coeffs, x) - offset == lift_height(result.arrangement, x)
        corners = result.subdivision.cell_points(cell)
        mid = tuple(sum(p[i] for p in corners) / len(corners) for i in range(2))
        assert dot(coeffs, mid) - offset == lift_height(result.arrangement, mid)


def test_lift_then_schlegel_round_trip():
    result = lift(two_segments_1d())
    verts = result.polytope_vertices
    # identify the lifted cells inside the polytope vertex list
    index = {v: i for i, v in enumerate(verts)}
    lifted_cells = []
    for cell in result.lifted_complex.maximal_cells():
        ids = tuple(
            sorted(index[result.lifted_complex.point(i)] for i in cell.vertices)
        )
        lifted_cells.append(ids)
    # the top facet t = M + 1 is the facet whose vertices all have last coord 7
    from recdom.lifting import _Polytope

    poly = _Polytope(verts)
    top = next(
        i
        for i, tight in enumerate(poly.facet_vertex_sets())
        if all(verts[j][-1] == result.max_value + 1 for j in tight)
    )
    out = schlegel(verts, lifted_cells, top)
    assert out.ambient_dim == 1
    assert len(out.maximal_cells()) == 2
    assert all(c.dim == 1 for c in out.maximal_cells())
    # same face lattice as the subdivision: cell-count profile by dimension
    assert sorted((c.dim, len(c.vertices)) for c in out.cells) == sorted(
        (c.dim, len(c.vertices)) for c in result.subdivision.cells
    )
    assert verify_embedding(out)


def test_homology_agrees_for_input_subdivision_and_lift():
    for source in (two_segments_1d(), two_triangles_2d()):
        result = lift(source)
        reference = reduced_homology(barycentric(source), QQ).betti
        for complex_ in (result.subdivision, result.lifted_complex):
            assert reduced_homology(barycentric(complex_), QQ).betti == reference


def test_acyclicity_of_embedded_cm_complexes():
    # full-dimensional embedded complexes that are CM must be acyclic
    from recdom.topology import is_cohen_macaulay

    cases = [two_segments_1d(), two_triangles_2d(), unit_square_2d()]
    for pc in cases:
        sd = barycentric(pc)
        for field in (QQ, GF2):
            if is_cohen_macaulay(sd, field).is_cm and pc.dim == pc.ambient_dim:
                assert all(b == 0 for b in reduced_homology(sd, field).betti)
