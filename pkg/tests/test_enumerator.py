"""Enumerator tests: lattice points, generating functions, reciprocity, colon scan."""

from itertools import combinations

import pytest

from recdom.corpus import (
    corpus_cones,
    facet_pairs_sharing_a_ray,
    facet_pairs_sharing_no_ray,
    quadrant,
    square_cone,
)
from recdom.enumerator import (
    COMPLEMENT,
    SELECTED,
    BadGrading,
    DomainSpec,
    FacetSelection,
    LaurentPoly,
    RationalGF,
    WitnessSearchExhausted,
    default_grading,
    domain_gf,
    expand,
    gf_equal,
    gf_scale,
    invert_variables,
    lattice_points,
    reciprocity_check,
    simplicial_gf,
    specialize,
    triangulate,
    verify_colon_identity,
)
from recdom.geometry import Cone, dot


def quadrant_selection():
    cone = quadrant()
    # facet 0 carries the covector (0, 1): its zero set is the horizontal ray
    return FacetSelection(cone, frozenset({0}))


def test_selection_validation():
    cone = quadrant()
    with pytest.raises(ValueError):
        FacetSelection(cone, frozenset())
    with pytest.raises(ValueError):
        FacetSelection(cone, frozenset({0, 1}))
    with pytest.raises(ValueError):
        FacetSelection(cone, frozenset({5}))


def test_lattice_points_quadrant_selected():
    spec = DomainSpec(quadrant_selection(), SELECTED)
    series = lattice_points(spec, (1, 1), 3)
    oracle = {
        (x, y)
        for x in range(4)
        for y in range(4)
        if x + y <= 3 and y > 0
    }
    assert set(series.support()) == oracle
    assert series.support() == [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 1)]


def test_lattice_points_quadrant_complement():
    spec = DomainSpec(quadrant_selection(), COMPLEMENT)
    series = lattice_points(spec, (1, 1), 2)
    oracle = {(x, y) for x in range(3) for y in range(3) if x + y <= 2 and x > 0}
    assert set(series.support()) == oracle == {(1, 0), (2, 0), (1, 1)}


def test_lattice_points_square_cone_degree_counts():
    cone = square_cone()
    # strict on the two facets whose cross-section edges meet at a corner of
    # the square: x >= 0 and y >= 0, i.e. covectors (1,0,0) and (0,1,0)
    idx = {f.coeffs: i for i, f in enumerate(cone.facets)}
    sel = FacetSelection(cone, frozenset({idx[(1, 0, 0)], idx[(0, 1, 0)]}))
    series = lattice_points(DomainSpec(sel, SELECTED), (0, 0, 1), 2)
    oracle = {
        (x, y, z)
        for z in range(3)
        for x in range(z + 1)
        for y in range(z + 1)
        if x > 0 and y > 0
    }
    assert set(series.support()) == oracle
    assert series.degree_counts() == {1: 1, 2: 4}


def test_lattice_points_bad_grading():
    spec = DomainSpec(quadrant_selection(), SELECTED)
    with pytest.raises(BadGrading):
        lattice_points(spec, (1, -1), 4)
    with pytest.raises(BadGrading):
        lattice_points(spec, (1, 0), 4)


def test_default_grading_positive_on_rays():
    for name, cone in corpus_cones().items():
        w = default_grading(cone)
        assert all(dot(w, r) > 0 for r in cone.rays), name


# -- triangulation ------------------------------------------------------------

def test_triangulate_simplicial_identity():
    cone = quadrant()
    pieces = triangulate(cone)
    assert len(pieces) == 1
    assert pieces[0].open_walls == (False, False)
    assert set(pieces[0].generators) == set(cone.rays)


def test_triangulate_square_cone_partition():
    cone = square_cone()
    pieces = triangulate(cone)
    assert len(pieces) == 2
    assert sum(p.open_walls.count(True) for p in pieces) == 1  # one shared wall opened once
    # direct partition check to degree 6 of the z-grading
    for z in range(7):
        cone_pts = {
            (x, y, z)
            for x in range(z + 1)
            for y in range(z + 1)
        }
        covered = []
        for p in cone_pts:
            owners = 0
            for piece in pieces:
                lam = _solve_coeffs(piece.generators, p)
                if lam is None or any(l < 0 for l in lam):
                    continue
                if any(l == 0 and open_ for l, open_ in zip(lam, piece.open_walls)):
                    continue
                owners += 1
            covered.append(owners)
        assert all(c == 1 for c in covered), f"degree {z}"


def _solve_coeffs(generators, point):
    from recdom.geometry import solve_exact

    rows = [[g[i] for g in generators] for i in range(len(point))]
    return solve_exact(rows, point)


def test_triangulation_uses_every_ray():
    for name, cone in corpus_cones().items():
        used = {g for piece in triangulate(cone) for g in piece.generators}
        assert used == set(cone.rays), name


def test_half_open_partition_on_corpus():
    # every cone point of small degree is claimed by exactly one flagged piece
    for name, cone in corpus_cones().items():
        pieces = triangulate(cone)
        w = default_grading(cone)
        bound = 3 * min(dot(w, r) for r in cone.rays)
        from recdom.enumerator import _cone_points

        for p in _cone_points(cone, w, bound):
            owners = 0
            for piece in pieces:
                lam = _solve_coeffs(piece.generators, p)
                if lam is None or any(l < 0 for l in lam):
                    continue
                if any(l == 0 and open_ for l, open_ in zip(lam, piece.open_walls)):
                    continue
                owners += 1
            assert owners == 1, (name, p)


# -- simplicial generating functions -----------------------------------------

def test_simplicial_gf_unimodular_closed():
    gf = simplicial_gf(((1, 0), (0, 1)))
    assert gf.numerator.terms == {(0, 0): 1}
    assert gf.denom_rays == ((0, 1), (1, 0))


def test_simplicial_gf_open_wall():
    # the wall spanned by (1,0) is the one omitting generator (0,1)
    gf = simplicial_gf(((1, 0), (0, 1)), (False, True))
    assert gf.numerator.terms == {(0, 1): 1}


def test_simplicial_gf_parallelepiped():
    gf = simplicial_gf(((1, 0), (1, 2)))
    assert gf.numerator.terms == {(0, 0): 1, (1, 1): 1}
    assert gf.denom_rays == ((1, 0), (1, 2))
    # oracle: count of parallelepiped points equals the determinant
    assert len(gf.numerator.terms) == 2


def test_simplicial_gf_expansion_matches_direct_count():
    # cone spanned by (1,0) and (1,2) is {(x, y) : y >= 0, 2x - y >= 0}
    gf = simplicial_gf(((1, 0), (1, 2)))
    series = expand(gf, (1, 1), 8)
    oracle = {
        (x, y): 1
        for x in range(9)
        for y in range(9)
        if x + y <= 8 and y >= 0 and 2 * x - y >= 0
    }
    assert series.coeffs == oracle


def test_simplicial_gf_rejects_dependent_generators():
    with pytest.raises(ValueError):
        simplicial_gf(((1, 0), (2, 0)))


# -- domain generating functions ----------------------------------------------

def test_domain_gf_quadrant_both_sides():
    sel = quadrant_selection()
    g = domain_gf(DomainSpec(sel, SELECTED))
    assert g.numerator.terms == {(0, 1): 1}
    assert g.denom_rays == ((0, 1), (1, 0))
    g2 = domain_gf(DomainSpec(sel, COMPLEMENT))
    assert g2.numerator.terms == {(1, 0): 1}
    for side, gf in ((SELECTED, g), (COMPLEMENT, g2)):
        series = expand(gf, (1, 1), 8)
        direct = lattice_points(DomainSpec(sel, side), (1, 1), 8)
        assert series.coeffs == direct.coeffs


def test_domain_gf_square_opposite_specialized():
    cone = square_cone()
    sel = FacetSelection(cone, facet_pairs_sharing_no_ray(cone)[0])
    g = specialize(domain_gf(DomainSpec(sel, SELECTED)), (0, 0, 1))
    expected = RationalGF(LaurentPoly({(2,): 3, (3,): -1}), ((1,), (1,), (1,)))
    assert gf_equal(g, expected)
    series = expand(g, (1,), 10)
    assert series.coeffs == {(n,): n * n - 1 for n in range(2, 11)}


def test_oracle_equivalence_small_corpus():
    for cone in (quadrant(), square_cone()):
        n = len(cone.facets)
        w = default_grading(cone)
        for size in range(1, n):
            for subset in combinations(range(n), size):
                sel = FacetSelection(cone, frozenset(subset))
                for side in (SELECTED, COMPLEMENT):
                    spec = DomainSpec(sel, side)
                    for bound in (0, 3, 10):
                        assert (
                            expand(domain_gf(spec), w, bound).coeffs
                            == lattice_points(spec, w, bound).coeffs
                        )


def test_oracle_equivalence_custom_grading():
    cone = square_cone()
    w = (1, 2, 4)  # strictly positive on all rays, unlike the default (0, 0, 2)
    for subset in ({0}, {1, 2}, {0, 3}):
        sel = FacetSelection(cone, frozenset(subset))
        for side in (SELECTED, COMPLEMENT):
            spec = DomainSpec(sel, side)
            assert (
                expand(domain_gf(spec), w, 9).coeffs
                == lattice_points(spec, w, 9).coeffs
            )


def test_triangulation_independence_under_ray_reordering():
    cone = square_cone()
    # same cone with rays listed in a different order: different pulling apex
    permuted = Cone(cone.dim, cone.rays[::-1], tuple(
        type(f)(f.coeffs, frozenset(len(cone.rays) - 1 - i for i in f.incident_rays))
        for f in cone.facets
    ))
    sel_a = FacetSelection(cone, frozenset({0, 2}))
    sel_b = FacetSelection(permuted, frozenset({0, 2}))
    g_a = domain_gf(DomainSpec(sel_a, SELECTED))
    g_b = domain_gf(DomainSpec(sel_b, SELECTED))
    assert gf_equal(g_a, g_b)


# -- inversion and equality ----------------------------------------------------

def test_invert_variables_quadrant_example():
    g = RationalGF(LaurentPoly({(1, 0): 1}), ((0, 1), (1, 0)))
    inv = invert_variables(g)
    assert inv.numerator.terms == {(0, 1): 1}
    assert inv.denom_rays == g.denom_rays


def test_invert_variables_is_involution():
    sel = quadrant_selection()
    cone = square_cone()
    sel2 = FacetSelection(cone, facet_pairs_sharing_a_ray(cone)[0])
    for spec in (DomainSpec(sel, SELECTED), DomainSpec(sel2, COMPLEMENT)):
        g = domain_gf(spec)
        back = invert_variables(invert_variables(g))
        assert back.numerator == g.numerator and back.denom_rays == g.denom_rays


def test_invert_variables_negated_exponent_expansion():
    # 1/(1-x) inverted, expanded without normalization: substitute and expand
    # along the negated ray, which must reproduce original coefficients at
    # negated exponents
    g = RationalGF(LaurentPoly({(0,): 1}), ((1,),))
    raw = RationalGF(g.numerator.substitute_inverse(), ((-1,),))
    series = expand(raw, (-1,), 6)
    original = expand(g, (1,), 6)
    assert series.coeffs == {tuple(-a for a in e): c for e, c in original.coeffs.items()}
    # and the normalized inversion is -x/(1-x)
    inv = invert_variables(g)
    assert inv.numerator.terms == {(1,): -1}


def test_gf_equal_examples():
    y_over = RationalGF(LaurentPoly({(0, 1): 1}), ((0, 1), (1, 0)))
    y_over_reordered = RationalGF(LaurentPoly({(0, 1): 1}), ((1, 0), (0, 1)))
    x_over = RationalGF(LaurentPoly({(1, 0): 1}), ((0, 1), (1, 0)))
    assert gf_equal(y_over, y_over_reordered)
    assert not gf_equal(y_over, x_over)
    lhs = RationalGF(LaurentPoly({(2,): 3, (3,): -1}), ((1,), (1,), (1,)))
    rhs = RationalGF(LaurentPoly({(0,): 1, (1,): -3}), ((1,), (1,), (1,)))
    assert not gf_equal(lhs, rhs)


def test_gf_equal_across_different_denominators():
    # t/(1-t) == t(1-t)/(1-t)^2
    a = RationalGF(LaurentPoly({(1,): 1}), ((1,),))
    b = RationalGF(LaurentPoly({(1,): 1, (2,): -1}), ((1,), (1,)))
    assert gf_equal(a, b)


def test_gf_equal_is_equivalence_on_corpus_sample():
    cone = square_cone()
    sels = [FacetSelection(cone, frozenset({i})) for i in range(4)]
    gfs = [domain_gf(DomainSpec(s, SELECTED)) for s in sels]
    for g in gfs:
        assert gf_equal(g, g)
    for g1 in gfs:
        for g2 in gfs:
            assert gf_equal(g1, g2) == gf_equal(g2, g1)
    # transitivity through scaled copies
    g = gfs[0]
    h = gf_scale(gf_scale(g, -1), -1)
    assert gf_equal(g, h) and gf_equal(h, g)


# -- reciprocity ----------------------------------------------------------------

def test_reciprocity_quadrant_holds():
    report = reciprocity_check(quadrant_selection())
    assert report.holds
    assert report.cm_over == {"Q": True, "F2": True}
    assert report.witness["kind"] == "identity"
    assert report.to_json()["first_disagreement"] is None


def test_reciprocity_square_adjacent_holds():
    cone = square_cone()
    sel = FacetSelection(cone, facet_pairs_sharing_a_ray(cone)[0])
    report = reciprocity_check(sel)
    assert report.holds and report.cm_over == {"Q": True, "F2": True}
    g = specialize(domain_gf(DomainSpec(sel, SELECTED)), (0, 0, 1))
    expected = RationalGF(LaurentPoly({(1,): 1, (2,): 1}), ((1,), (1,), (1,)))
    assert gf_equal(g, expected)


def test_reciprocity_square_opposite_fails():
    cone = square_cone()
    sel = FacetSelection(cone, facet_pairs_sharing_no_ray(cone)[0])
    report = reciprocity_check(sel)
    assert not report.holds
    assert report.cm_over == {"Q": False, "F2": False}
    assert report.witness == {"kind": "disagreement", "degree": 0, "lhs": 1, "rhs": 0}
    payload = report.to_json()
    assert payload["first_disagreement"] == {"degree": 0, "lhs": 1, "rhs": 0}


def test_reciprocity_soundness_on_corpus():
    # CM over either field forces the identity: exhaustively over all proper
    # selections of the small cones, single facets elsewhere
    from recdom.corpus import pentagon_cone

    exhaustive = {"quadrant": quadrant(), "square": square_cone(), "pentagon": pentagon_cone()}
    for name, cone in exhaustive.items():
        n = len(cone.facets)
        for size in range(1, n):
            for subset in combinations(range(n), size):
                report = reciprocity_check(FacetSelection(cone, frozenset(subset)))
                if report.cm_over["Q"] or report.cm_over["F2"]:
                    assert report.holds, (name, subset)
    for name, cone in corpus_cones().items():
        for i in range(len(cone.facets)):
            sel = FacetSelection(cone, frozenset({i}))
            report = reciprocity_check(sel)
            if report.cm_over["Q"] or report.cm_over["F2"]:
                assert report.holds, (name, i)


# -- colon identity -------------------------------------------------------------

def test_colon_quadrant_examples():
    report = verify_colon_identity(quadrant_selection(), 6)
    assert report.consistent
    # a = (1, 0) is a member (strict on the complement facet, the x-functional)
    assert report.members > 0
    # a = (0, 1) is outside and gets the witness b = (0, 1) on the x = 0 facet
    assert report.witnesses[(0, 1)]["ideal_point"] == (0, 1)
    assert report.witnesses[(0, 1)]["sum"] == (0, 2)
    assert len(report.witnesses) == report.points_scanned - report.members
    assert report.product_checks == report.members * len(
        [
            p
            for p in _cone_scan(quadrant(), 6)
            if quadrant().facets[0](p) > 0
        ]
    )


def _cone_scan(cone, bound):
    from recdom.enumerator import _cone_points

    return _cone_points(cone, default_grading(cone), bound)


def test_colon_square_cone_instances():
    cone = square_cone()
    for pair in (facet_pairs_sharing_a_ray(cone)[0], facet_pairs_sharing_no_ray(cone)[0]):
        report = verify_colon_identity(FacetSelection(cone, pair), 6)
        assert report.consistent
        assert len(report.witnesses) == report.points_scanned - report.members
        for a, data in report.witnesses.items():
            b = data["ideal_point"]
            facet = cone.facets[data["facet"]]
            assert facet(a) == 0 and facet(b) == 0
            assert all(cone.facets[i](b) > 0 for i in pair)
            assert not cone.interior_contains(data["sum"])


def test_colon_witness_exhaustion_error():
    cone = quadrant()
    sel = FacetSelection(cone, frozenset({0}))
    with pytest.raises(WitnessSearchExhausted):
        verify_colon_identity(sel, 0)


def test_colon_identity_every_corpus_cone():
    # the scan bound must leave room for facet-interior witnesses: the sum of
    # a facet's rays is one, so a third of its largest degree always suffices
    for name, cone in corpus_cones().items():
        w = default_grading(cone)
        needed = max(
            sum(dot(w, cone.rays[i]) for i in facet.incident_rays)
            for facet in cone.facets
        )
        bound = max(6, -(-needed // 3))
        for i in range(len(cone.facets)):
            sel = FacetSelection(cone, frozenset({i}))
            report = verify_colon_identity(sel, bound)
            assert report.consistent, (name, i)
            assert len(report.witnesses) == report.points_scanned - report.members
