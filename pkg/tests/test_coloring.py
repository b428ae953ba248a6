import numpy as np
import pytest

from conftest import X, shadow
from knotrep import fixtures
from knotrep.exact import to_complex
from knotrep.coloring import (ArcColoring, ColoringError, check_regions, check_shadow,
                              connected_sum_coloring, factor_coloring, find_generic_shadow,
                              genericity_failures, p_condition, region_coloring,
                              spiral_vectors, strand_sides, verify_arc_coloring)
from knotrep.parabolic import (IDENTITY, Mat2, ParabolicVector as V, quandle_mul,
                               same_up_to_sign, to_matrix)
from knotrep.volume import hyperbolicity_residuals, solution_from_shadow


def test_fixture_colorings_verify(name):
    assert verify_arc_coloring(fixtures.arc_coloring(name)).ok
    assert verify_arc_coloring(fixtures.arc_coloring(name, x=-0.5 - 0.75 ** 0.5 * 1j)).ok


def test_broken_coloring_detected():
    c = fixtures.arc_coloring("3_1")
    bad = ArcColoring(c.diagram, [c[0], c[1], V(5, 1)])
    report = verify_arc_coloring(bad)
    assert not report.ok and report.failures


def test_missing_colour():
    with pytest.raises(ColoringError):
        ArcColoring(fixtures.trefoil(), {0: V(1, 0)})


def test_region_rule_holds_on_every_side(name):
    sh = shadow(name)
    assert check_regions(sh)
    for r, l, arc in strand_sides(sh.diagram):
        assert same_up_to_sign(sh.regions[l], quandle_mul(sh.regions[r], sh.arc[arc]))


def test_region_colors_independent_of_seed_face(name):
    sh = shadow(name)
    for f in range(sh.diagram.n_faces):
        again = region_coloring(sh.arc, f, sh.regions[f])
        assert all(same_up_to_sign(again[k], sh.regions[k]) for k in again)


def test_broken_arc_coloring_breaks_regions():
    c = fixtures.arc_coloring("3_1")
    bad = ArcColoring(c.diagram, [c[0], c[1], V(5, 1)])
    with pytest.raises(ColoringError):
        region_coloring(bad, 0, V(2, 1))


def test_fixture_shadow_checks(name):
    report = check_shadow(shadow(name))
    assert all(report.values()), report
    sh = shadow(name)
    assert p_condition(sh)
    assert not genericity_failures(sh.arc, sh.regions)
    bad = sh.with_p(sh.regions[0])
    assert not p_condition(bad)


def test_spiral_order():
    vs = list(spiral_vectors(2))
    assert len(vs) == 24
    assert vs[0] == V(1, 0)


@pytest.mark.parametrize("exact", [True, False])
def test_searched_shadow_solves_equations(name, exact):
    arc = fixtures.arc_coloring(name, x=None if exact else -0.5 + 0.75 ** 0.5 * 1j)
    sh = find_generic_shadow(arc)
    assert all(check_shadow(sh if not exact else sh.to_complex("minus")).values())
    w = [to_complex(v, "minus") for v in solution_from_shadow(sh)]
    assert np.max(hyperbolicity_residuals(sh.diagram, w)) < 1e-9


def test_search_is_deterministic():
    arc = fixtures.arc_coloring("4_1")
    a, b = find_generic_shadow(arc), find_generic_shadow(arc)
    assert a.regions == b.regions and a.p == b.p


def test_identity_sum_matches_fixture():
    c1, c2 = fixtures.arc_coloring("3_1"), fixtures.arc_coloring("4_1")
    res = connected_sum_coloring(c1, 2, c2, 0, conjugator=IDENTITY)
    assert res.coloring.colors == fixtures.arc_coloring("3_1#4_1").colors
    assert verify_arc_coloring(res.coloring).ok
    left, right = factor_coloring(res.coloring, res.splice)
    assert left.colors == c1.colors and right.colors == c2.colors
    assert left.diagram == c1.diagram and right.diagram == c2.diagram


def test_canonical_conjugator_is_identity_when_colours_agree():
    c1, c2 = fixtures.arc_coloring("3_1"), fixtures.arc_coloring("4_1")
    res = connected_sum_coloring(c1, 2, c2, 0)
    assert tuple(res.conjugator) == tuple(IDENTITY)


def test_nontrivial_conjugator():
    c1, c2 = fixtures.arc_coloring("3_1"), fixtures.arc_coloring("4_1")
    g = to_matrix(V(0, 1))
    assert g == Mat2(1, 0, 1, 1)
    res = connected_sum_coloring(c1, 2, c2, 0, conjugator=g)
    col = res.coloring
    assert verify_arc_coloring(col).ok
    for arc, want in zip((4, 5, 6), (V(X + 1, 2 * X + 1), V(X, 2 * X), V(X, X))):
        assert same_up_to_sign(col[arc], want)


def test_factor_with_any_conjugator(rng):
    c1 = fixtures.arc_coloring("4_1", x=-0.5 - 0.75 ** 0.5 * 1j)
    c2 = fixtures.arc_coloring("3_1")
    for _ in range(5):
        res = connected_sum_coloring(c1, 1, c2, 0)
        left, right = factor_coloring(res.coloring, res.splice)
        moved = c2.map(res.conjugator)
        assert all(same_up_to_sign(a, b) for a, b in zip(left.colors, c1.colors))
        assert all(same_up_to_sign(a, b, 1e-9) for a, b in zip(right.colors, moved.colors))
        assert verify_arc_coloring(res.coloring).ok


def test_conjugator_must_match():
    c1, c2 = fixtures.arc_coloring("3_1"), fixtures.arc_coloring("4_1")
    with pytest.raises(ColoringError):
        connected_sum_coloring(c1, 0, c2, 0, conjugator=IDENTITY)
