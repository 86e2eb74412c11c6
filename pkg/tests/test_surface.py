"""Surface membership, t recovery, lines, rational curves, elimination."""

import random
from fractions import Fraction as F

import pytest

from quintic_trinomials.surface import (SurfacePoint, SURFACE_FORM, on_surface,
                                        recover_t, rational_curve, line_point,
                                        consistency_with_curve,
                                        eliminate_t_from_curve_forms,
                                        LINE_NAMES, CURVE_NAMES, LINE_T_VALUES)
from quintic_trinomials.curve import curve_from_t, point_search


def test_transcription_against_elimination():
    rebuilt = eliminate_t_from_curve_forms()
    ratio = rebuilt.proportionality(SURFACE_FORM)
    assert ratio is not None
    assert len(SURFACE_FORM.terms) == 30
    assert SURFACE_FORM.is_homogeneous() and SURFACE_FORM.total_degree() == 6


def test_membership_anchors():
    assert on_surface(SurfacePoint.from_rationals((10, 1, F(-3, 5), 0)))
    assert on_surface(SurfacePoint.from_rationals((0, 0, 1, 1)))
    assert not on_surface(SurfacePoint((1, 1, 1, 1)))


def test_homogeneity():
    rng = random.Random(61)
    for _ in range(25):
        values = {v: F(rng.randint(-9, 9), rng.randint(1, 4)) for v in "abcd"}
        lam = F(rng.randint(1, 9), rng.randint(1, 9))
        scaled = {v: lam * x for v, x in values.items()}
        assert SURFACE_FORM.evaluate(scaled) == lam ** 6 * SURFACE_FORM.evaluate(values)


def test_lines_vanish_and_recover_annotated_t():
    # along each line the composed form has degree <= 6 in the parameter,
    # so 50 exact zeros prove identical vanishing
    for name in LINE_NAMES:
        for k in range(1, 51):
            pt = line_point(name, F(k), F(k + 1))
            assert on_surface(pt), (name, k)
            if name != "singular":
                assert recover_t(pt) == LINE_T_VALUES[name], (name, k)


def test_singular_line_reports_no_t():
    pt = line_point("singular", 3, 5)
    assert on_surface(pt)
    assert recover_t(pt) is None


def test_rational_curves_vanish():
    # coordinate degree <= 4, so the composed sextic has degree <= 24 in s;
    # vanishing at 50 distinct samples is a complete identity proof
    for name in CURVE_NAMES:
        for k in range(-25, 26):
            if k == 0 and name in ("R4", "R5"):
                continue  # all-zero tuple at s = 0
            pt = rational_curve(name, F(k, 3))
            assert on_surface(pt), (name, k)


def test_rational_curve_anchors():
    assert rational_curve("R4", 1) == SurfacePoint((0, 7, -4, -4))
    r3 = rational_curve("R3", 0)
    assert r3 == SurfacePoint.from_rationals((1, F(1, 10), F(-4, 25), F(16, 125)))
    assert rational_curve("R5", 2) == SurfacePoint.from_rationals((-45, F(-9, 2), 2, 1))


def test_rational_curve_names_and_degenerate_parameter():
    with pytest.raises(ValueError):
        rational_curve("bogus", 1)
    # no rational parameter collapses these parametrizations to all-zero;
    # s = 0 on R4/R5 lands on the surface point (0:0:0:1)
    assert rational_curve("R4", 0) == SurfacePoint((0, 0, 0, 1))
    assert on_surface(rational_curve("R4", 0))


def test_recover_t_rejects_off_surface():
    with pytest.raises(ValueError):
        recover_t(SurfacePoint((1, 1, 1, 1)))


def test_search_points_lie_on_surface_with_matching_t():
    checked = 0
    for t, bound in ((F(6, 5), 100), (F(-3125, 20736), 40), (F(7, 3), 40)):
        curve = curve_from_t(t)
        for pt in point_search(curve, bound).points:
            sp = SurfacePoint(pt.coords)
            assert on_surface(sp)
            recovered = recover_t(sp)
            if recovered is not None:
                assert recovered == t
                checked += 1
    assert checked >= 1  # the non-base t = 6/5 point carries its t


def test_consistency_with_curve():
    # R1-R3 points with generic t land on the matching curve exactly;
    # R4 and R5 sit where numerator and denominator of t both vanish
    verified = 0
    for name in ("R1", "R2", "R3"):
        for k in range(1, 11):
            pt = rational_curve(name, F(k, 2))
            view = consistency_with_curve(pt)
            if view is None:
                continue  # t in {0, infinity, -3125/256}
            t, cpt = view
            assert curve_from_t(t).contains(cpt)
            verified += 1
    assert verified >= 25
    for name in ("R4", "R5"):
        for k in range(1, 11):
            assert recover_t(rational_curve(name, F(k, 2))) is None


def test_t_zero_line_is_degenerate_for_consistency():
    pt = line_point("t0-a", 2, 3)
    assert consistency_with_curve(pt) is None
