"""Curve construction, point search, and the point/trinomial dictionary."""

import random
from fractions import Fraction as F

import pytest

from quintic_trinomials.qpoly import UniPoly
from quintic_trinomials.multipoly import MultiPoly
from quintic_trinomials.numberfield import NumberField, has_root_in_field
from quintic_trinomials.trinomial import EquivClass
from quintic_trinomials.curve import (CurvePoint, curve_from_t, curve_from_field,
                                      point_search, general_point_search,
                                      point_to_trinomial, trinomial_to_point,
                                      field_L_polynomial, FULL_VARS,
                                      _normal_form_mod_quadric,
                                      _search_chunk_python, _search_chunk_numpy)

T65 = F(6, 5)


def test_curve_point_normalization():
    pt = CurvePoint.from_rationals((F(-168, 55), F(9, 11), F(19, 11), 1))
    assert pt.coords == (168, -45, -95, -55)
    assert pt.height == 168
    assert CurvePoint.from_rationals((0, 3, 0, 0)).coords == (0, 1, 0, 0)
    with pytest.raises(ValueError):
        CurvePoint.from_rationals((0, 0, 0, 0))


def test_curve_from_t_quadric_coefficients():
    curve = curve_from_t(T65)
    expected = MultiPoly.from_spec(("a", "b", "c", "d"), [
        (-5, {"a": 2}), (50, {"a": 1, "b": 1}), (F(192, 5), {"b": 1, "d": 1}),
        (F(96, 5), {"c": 2}), (48, {"c": 1, "d": 1})])
    assert curve.quadric == expected


def test_base_point_on_every_t_form_curve():
    base = CurvePoint((0, 1, 0, 0))
    for t in (T65, F(2), F(-3125, 20736), F(7, 3)):
        assert curve_from_t(t).contains(base)


def test_excluded_parameters():
    with pytest.raises(ValueError):
        curve_from_t(0)
    with pytest.raises(ValueError):
        curve_from_t(F(-3125, 256))


def test_known_points_on_t65_curve():
    curve = curve_from_t(T65)
    for coords in ((F(-168, 55), F(9, 11), F(19, 11), 1),
                   (F(36, 35), F(-30, 7), F(24, 7), 1),
                   (F(-22, 15), F(-7, 6), F(-5, 4), 1),
                   (F(-8, 65), F(20, 39), F(-16, 39), 1)):
        assert curve.contains(CurvePoint.from_rationals(coords))


def test_point_search_small_heights():
    curve = curve_from_t(T65)
    assert [pt.coords for pt in point_search(curve, 1).points] == [(0, 1, 0, 0)]
    res = point_search(curve, 100)
    assert {pt.coords for pt in res.points} == {(0, 1, 0, 0), (88, 70, 75, -60)}
    assert res.degenerate == ()


def test_point_search_partition_invariance():
    full = _search_chunk_python(6, 5, 40, 0, 41)
    pieces = set()
    for lo, hi in ((0, 7), (7, 19), (19, 40), (40, 41)):
        pieces |= _search_chunk_python(6, 5, 40, lo, hi)
    assert pieces == full
    assert _search_chunk_numpy(6, 5, 40, 0, 41) == full


def test_point_search_parallel_matches_serial():
    curve = curve_from_t(T65)
    serial = point_search(curve, 60)
    parallel = point_search(curve, 60, jobs=2)
    assert serial == parallel


def test_point_search_python_path_on_large_t():
    # denominators large enough to force the big-int path
    t = F(123456789012345, 987654321098765)
    curve = curve_from_t(t)
    res = point_search(curve, 2)
    assert (0, 1, 0, 0) in {pt.coords for pt in res.points}


def test_point_to_trinomial_base_point():
    curve = curve_from_t(T65)
    image = point_to_trinomial(curve, CurvePoint((0, 1, 0, 0)))
    assert image.trinomial.a == T65 and image.trinomial.b == T65
    assert image.cls == EquivClass("generic", T65)
    assert image.rho == (T65 ** 5, T65 ** 4)


def test_point_to_trinomial_classified_points():
    curve = curve_from_t(T65)
    cases = [
        ((F(-168, 55), F(9, 11), F(19, 11), 1), EquivClass("pure", F(18))),
        ((F(36, 35), F(-30, 7), F(24, 7), 1), EquivClass("pure", F(432))),
        ((F(-22, 15), F(-7, 6), F(-5, 4), 1), EquivClass("pure", F(324))),
        ((F(-8, 65), F(20, 39), F(-16, 39), 1), EquivClass("pure", F(24))),
    ]
    for coords, expected in cases:
        image = point_to_trinomial(curve, CurvePoint.from_rationals(coords))
        assert image.cls == expected
        assert image.char_poly[2] == image.char_poly[3] == image.char_poly[4] == 0


def test_point_class_invariant_under_rescaling():
    curve = curve_from_t(T65)
    base = (F(-168, 55), F(9, 11), F(19, 11), 1)
    scaled = tuple(F(7, 3) * v for v in base)
    a = point_to_trinomial(curve, CurvePoint.from_rationals(base)).cls
    b = point_to_trinomial(curve, CurvePoint.from_rationals(scaled)).cls
    assert a == b


def test_trinomial_to_point_roundtrip():
    curve = curve_from_t(T65)
    field = curve.field
    res = has_root_in_field(UniPoly([-324, 0, 0, 0, 0, 1]), field)
    assert res.certified
    pt = trinomial_to_point(curve, res.witness)
    expected = CurvePoint.from_rationals((F(-22, 15), F(-7, 6), F(-5, 4), 1))
    assert pt == expected
    # roundtrip preserves the class
    assert point_to_trinomial(curve, pt).cls == EquivClass("pure", F(324))


def test_trinomial_to_point_generator_and_scaling():
    curve = curve_from_t(T65)
    field = curve.field
    assert trinomial_to_point(curve, field.generator).coords == (0, 1, 0, 0)
    assert trinomial_to_point(curve, field.generator * 2).coords == (0, 1, 0, 0)


def test_trinomial_to_point_rejects_non_trinomial_shape():
    curve = curve_from_t(T65)
    beta = curve.field.element((1, 1, 0, 0, 0))
    with pytest.raises(ValueError):
        trinomial_to_point(curve, beta)


def test_field_L_polynomial():
    assert field_L_polynomial(1) == UniPoly([-1, 4, -4, 0, 0, -11, -3, 0, 0, 0, 1])
    t = T65
    ell = field_L_polynomial(t)
    assert ell.degree == 10 and ell.lc == 1
    assert ell[6] == -3 * t and ell[5] == -11 * t
    assert ell[2] == -4 * t ** 2 and ell[1] == 4 * t ** 2 and ell[0] == -t ** 2
    with pytest.raises(ValueError):
        field_L_polynomial(0)


def _lift(form4):
    return MultiPoly(FULL_VARS, {e + (0,): c for e, c in form4.terms.items()})


def test_general_construction_matches_t_form():
    for t in (F(2), T65):
        curve_t = curve_from_t(t)
        general = curve_from_field(UniPoly([t, t, 0, 0, 0, 1]), eliminate="e")
        ratio_q = general.quadric.proportionality(_lift(curve_t.quadric))
        assert ratio_q is not None
        nf_general = general.normal_form_cubic()
        nf_t = _normal_form_mod_quadric(_lift(curve_t.cubic), _lift(curve_t.quadric))
        assert nf_general.proportionality(nf_t) is not None


def test_general_construction_auto_elimination():
    assert curve_from_field(UniPoly([2, 2, 0, 0, 0, 1])).eliminated == "e"
    assert curve_from_field(UniPoly([105, 75, 0, 0, 0, 1])).eliminated == "e"
    pure = curve_from_field(UniPoly([-18, 0, 0, 0, 0, 1]))
    assert pure.eliminated == "a"
    assert pure.linear.proportionality(MultiPoly.variable(FULL_VARS, "a")) is not None


def test_general_construction_rejects_reducible():
    with pytest.raises(ValueError):
        curve_from_field(UniPoly([1, 1, 0, 0, 0, 1]))


def test_pure_field_search_finds_all_five_classes():
    from quintic_trinomials.numberfield import charpoly_mod
    from quintic_trinomials.trinomial import Trinomial, equiv_class
    curve = curve_from_field(UniPoly([-18, 0, 0, 0, 0, 1]))
    pts = general_point_search(curve, 4)
    assert len(pts) >= 5
    classes = set()
    g = UniPoly([-18, 0, 0, 0, 0, 1])
    for pt in pts:
        cp = charpoly_mod(g, [F(v) for v in pt.coords])
        assert cp[2] == cp[3] == cp[4] == 0
        classes.add(equiv_class(Trinomial(cp[1], cp[0])))
    assert EquivClass("pure", F(18)) in classes
    assert EquivClass("pure", F(324)) in classes
    assert EquivClass("pure", F(24)) in classes
    assert EquivClass("pure", F(432)) in classes
    assert EquivClass("generic", T65) in classes


def test_point_search_against_brute_force_oracle():
    # independent oracle: enumerate all primitive integer 4-tuples in the box
    # and evaluate both curve forms directly
    t = T65
    H = 8
    curve = curve_from_t(t)
    p, q = t.numerator, t.denominator
    expected = set()
    for a in range(-H, H + 1):
        for b in range(-H, H + 1):
            for c in range(-H, H + 1):
                for d in range(-H, H + 1):
                    if (a, b, c, d) == (0, 0, 0, 0):
                        continue
                    quad = -5 * q * a * a + 50 * q * a * b + p * (32 * b * d + 16 * c * c + 40 * c * d)
                    if quad != 0:
                        continue
                    cub = (q * q * (-10 * a ** 3 + 25 * a * a * b - 125 * a * a * c)
                           + p * q * (-160 * a * c * d - 100 * a * d * d + 64 * b * b * c
                                      + 80 * b * b * d + 80 * b * c * c)
                           + p * p * (-64 * c * d * d - 48 * d ** 3))
                    if cub == 0:
                        expected.add(CurvePoint.from_rationals((a, b, c, d)))
    expected = {pt for pt in expected if pt.height <= H
                and not (pt.coords[1] == 0 and pt.coords[2] == 0 and pt.coords[3] == 0)}
    got = set(point_search(curve, H).points)
    assert got == expected
