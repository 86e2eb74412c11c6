"""Sparse multivariate polynomial helper."""

from fractions import Fraction as F

import pytest

from quintic_trinomials.multipoly import MultiPoly, resultant_in

V = ("x", "y", "z")


def test_arithmetic_and_equality():
    x = MultiPoly.variable(V, "x")
    y = MultiPoly.variable(V, "y")
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert p - p == 0
    assert MultiPoly.zero(V).is_zero


def test_substitute_and_evaluate():
    x, y, z = (MultiPoly.variable(V, n) for n in V)
    p = x * x + 3 * y * z
    q = p.substitute("x", y + z)
    assert q == (y + z) ** 2 + 3 * y * z
    values = {"x": F(2), "y": F(-1), "z": F(3)}
    assert p.evaluate(values) == 4 - 9
    partial = p.partial_evaluate({"y": F(-1)})
    assert partial == x * x - 3 * z


def test_coefficient_extraction_and_degrees():
    x, y, z = (MultiPoly.variable(V, n) for n in V)
    p = 2 * x * x * y + x * z - 5 * y
    assert p.degree_in("x") == 2
    assert p.coefficient_of("x", 2) == 2 * y
    assert p.coefficient_of("x", 1) == z
    assert p.coefficient_of("x", 0) == -5 * y
    assert p.total_degree() == 3
    assert not p.is_homogeneous()
    assert (x * y + z * z).is_homogeneous()


def test_divide_by_variable():
    x, y, _ = (MultiPoly.variable(V, n) for n in V)
    p = x * x * y + 2 * x
    assert p.divide_by_variable("x") == x * y + 2
    assert (p + y).divide_by_variable("x") is None


def test_proportionality():
    x, y, _ = (MultiPoly.variable(V, n) for n in V)
    p = 3 * x * y - 6 * y * y
    assert p.proportionality(x * y - 2 * y * y) == 3
    assert p.proportionality(x * y + y * y) is None
    assert p.proportionality(MultiPoly.zero(V)) is None


def test_resultant_in_low_degrees():
    x, y, t = (MultiPoly.variable(("x", "y", "t"), n) for n in ("x", "y", "t"))
    # res_t( x*t + y, t^2 - x ) = x^2 * ((y/x)^2 - x)... cleared: y^2 - x^3
    lin = x * t + y
    quad = t * t - x
    res = resultant_in("t", lin, quad)
    assert res == y * y - x ** 3
    with pytest.raises(ValueError):
        resultant_in("t", quad, lin)


def test_mixed_variable_sets_rejected():
    with pytest.raises(ValueError):
        MultiPoly.variable(V, "x") + MultiPoly.variable(("a", "b"), "a")
