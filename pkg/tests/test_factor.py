"""Factorization over Q, mod-p cycle types, fifth-power classes."""

import random
from fractions import Fraction as F

import pytest

from quintic_trinomials.qpoly import UniPoly, discriminant
from quintic_trinomials.factor import (factor_over_Q, is_irreducible, factor_int,
                                       fifth_power_class, cycle_type_mod_p,
                                       is_prime, primes_below)


def test_cyclotomic_split():
    fac = factor_over_Q(UniPoly([1, 0, 0, 0, 0, 1]))
    assert fac.unit == 1
    assert [f.coeffs for f, _ in fac.factors] == [
        (F(1), F(1)),
        (F(1), F(-1), F(1), F(-1), F(1)),
    ]


def test_known_irreducible_quintics():
    assert is_irreducible(UniPoly([12, -5, 0, 0, 0, 1]))
    assert is_irreducible(UniPoly([-18, 0, 0, 0, 0, 1]))
    assert is_irreducible(UniPoly([105, 75, 0, 0, 0, 1]))


def test_x10_minus_1_cyclotomics():
    fac = factor_over_Q(UniPoly([-1] + [0] * 9 + [1]))
    degrees = sorted(f.degree for f, _ in fac.factors)
    assert degrees == [1, 1, 4, 4]
    assert fac.expand() == UniPoly([-1] + [0] * 9 + [1])


def test_trinomial_with_reducible_split():
    fac = factor_over_Q(UniPoly([1, 1, 0, 0, 0, 1]))
    assert [f.coeffs for f, _ in fac.factors] == [
        (F(1), F(1), F(1)),
        (F(1), F(0), F(-1), F(1)),
    ]


def test_multiplicities_and_unit():
    p = UniPoly([F(3)]) * UniPoly([1, 1]) ** 2 * UniPoly([2, 0, 1]) ** 3
    fac = factor_over_Q(p)
    assert fac.unit == 3
    assert dict((f.coeffs, m) for f, m in fac.factors) == {
        (F(1), F(1)): 2, (F(2), F(0), F(1)): 3}
    assert fac.expand() == p


def test_random_products_multiply_back():
    rng = random.Random(21)
    pool = [UniPoly([1, 1]), UniPoly([-2, 1]), UniPoly([1, 0, 1]),
            UniPoly([1, 1, 1]), UniPoly([-2, 0, 1]), UniPoly([1, -1, 0, 1]),
            UniPoly([2, 0, 0, 1])]
    checked = 0
    while checked < 200:
        parts = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        unit = F(rng.choice([-3, -1, 1, 2, 5]), rng.choice([1, 2, 7]))
        p = UniPoly([unit])
        for part in parts:
            p = p * part
        if p.degree < 1 or p.degree > 8:
            continue
        fac = factor_over_Q(p)
        assert fac.expand() == p
        assert all(f.lc == 1 for f, _ in fac.factors)
        assert all(is_irreducible(f) for f, _ in fac.factors)
        checked += 1


def test_factorization_order_is_deterministic():
    p = UniPoly([-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])
    a = factor_over_Q(p)
    b = factor_over_Q(p)
    assert a == b
    degrees = [f.degree for f, _ in a.factors]
    assert degrees == sorted(degrees)


def test_non_monic_rational_coefficients():
    p = UniPoly([F(1, 3), F(5, 6), F(1, 2)])  # (1/2)(x+2)(x+1/3)... expand check
    fac = factor_over_Q(p)
    assert fac.expand() == p


def test_degree_ten_supported():
    t = F(6, 5)
    ell = UniPoly([-t ** 2, 4 * t ** 2, -4 * t ** 2, 0, 0, -11 * t, -3 * t, 0, 0, 0, 1])
    fac = factor_over_Q(ell)
    assert fac.expand() == ell


def test_cycle_types():
    assert cycle_type_mod_p([12, -5, 0, 0, 0, 1], 7) == (5,)
    assert cycle_type_mod_p([-18, 0, 0, 0, 0, 1], 7) == (1, 4)
    assert cycle_type_mod_p([-18, 0, 0, 0, 0, 1], 11) == (5,)
    assert cycle_type_mod_p([-18, 0, 0, 0, 0, 1], 131) == (1, 1, 1, 1, 1)
    # p = 2 path (trace-map splitting)
    assert cycle_type_mod_p([1, 1, 0, 0, 0, 1], 2) == (2, 3)


def test_prime_utilities():
    assert primes_below(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(2 ** 31 - 1)
    assert not is_prime(2 ** 32 + 1)
    assert factor_int(64000000) == {2: 12, 5: 6}
    assert factor_int(-18) == {2: 1, 3: 2}
    with pytest.raises(ValueError):
        factor_int(0)


def test_fifth_power_class_anchors():
    assert fifth_power_class(F(32)) == 1
    assert fifth_power_class(F(18)) == 18
    assert fifth_power_class(F(324, 18)) == 18
    assert fifth_power_class(F(18) / (F(18, 32))) == 1
    assert fifth_power_class(F(9, 16)) == 18
    assert fifth_power_class(F(-18)) == 18  # -1 is itself a fifth power
    assert fifth_power_class(F(324)) == 324
    with pytest.raises(ValueError):
        fifth_power_class(F(0))


def test_fifth_power_class_invariance():
    rng = random.Random(22)
    for _ in range(100):
        x = F(rng.randint(1, 400) * rng.choice([-1, 1]), rng.randint(1, 60))
        y = F(rng.randint(1, 30) * rng.choice([-1, 1]), rng.randint(1, 9))
        assert fifth_power_class(x * y ** 5) == fifth_power_class(x)
