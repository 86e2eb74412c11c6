"""Trinomial equivalence, discriminants, Galois evidence, families."""

import random
from fractions import Fraction as F

import pytest

from quintic_trinomials.qpoly import UniPoly, discriminant
from quintic_trinomials.factor import factor_over_Q
from quintic_trinomials.numberfield import NumberField, has_root_in_field
from quintic_trinomials.trinomial import (Trinomial, ScaledTrinomial, EquivClass,
                                          NotTForm, equiv_class, normalize_t_form,
                                          trinomial_disc, galois_type_heuristic,
                                          weber_family, dihedral_family,
                                          sw2_family, two_trinomial_family)


def test_equiv_class_kinds():
    assert equiv_class(Trinomial(-5, 12)) == EquivClass("generic", F(-3125, 20736))
    assert equiv_class(Trinomial(750, 3750)) == EquivClass("generic", F(6, 5))
    assert equiv_class(Trinomial(0, -18)) == EquivClass("pure", F(18))
    assert equiv_class(Trinomial(0, -18)) == equiv_class(Trinomial(0, F(-9, 16)))
    assert equiv_class(Trinomial(3, 0)) == EquivClass("linear-only")
    assert equiv_class(Trinomial(0, 0)) == EquivClass("degenerate")


def test_equivalence_is_a_scaling_invariant():
    rng = random.Random(51)
    for _ in range(200):
        f = Trinomial(F(rng.randint(-40, 40), rng.randint(1, 9)),
                      F(rng.randint(-40, 40), rng.randint(1, 9)))
        lam = F(rng.randint(1, 15) * rng.choice([-1, 1]), rng.randint(1, 15))
        assert equiv_class(f.scaled(lam)) == equiv_class(f)


def test_scaled_matches_polynomial_rescaling():
    f = Trinomial(-5, 12)
    lam = F(12, -5)
    poly = f.as_unipoly().scale_argument(lam) * lam ** -5
    assert poly == f.scaled(lam).as_unipoly()


def test_normalize_t_form():
    normalized, lam = normalize_t_form(Trinomial(-5, 12))
    t = F(-3125, 20736)
    assert normalized == Trinomial(t, t)
    assert lam == F(12, -5)
    assert normalize_t_form(Trinomial(750, 3750))[0] == Trinomial(F(6, 5), F(6, 5))
    fixed, lam1 = normalize_t_form(Trinomial(F(6, 5), F(6, 5)))
    assert fixed == Trinomial(F(6, 5), F(6, 5)) and lam1 == 1


def test_normalize_t_form_signals_class():
    with pytest.raises(NotTForm) as err:
        normalize_t_form(Trinomial(0, -18))
    assert err.value.equiv_class == EquivClass("pure", F(18))


def test_disc_closed_form_anchors():
    t = F(-3125, 256)
    assert trinomial_disc(Trinomial(t, t)) == 0
    assert trinomial_disc(Trinomial(0, 1)) == 3125
    assert trinomial_disc(Trinomial(-5, 12)) == 64000000


def test_disc_matches_resultant_based():
    rng = random.Random(52)
    for _ in range(200):
        f = Trinomial(F(rng.randint(-50, 50), rng.randint(1, 10)),
                      F(rng.randint(-50, 50), rng.randint(1, 10)))
        assert trinomial_disc(f) == discriminant(f.as_unipoly())


def test_galois_heuristic_anchors():
    group, ev = galois_type_heuristic(Trinomial(-5, 12))
    assert group == "D10" and ev.disc_is_square
    group, ev = galois_type_heuristic(Trinomial(0, -18))
    assert group == "F20" and not ev.disc_is_square
    assert set(ev.cycle_types) <= {(1, 1, 1, 1, 1), (1, 2, 2), (1, 4), (5,)}
    with pytest.raises(ValueError):
        galois_type_heuristic(Trinomial(1, 1))  # x^5+x+1 reducible


def test_galois_heuristic_generic_s5():
    group, ev = galois_type_heuristic(Trinomial(2, 2))
    assert group == "S5" and not ev.disc_is_square


def test_weber_family_values():
    assert weber_family(2) == Trinomial(F(15, 32), F(21, 16))
    assert weber_family(0) == Trinomial(F(-5, 16), F(3, 8))
    f1 = weber_family(1)
    assert f1 == Trinomial(0, 1)  # 20x^5 + 20 normalized: x^5 + 1, reducible
    assert not factor_over_Q(f1.as_unipoly()).is_irreducible


def test_dihedral_family_values():
    assert dihedral_family(2) == weber_family(F(3, 2)) == Trinomial(F(1, 4), F(6, 5))
    assert dihedral_family(1) == weber_family(0)
    assert dihedral_family(-1) == dihedral_family(1)  # s -> -1/s symmetry
    with pytest.raises(ValueError):
        dihedral_family(0)


def test_family_cycle_type_censuses():
    rng = random.Random(53)
    f20_types = {(1, 1, 1, 1, 1), (1, 2, 2), (1, 4), (5,)}
    d10_types = {(1, 1, 1, 1, 1), (1, 2, 2), (5,)}
    seen = 0
    while seen < 10:
        u = F(rng.randint(-30, 30), rng.randint(1, 6))
        try:
            _, ev = galois_type_heuristic(weber_family(u))
        except ValueError:
            continue
        assert set(ev.cycle_types) <= f20_types, f"u = {u}"
        seen += 1
    seen = 0
    while seen < 10:
        s = F(rng.randint(-30, 30), rng.randint(1, 6))
        if s == 0:
            continue
        try:
            _, ev = galois_type_heuristic(dihedral_family(s))
        except ValueError:
            continue
        assert set(ev.cycle_types) <= d10_types, f"s = {s}"
        assert ev.disc_is_square, f"s = {s}"
        seen += 1


def test_sw2_family_values():
    m, f = sw2_family(2)
    assert m == 24 and f == Trinomial(F(96, 5), F(-192, 5))
    m2, _ = sw2_family(-2)
    assert m2 == 648
    for bad in (0, 1, -1):
        with pytest.raises(ValueError):
            sw2_family(bad)


def test_sw2_field_membership():
    rng = random.Random(54)
    done = 0
    while done < 5:
        r = F(rng.randint(-6, 6), rng.randint(1, 3))
        if r in (0, 1, -1):
            continue
        m, f = sw2_family(r)
        radical = UniPoly([-m, 0, 0, 0, 0, 1])
        if not factor_over_Q(radical).is_irreducible:
            continue
        field = NumberField(radical)
        res = has_root_in_field(f.as_unipoly(), field)
        assert res.certified, f"r = {r}"
        done += 1


def test_two_trinomial_family_anchor():
    pair = two_trinomial_family(2)
    assert pair.f == ScaledTrinomial(40, -10, -4)
    assert pair.h == ScaledTrinomial(20, 145, -394)
    assert pair.beta_coords == (F(2), F(2), F(-5), F(10), F(-10))
    assert pair.verified and pair.f_irreducible


def test_two_trinomial_family_random_parameters():
    rng = random.Random(55)
    done = 0
    while done < 25:
        a = F(rng.randint(-40, 40), rng.randint(1, 8))
        if a in (0, 1, -8):
            continue
        pair = two_trinomial_family(a)
        assert pair.verified, f"a = {a}"
        done += 1


def test_two_trinomial_family_exclusions():
    for a in (0, 1, -8):
        with pytest.raises(ValueError):
            two_trinomial_family(a)


def test_two_trinomial_classes_differ():
    pair = two_trinomial_family(2)
    assert equiv_class(pair.f.monic()) != equiv_class(pair.h.monic())


def test_parse_layer_normalizes_leading_coefficient():
    assert Trinomial.from_coefficients(40, -10, -4) == Trinomial(F(-1, 4), F(-1, 10))
    with pytest.raises(ValueError):
        Trinomial.from_coefficients(0, 1, 1)
