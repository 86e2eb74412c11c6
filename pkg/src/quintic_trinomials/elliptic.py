"""Weierstrass curves over Q: invariants, group law, quadratic twists.

Just the sanity layer the trinomial work needs: exact b/c invariants
and j, chord-tangent addition, and quadratic-twist identification via
the c4/c6 ratios (valid away from j = 0 and j = 1728, which is all the
curves of interest here; the relevant j value is -25/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .factor import factor_int
from .qpoly import format_rational, is_rational_square


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, nonsingular."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __init__(self, a1=0, a2=0, a3=0, a4=0, a6=0):
        for name, v in zip(("a1", "a2", "a3", "a4", "a6"), (a1, a2, a3, a4, a6)):
            object.__setattr__(self, name, Fraction(v))
        if self.discriminant == 0:
            raise ValueError("singular curve")

    @staticmethod
    def short(a4, a6) -> "WeierstrassCurve":
        return WeierstrassCurve(0, 0, 0, a4, a6)

    @property
    def b2(self) -> Fraction:
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self) -> Fraction:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> Fraction:
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self) -> Fraction:
        return (self.a1 ** 2 * self.a6 + 4 * self.a2 * self.a6
                - self.a1 * self.a3 * self.a4 + self.a2 * self.a3 ** 2 - self.a4 ** 2)

    @property
    def c4(self) -> Fraction:
        return self.b2 ** 2 - 24 * self.b4

    @property
    def c6(self) -> Fraction:
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 ** 2 * b8 - 8 * b4 ** 3 - 27 * b6 ** 2 + 9 * b2 * b4 * b6

    def to_json(self):
        return {"a1": format_rational(self.a1), "a2": format_rational(self.a2),
                "a3": format_rational(self.a3), "a4": format_rational(self.a4),
                "a6": format_rational(self.a6)}

    def __str__(self):
        lhs = "y^2"
        if self.a1:
            lhs += f" + {self.a1}*x*y"
        if self.a3:
            lhs += f" + {self.a3}*y"
        rhs = "x^3"
        for coeff, mono in ((self.a2, "x^2"), (self.a4, "x"), (self.a6, "")):
            if coeff:
                term = f"{abs(coeff)}*{mono}" if mono else f"{abs(coeff)}"
                rhs += (" - " if coeff < 0 else " + ") + term
        return f"{lhs} = {rhs}"


def j_invariant(curve: WeierstrassCurve) -> Fraction:
    """j = c4^3 / discriminant (the curve is nonsingular by construction)."""
    return curve.c4 ** 3 / curve.discriminant


def quadratic_twist(curve: WeierstrassCurve, d: Fraction) -> WeierstrassCurve:
    """The twist by the square class of d, as a short model."""
    d = Fraction(d)
    if d == 0:
        raise ValueError("twist by zero")
    return WeierstrassCurve.short(-27 * d ** 2 * curve.c4, -54 * d ** 3 * curve.c6)


def squarefree_class(x: Fraction) -> int:
    """The squarefree integer representing x modulo nonzero rational squares."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no square class")
    sign = -1 if x < 0 else 1
    out = 1
    for p, e in factor_int(x.numerator * x.denominator).items():
        if e % 2:
            out *= p
    return sign * out


def is_isomorphic_over_Q(e1: WeierstrassCurve, e2: WeierstrassCurve) -> bool:
    """Isomorphism test via u^4 c4, u^6 c6 scaling (j away from 0, 1728)."""
    if j_invariant(e1) != j_invariant(e2):
        return False
    c4a, c6a, c4b, c6b = e1.c4, e1.c6, e2.c4, e2.c6
    if c4a == 0 or c6a == 0:
        raise ValueError("j in {0, 1728} not supported")
    u2 = (c6b / c6a) / (c4b / c4a)
    if u2 <= 0 or not is_rational_square(u2):
        return False
    return c4b == u2 ** 2 * c4a and c6b == u2 ** 3 * c6a


def quadratic_twist_factor(e1: WeierstrassCurve, e2: WeierstrassCurve) -> Optional[int]:
    """d (a squarefree integer) with e2 isomorphic to the d-twist of e1.

    None when the curves are not quadratic twists (different j).  Curves
    with j in {0, 1728} have extra twists and are not supported.
    """
    j1, j2 = j_invariant(e1), j_invariant(e2)
    if j1 in (Fraction(0), Fraction(1728)) or j2 in (Fraction(0), Fraction(1728)):
        raise ValueError("j in {0, 1728}: quartic/sextic twists not supported")
    if j1 != j2:
        return None
    d_raw = (e2.c6 / e1.c6) * (e1.c4 / e2.c4)
    d = squarefree_class(d_raw)
    if not is_isomorphic_over_Q(quadratic_twist(e1, d), e2):
        raise AssertionError("twist verification failed")
    return d


@dataclass(frozen=True)
class ECPoint:
    """Affine point or the point at infinity (x = y = None)."""

    x: Optional[Fraction]
    y: Optional[Fraction]

    def __init__(self, x=None, y=None):
        object.__setattr__(self, "x", None if x is None else Fraction(x))
        object.__setattr__(self, "y", None if y is None else Fraction(y))

    @staticmethod
    def infinity() -> "ECPoint":
        return ECPoint(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


def on_curve(curve: WeierstrassCurve, point: ECPoint) -> bool:
    if point.is_infinity:
        return True
    x, y = point.x, point.y
    return (y ** 2 + curve.a1 * x * y + curve.a3 * y
            == x ** 3 + curve.a2 * x ** 2 + curve.a4 * x + curve.a6)


def negate(curve: WeierstrassCurve, point: ECPoint) -> ECPoint:
    if point.is_infinity:
        return point
    return ECPoint(point.x, -point.y - curve.a1 * point.x - curve.a3)


def add(curve: WeierstrassCurve, p: ECPoint, q: ECPoint) -> ECPoint:
    """Chord-tangent addition; identity is the point at infinity."""
    for pt in (p, q):
        if not on_curve(curve, pt):
            raise ValueError(f"{pt} is not on {curve}")
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    a1, a2, a3, a4, a6 = curve.a1, curve.a2, curve.a3, curve.a4, curve.a6
    if p.x == q.x:
        if p.y + q.y + a1 * p.x + a3 == 0:
            return ECPoint.infinity()
        lam = (3 * p.x ** 2 + 2 * a2 * p.x + a4 - a1 * p.y) / (2 * p.y + a1 * p.x + a3)
        nu = (-p.x ** 3 + a4 * p.x + 2 * a6 - a3 * p.y) / (2 * p.y + a1 * p.x + a3)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
        nu = (p.y * q.x - q.y * p.x) / (q.x - p.x)
    x3 = lam ** 2 + a1 * lam - a2 - p.x - q.x
    y3 = -(lam + a1) * x3 - nu - a3
    return ECPoint(x3, y3)


def scalar_mul(curve: WeierstrassCurve, n: int, point: ECPoint) -> ECPoint:
    """n-fold sum by double-and-add; negative n through negation."""
    if not on_curve(curve, point):
        raise ValueError(f"{point} is not on {curve}")
    if n < 0:
        return scalar_mul(curve, -n, negate(curve, point))
    result = ECPoint.infinity()
    base = point
    while n:
        if n & 1:
            result = add(curve, result, base)
        base = add(curve, base, base)
        n >>= 1
    return result


# the two anchor curves of the construction: the conductor-50 curve with
# j = -25/2, and its -10 quadratic twist
E0 = WeierstrassCurve.short(-675, -79650)
E_TWIST_MINUS10 = WeierstrassCurve(0, -1, 0, -833, 109537)
