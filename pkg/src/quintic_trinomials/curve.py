"""The projective curve classifying trinomials with a root in a quintic field.

For K = Q[alpha] with alpha a root of x^5 + tx + t, elements
beta = a + b alpha + c alpha^2 + d alpha^3 + e alpha^4 whose
characteristic polynomial is a trinomial x^5 + rx + s correspond to the
points of a genus-four curve in P^3: the trace condition eliminates e
(4te = 5a), and the x^3- and x^2-coefficient conditions cut out a
quadric and a cubic in (a : b : c : d).

For a general quintic field the same construction is done symbolically:
the characteristic polynomial of a generic element is expanded by
Faddeev-LeVerrier over a polynomial ring in the five coordinates, one
variable is eliminated through the (linear) trace condition, and the
raw quadric/cubic conditions are returned.  The t-form constructor
instead stores a cubic already reduced by a multiple of the quadric
(same ideal, fewer monomials); `normal_form_cubic` reconciles the two
presentations for comparisons.

Point search enumerates integer (b, c, d) boxes and solves the quadric
for the remaining coordinate exactly (a rational root exists iff the
integer discriminant is a perfect square).  A vectorized numpy inner
loop runs when an exact precomputed bound fits the arithmetic in int64;
otherwise a big-int path takes over.  Every candidate is re-verified in
exact arithmetic before acceptance.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .qpoly import UniPoly, is_rational_square
from .factor import factor_over_Q
from .multipoly import MultiPoly
from .numberfield import NumberField, FieldElement, charpoly_mod, charpoly_from_matrix
from .trinomial import Trinomial, EquivClass, equiv_class

CURVE_VARS = ("a", "b", "c", "d")
FULL_VARS = ("a", "b", "c", "d", "e")

T_EXCLUDED = Fraction(-3125, 256)


class DegeneratePoint(Exception):
    """The element at this point is rational; no quintic trinomial arises."""


@dataclass(frozen=True, order=True)
class CurvePoint:
    """Primitive integer projective tuple, first nonzero coordinate positive."""

    coords: Tuple[int, ...]

    @staticmethod
    def from_rationals(values: Sequence[Fraction]) -> "CurvePoint":
        vals = [Fraction(v) for v in values]
        if all(v == 0 for v in vals):
            raise ValueError("all coordinates vanish")
        den = math.lcm(*(v.denominator for v in vals))
        ints = [int(v * den) for v in vals]
        g = math.gcd(*(abs(v) for v in ints))
        ints = [v // g for v in ints]
        first = next(v for v in ints if v)
        if first < 0:
            ints = [-v for v in ints]
        return CurvePoint(tuple(ints))

    @property
    def height(self) -> int:
        return max(abs(v) for v in self.coords)

    def to_json(self):
        return list(self.coords)

    def __str__(self):
        return "(" + " : ".join(str(v) for v in self.coords) + ")"


def _normal_form_mod_quadric(cubic: MultiPoly, quadric: MultiPoly) -> MultiPoly:
    """Reduce the cubic modulo the quadric, lex order, leading-term division."""
    lead_exp = max(quadric.terms)
    lead_coeff = quadric.terms[lead_exp]
    current = cubic
    while True:
        divisible = [e for e in current.terms
                     if all(x >= y for x, y in zip(e, lead_exp))]
        if not divisible:
            return current
        e = max(divisible)
        shift = tuple(x - y for x, y in zip(e, lead_exp))
        factor = MultiPoly(current.vars, {shift: current.terms[e] / lead_coeff})
        current = current - factor * quadric


@dataclass(frozen=True)
class TrinomialCurve:
    """The t-form curve in P^3 with its elimination relation e = 5a/(4t)."""

    t: Fraction
    quadric: MultiPoly
    cubic: MultiPoly

    @property
    def defining_poly(self) -> UniPoly:
        return UniPoly([self.t, self.t, 0, 0, 0, 1])

    @property
    def field(self) -> NumberField:
        return NumberField(self.defining_poly)

    def e_coordinate(self, a: Fraction) -> Fraction:
        return 5 * Fraction(a) / (4 * self.t)

    def beta_coords(self, point: CurvePoint) -> Tuple[Fraction, ...]:
        a, b, c, d = (Fraction(v) for v in point.coords)
        return (a, b, c, d, self.e_coordinate(a))

    def contains(self, point: CurvePoint) -> bool:
        values = dict(zip(CURVE_VARS, (Fraction(v) for v in point.coords)))
        return (self.quadric.evaluate(values) == 0
                and self.cubic.evaluate(values) == 0)

    def normal_form_cubic(self) -> MultiPoly:
        return _normal_form_mod_quadric(self.cubic, self.quadric)


def curve_from_t(t: Fraction) -> TrinomialCurve:
    """The quadric and cubic cutting out the curve for K = Q[x]/(x^5+tx+t).

    t = 0 degenerates the elimination and t = -3125/256 makes the
    quintic inseparable; both are rejected.
    """
    t = Fraction(t)
    if t == 0:
        raise ValueError("t = 0 degenerates the trace elimination")
    if t == T_EXCLUDED:
        raise ValueError("t = -3125/256: the defining quintic has a repeated root")
    quadric = MultiPoly.from_spec(CURVE_VARS, [
        (-5, {"a": 2}), (50, {"a": 1, "b": 1}),
        (32 * t, {"b": 1, "d": 1}), (16 * t, {"c": 2}), (40 * t, {"c": 1, "d": 1}),
    ])
    cubic = MultiPoly.from_spec(CURVE_VARS, [
        (-10, {"a": 3}), (25, {"a": 2, "b": 1}), (-125, {"a": 2, "c": 1}),
        (-160 * t, {"a": 1, "c": 1, "d": 1}), (-100 * t, {"a": 1, "d": 2}),
        (64 * t, {"b": 2, "c": 1}), (80 * t, {"b": 2, "d": 1}), (80 * t, {"b": 1, "c": 2}),
        (-64 * t ** 2, {"c": 1, "d": 2}), (-48 * t ** 2, {"d": 3}),
    ])
    return TrinomialCurve(t=t, quadric=quadric, cubic=cubic)


# ---------------------------------------------------------------------------
# general fields: symbolic construction
# ---------------------------------------------------------------------------

def _generic_conditions(g: UniPoly) -> Tuple[MultiPoly, MultiPoly, MultiPoly]:
    """x^4, x^3, x^2 coefficient conditions of the generic characteristic polynomial."""
    pows = []
    acc = UniPoly.one()
    for _ in range(9):
        pows.append([acc[i] for i in range(5)])
        acc = (acc * UniPoly.x()) % g
    zero = MultiPoly.zero(FULL_VARS)
    gens = [MultiPoly.variable(FULL_VARS, v) for v in FULL_VARS]
    rows = [[zero for _ in range(5)] for _ in range(5)]
    for j in range(5):
        for k in range(5):
            red = pows[k + j]
            for i in range(5):
                if red[i]:
                    rows[i][j] = rows[i][j] + gens[k] * red[i]
    cs = charpoly_from_matrix(rows, zero, MultiPoly.constant(FULL_VARS, 1))
    return cs[4], cs[3], cs[2]


@dataclass(frozen=True)
class GeneralCurve:
    """Trace-hyperplane section for an arbitrary quintic field.

    Keeps all five coordinates: `linear` is the trace condition,
    `quadric`/`cubic` are the raw x^3/x^2 conditions with the chosen
    variable eliminated through the linear relation.  Points are primitive
    integer 5-tuples on the intersection.
    """

    g: UniPoly
    linear: MultiPoly
    quadric: MultiPoly
    cubic: MultiPoly
    eliminated: str
    elimination_expr: MultiPoly  # the eliminated variable as a linear form

    @property
    def live_vars(self) -> Tuple[str, ...]:
        return tuple(v for v in FULL_VARS if v != self.eliminated)

    @property
    def field(self) -> NumberField:
        return NumberField(self.g)

    def full_coords(self, live_values: Dict[str, Fraction]) -> Tuple[Fraction, ...]:
        values = dict(live_values)
        values[self.eliminated] = self.elimination_expr.evaluate(
            {**values, self.eliminated: Fraction(0)})
        return tuple(values[v] for v in FULL_VARS)

    def contains(self, coords: Sequence[Fraction]) -> bool:
        values = dict(zip(FULL_VARS, (Fraction(v) for v in coords)))
        return (self.linear.evaluate(values) == 0
                and self.quadric.evaluate(values) == 0
                and self.cubic.evaluate(values) == 0)

    def normal_form_cubic(self) -> MultiPoly:
        return _normal_form_mod_quadric(self.cubic, self.quadric)


def curve_from_field(g: UniPoly, eliminate: Optional[str] = None) -> GeneralCurve:
    """Symbolic construction of the curve conditions for K = Q[x]/(g).

    The variable eliminated via the linear trace condition defaults to
    the one with the largest absolute coefficient, ties to the later
    variable; x^5+tx+t fields therefore eliminate the alpha^4 coordinate
    whenever |4t| >= 5.
    """
    if g.degree != 5 or g.lc != 1:
        raise ValueError("need a monic quintic")
    if not factor_over_Q(g).is_irreducible:
        raise ValueError(f"{g} is reducible over Q")
    linear, quad_raw, cubic_raw = _generic_conditions(g)
    coeffs = {}
    for name in FULL_VARS:
        c = linear.coefficient_of(name, 1)
        coeffs[name] = c.terms.get((0, 0, 0, 0, 0), Fraction(0))
    if eliminate is None:
        best = max(abs(c) for c in coeffs.values())
        eliminate = [n for n in FULL_VARS if abs(coeffs[n]) == best][-1]
    if coeffs[eliminate] == 0:
        raise ValueError(f"cannot eliminate {eliminate}: zero trace coefficient")
    # eliminated = -(rest of linear)/coeff
    rest = linear - MultiPoly.variable(FULL_VARS, eliminate) * coeffs[eliminate]
    expr = rest * (Fraction(-1) / coeffs[eliminate])
    return GeneralCurve(
        g=g,
        linear=linear,
        quadric=quad_raw.substitute(eliminate, expr),
        cubic=cubic_raw.substitute(eliminate, expr),
        eliminated=eliminate,
        elimination_expr=expr,
    )


# ---------------------------------------------------------------------------
# point <-> trinomial translation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointImage:
    """A curve point translated to its trinomial data."""

    point: CurvePoint
    trinomial: Trinomial
    cls: EquivClass
    rho: Tuple[Fraction, Fraction]  # (gamma^5, delta^4), the degree-120 map image
    char_poly: UniPoly


def point_to_trinomial(curve: TrinomialCurve, point: CurvePoint) -> PointImage:
    """Translate (a : b : c : d) to its trinomial x^5 + gamma x + delta.

    The characteristic polynomial of beta must have vanishing x^4, x^3,
    x^2 coefficients (guaranteed on the curve); DegeneratePoint signals
    a rational beta.
    """
    coords = curve.beta_coords(point)
    if all(c == 0 for c in coords[1:]):
        raise DegeneratePoint(f"{point} has rational beta")
    cp = charpoly_mod(curve.defining_poly, coords)
    if any(cp[i] != 0 for i in (2, 3, 4)):
        raise ValueError(f"{point} is not on the curve: characteristic polynomial {cp}")
    gamma, delta = cp[1], cp[0]
    tri = Trinomial(gamma, delta)
    return PointImage(point=point, trinomial=tri, cls=equiv_class(tri),
                      rho=(gamma ** 5, delta ** 4), char_poly=cp)


def trinomial_to_point(curve: TrinomialCurve, beta: FieldElement) -> CurvePoint:
    """The projective point of an element whose characteristic polynomial is a trinomial."""
    if beta.field.defining_poly != curve.defining_poly:
        raise ValueError("element does not live in the curve's field")
    cp = beta.char_poly()
    if any(cp[i] != 0 for i in (2, 3, 4)):
        raise ValueError(f"characteristic polynomial {cp} is not of trinomial shape")
    a, b, c, d, e = beta.coords
    assert e == curve.e_coordinate(a), "trace relation must hold for trinomial shape"
    return CurvePoint.from_rationals((a, b, c, d))


def field_L_polynomial(t: Fraction) -> UniPoly:
    """Degree-10 polynomial defining the quadratic-times-cubic splitting field."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    return UniPoly([-t ** 2, 4 * t ** 2, -4 * t ** 2, 0, 0, -11 * t, -3 * t, 0, 0, 0, 1])


# ---------------------------------------------------------------------------
# point search on t-form curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchResult:
    points: Tuple[CurvePoint, ...]
    degenerate: Tuple[CurvePoint, ...]
    height_bound: int


def _square_filters():
    masks = []
    for m in (64, 63, 65, 11):
        table = bytearray(m)
        for r in range(m):
            table[r * r % m] = 1
        masks.append((m, bytes(table)))
    return masks


_SQ_FILTERS = _square_filters()


def _cubic_int_coeffs(p: int, q: int):
    """Integer coefficients of q^2 * cubic for exact candidate filtering."""
    return {
        "a3": -10 * q * q, "a2b": 25 * q * q, "a2c": -125 * q * q,
        "acd": -160 * p * q, "ad2": -100 * p * q,
        "b2c": 64 * p * q, "b2d": 80 * p * q, "bc2": 80 * p * q,
        "cd2": -64 * p * p, "d3": -48 * p * p,
    }


def _cubic_vanishes(k, a, b, c, d) -> bool:
    return (k["a3"] * a ** 3 + k["a2b"] * a * a * b + k["a2c"] * a * a * c
            + k["acd"] * a * c * d + k["ad2"] * a * d * d
            + k["b2c"] * b * b * c + k["b2d"] * b * b * d + k["bc2"] * b * c * c
            + k["cd2"] * c * d * d + k["d3"] * d ** 3) == 0


def _finish_candidates(p, q, b, c, d, disc_sqrt, height_bound, kcub, out):
    """Exact acceptance of the two quadric roots at integer (b, c, d)."""
    for sign in (1, -1):
        num = 50 * q * b + sign * disc_sqrt
        a = Fraction(num, 10 * q)
        try:
            pt = CurvePoint.from_rationals((a, b, c, d))
        except ValueError:
            continue
        if pt.height > height_bound:
            continue
        ai, bi, ci, di = pt.coords
        # quadric re-check in exact arithmetic (guards the fast path)
        if -5 * q * ai * ai + 50 * q * ai * bi + p * (32 * bi * di + 16 * ci * ci + 40 * ci * di) != 0:
            continue
        if _cubic_vanishes(kcub, ai, bi, ci, di):
            out.add(pt)


def _search_chunk_python(p, q, height_bound, d_lo, d_hi):
    """Big-int enumeration over d in [d_lo, d_hi) of the half box; exact everywhere.

    Half box: d >= 0, with c >= 0 when d = 0 and b >= 0 when d = c = 0;
    negated triples give the same projective points, so nothing is lost.
    """
    H = height_bound
    kcub = _cubic_int_coeffs(p, q)
    k1 = 2500 * q * q
    out = set()
    for d in range(d_lo, d_hi):
        k3 = 640 * q * p * d
        c_lo = 0 if d == 0 else -H
        for c in range(c_lo, H + 1):
            b_lo = 0 if (d == 0 and c == 0) else -H
            k4 = 20 * q * p * (16 * c * c + 40 * c * d)
            disc = (k1 * b_lo + k3) * b_lo + k4
            step = k3 + k1 * (2 * b_lo + 1)
            for b in range(b_lo, H + 1):
                if disc >= 0:
                    for m, table in _SQ_FILTERS:
                        if not table[disc % m]:
                            break
                    else:
                        s = math.isqrt(disc)
                        if s * s == disc:
                            _finish_candidates(p, q, b, c, d, s, H, kcub, out)
                disc += step
                step += 2 * k1
    return out


_SQ64 = np.zeros(64, dtype=bool)
_SQ64[[(r * r) % 64 for r in range(64)]] = True
_SQ63 = np.zeros(63, dtype=bool)
_SQ63[[(r * r) % 63 for r in range(63)]] = True


def _search_chunk_numpy(p, q, height_bound, d_lo, d_hi):
    """Vectorized enumeration over the half box; caller guarantees int64 bounds."""
    H = height_bound
    kcub = _cubic_int_coeffs(p, q)
    full_b = np.arange(-H, H + 1, dtype=np.int64)
    full_c = np.arange(-H, H + 1, dtype=np.int64)
    k1 = 2500 * q * q
    out = set()
    for d in range(d_lo, d_hi):
        cs = full_c[H:] if d == 0 else full_c
        bs = full_b
        row_b = k1 * bs * bs + (640 * q * p * d) * bs
        row_c = (320 * p * q) * cs * cs + (800 * p * q * d) * cs
        disc = row_b[:, None] + row_c[None, :]
        # quadratic-residue prefilter mod 64 and 63, then exact sqrt on survivors
        maybe = _SQ64[disc & 63] & _SQ63[disc % 63] & (disc >= 0)
        bi, ci = np.nonzero(maybe)
        if bi.size == 0:
            continue
        vals = disc[bi, ci]
        s = np.rint(np.sqrt(vals.astype(np.float64))).astype(np.int64)
        for delta in (-1, 0, 1):
            cand = s + delta
            for idx in np.nonzero((cand * cand == vals) & (cand >= 0))[0]:
                b = int(bs[bi[idx]])
                c = int(cs[ci[idx]])
                if d == 0 and c == 0 and b < 0:
                    continue  # covered by the negated triple
                _finish_candidates(p, q, b, c, d, int(cand[idx]), H, kcub, out)
    return out


def _chunk_worker(args):
    p, q, height_bound, d_lo, d_hi, use_numpy = args
    fn = _search_chunk_numpy if use_numpy else _search_chunk_python
    return fn(p, q, height_bound, d_lo, d_hi)


def point_search(curve: TrinomialCurve, height_bound: int, jobs: int = 1) -> SearchResult:
    """All primitive points with max |coordinate| <= height_bound.

    Enumerates (b, c, d), solves the quadric for a (quadratic with
    constant leading coefficient -5), filters by the cubic, normalizes,
    deduplicates and sorts by height.  No completeness beyond the height
    bound is claimed.  Results are independent of the partitioning into
    parallel chunks.
    """
    if height_bound < 1:
        raise ValueError("height bound must be >= 1")
    H = height_bound
    p, q = curve.t.numerator, curve.t.denominator
    # overflow audit for the vectorized path, with slack
    bound = H * H * (2500 * q * q + 640 * abs(p) * q + 320 * abs(p) * q + 800 * abs(p) * q)
    use_numpy = bound < 2 ** 61
    chunks = []
    n_chunks = max(1, min(4 * jobs, H + 1))
    edges = [(H + 1) * i // n_chunks for i in range(n_chunks)] + [H + 1]
    for lo, hi in zip(edges, edges[1:]):
        if lo < hi:
            chunks.append((p, q, H, lo, hi, use_numpy))
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_chunk_worker, chunks))
    else:
        partials = [_chunk_worker(ch) for ch in chunks]
    merged = set()
    for part in partials:
        merged |= part
    points, degenerate = [], []
    for pt in merged:
        # b = c = d = 0 would make beta rational; cannot occur on the curve,
        # but route it to the degenerate list rather than dropping silently
        if pt.coords[1] == 0 and pt.coords[2] == 0 and pt.coords[3] == 0:
            degenerate.append(pt)
        else:
            points.append(pt)
    key = lambda pt: (pt.height, pt.coords)
    return SearchResult(points=tuple(sorted(points, key=key)),
                        degenerate=tuple(sorted(degenerate, key=key)),
                        height_bound=H)


# ---------------------------------------------------------------------------
# point search on general curves (exact, small boxes)
# ---------------------------------------------------------------------------

def general_point_search(curve: GeneralCurve, height_bound: int) -> List[CurvePoint]:
    """Primitive integer 5-tuples on a general curve, searched exactly.

    The quadric is solved for a live variable that appears squared
    (quadratic branch) or, failing that, linearly (pure quintics yield a
    bilinear quadric); the remaining three live variables are
    enumerated.  Exact Fraction arithmetic throughout.
    """
    H = height_bound
    live = curve.live_vars
    sq_name = None
    for name in live:
        exps = [0] * 5
        exps[FULL_VARS.index(name)] = 2
        if tuple(exps) in curve.quadric.terms:
            sq_name = name
            break
    solve_name = sq_name
    if solve_name is None:
        for name in live:
            if curve.quadric.degree_in(name) == 1:
                solve_name = name
                break
    if solve_name is None:
        raise ValueError("quadric involves no live variable")
    others = [v for v in live if v != solve_name]
    found = set()

    def push(values: Dict[str, Fraction]):
        coords = curve.full_coords(values)
        if all(v == 0 for v in coords):
            return
        pt = CurvePoint.from_rationals(coords)
        if pt.height <= H and curve.contains(pt.coords):
            found.add(pt)

    quad = curve.quadric
    cubic = curve.cubic
    for x1 in range(-H, H + 1):
        for x2 in range(-H, H + 1):
            for x3 in range(-H, H + 1):
                values = {others[0]: Fraction(x1), others[1]: Fraction(x2),
                          others[2]: Fraction(x3)}
                restricted = quad.partial_evaluate(values)
                c2 = restricted.coefficient_of(solve_name, 2).terms.get((0,) * 5, Fraction(0))
                c1 = restricted.coefficient_of(solve_name, 1).terms.get((0,) * 5, Fraction(0))
                c0 = restricted.coefficient_of(solve_name, 0).terms.get((0,) * 5, Fraction(0))
                roots: List[Fraction] = []
                if c2 != 0:
                    disc = c1 * c1 - 4 * c2 * c0
                    if disc >= 0 and is_rational_square(disc):
                        s = Fraction(math.isqrt(disc.numerator), math.isqrt(disc.denominator))
                        roots = [(-c1 + s) / (2 * c2), (-c1 - s) / (2 * c2)]
                elif c1 != 0:
                    roots = [-c0 / c1]
                elif c0 == 0:
                    roots = [Fraction(v) for v in range(-H, H + 1)]
                for root in roots:
                    vals = dict(values)
                    vals[solve_name] = root
                    full = {**vals, curve.eliminated: Fraction(0)}
                    if cubic.evaluate(full) == 0:
                        push(vals)
    key = lambda pt: (pt.height, pt.coords)
    return sorted(found, key=key)
