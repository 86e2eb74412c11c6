"""Arithmetic in quintic number fields K = Q[x]/(g).

Elements are coordinate vectors over the power basis 1, alpha, ...,
alpha^4.  The characteristic polynomial of the multiplication-by-beta
map is computed by Faddeev-LeVerrier over exact rationals; it equals
the minimal polynomial of beta whenever beta is irrational (degree five
is prime, so there are no intermediate fields).

Root certification: to decide whether f has a root in K, each
conjugation-respecting assignment of the complex roots of f to the
embeddings of K is solved as a 5x5 Vandermonde system in the power
basis; the numeric solutions are lifted to rationals and verified by
exact evaluation.  Certificates are unconditional; absence is only
asserted on exact criteria (degree obstruction or real/complex
signature mismatch); everything else is reported inconclusive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath

from .qpoly import UniPoly, count_real_roots
from .factor import factor_over_Q
from .roots import complex_roots, reconstruct_float

DEFAULT_PRECISION_BITS = 512
DEFAULT_DENOMINATOR_BOUND = 10 ** 12


def charpoly_from_matrix(rows, zero, one):
    """Characteristic polynomial coefficients of a 5x5 matrix by Faddeev-LeVerrier.

    Entries may be Fractions or any ring elements supporting + and * and
    scalar multiplication by Fraction.  Returns [c5, c4, ..., c1] such
    that charpoly = x^5 + c1 x^4 + c2 x^3 + c3 x^2 + c4 x + c5.
    """
    n = 5

    def mat_mul(a, b):
        return [[sum((a[i][k] * b[k][j] for k in range(n)), zero)
                 for j in range(n)] for i in range(n)]

    def trace(a):
        t = a[0][0]
        for i in range(1, n):
            t = t + a[i][i]
        return t

    coeffs = []
    nk = [row[:] for row in rows]
    for k in range(1, n + 1):
        ck = trace(nk) * Fraction(-1, k)
        coeffs.append(ck)
        if k < n:
            shifted = [[nk[i][j] + (ck if i == j else zero)
                        for j in range(n)] for i in range(n)]
            nk = mat_mul(rows, shifted)
    return list(reversed(coeffs))  # [c5, c4, c3, c2, c1]


def multiplication_matrix_mod(g: UniPoly, coords: Sequence[Fraction]):
    """Matrix of multiplication by sum(coords[k] alpha^k) on Q[x]/(g), columns = images of alpha^j."""
    n = g.degree
    beta = UniPoly(coords)
    cols = []
    acc = beta % g
    for j in range(n):
        cols.append([acc[i] for i in range(n)])
        acc = (acc * UniPoly.x()) % g
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def charpoly_mod(g: UniPoly, coords: Sequence[Fraction]) -> UniPoly:
    """Characteristic polynomial of multiplication by the element with given coords."""
    rows = multiplication_matrix_mod(g, coords)
    cs = charpoly_from_matrix(rows, Fraction(0), Fraction(1))
    return UniPoly(cs + [Fraction(1)])


class NumberField:
    """K = Q[alpha] with alpha a root of a monic irreducible quintic."""

    def __init__(self, defining_poly: UniPoly, check_irreducible: bool = True):
        if defining_poly.degree != 5 or defining_poly.lc != 1:
            raise ValueError("defining polynomial must be monic of degree 5")
        if check_irreducible and not factor_over_Q(defining_poly).is_irreducible:
            raise ValueError(f"defining polynomial {defining_poly} is reducible over Q")
        self.defining_poly = defining_poly
        self._embeddings = {}
        # reduction table: coordinates of alpha^k for k = 0..8
        self._alpha_powers: List[Tuple[Fraction, ...]] = []
        acc = UniPoly.one()
        for _ in range(9):
            self._alpha_powers.append(tuple(acc[i] for i in range(5)))
            acc = (acc * UniPoly.x()) % defining_poly

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.defining_poly == other.defining_poly

    def __hash__(self):
        return hash(self.defining_poly)

    def __repr__(self):
        return f"NumberField({self.defining_poly})"

    def element(self, coords) -> "FieldElement":
        return FieldElement(self, coords)

    @property
    def generator(self) -> "FieldElement":
        return self.element((0, 1, 0, 0, 0))

    def rational(self, q) -> "FieldElement":
        return self.element((q, 0, 0, 0, 0))

    def embeddings(self, precision_bits: int = 128):
        """The five complex embeddings of alpha, canonically ordered, cached."""
        if precision_bits not in self._embeddings:
            self._embeddings[precision_bits] = tuple(
                complex_roots(self.defining_poly, precision_bits))
        return self._embeddings[precision_bits]

    @property
    def signature(self) -> Tuple[int, int]:
        """(real embeddings, conjugate pairs)."""
        r = count_real_roots(self.defining_poly)
        return r, (5 - r) // 2


class FieldElement:
    """An element c0 + c1*alpha + c2*alpha^2 + c3*alpha^3 + c4*alpha^4 of K."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        cs = tuple(Fraction(c) for c in coords)
        if len(cs) != 5:
            raise ValueError("need exactly 5 coordinates")
        self.field = field
        self.coords = cs

    def _check(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.coords == other.coords)

    def __hash__(self):
        return hash((self.field, self.coords))

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coords))
        other = self._check(other)
        conv = [Fraction(0)] * 9
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    conv[i + j] += a * b
        out = [Fraction(0)] * 5
        for k, c in enumerate(conv):
            if c:
                pw = self.field._alpha_powers[k]
                for i in range(5):
                    out[i] += c * pw[i]
        return FieldElement(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers not supported")
        result = self.field.rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def multiplication_matrix(self):
        """5x5 rational matrix of x -> beta*x; column j holds beta*alpha^j."""
        return multiplication_matrix_mod(self.field.defining_poly, self.coords)

    def char_poly(self) -> UniPoly:
        """Monic degree-5 characteristic polynomial of the multiplication map."""
        return charpoly_mod(self.field.defining_poly, self.coords)

    def trace(self) -> Fraction:
        m = self.multiplication_matrix()
        return sum(m[i][i] for i in range(5))

    def norm(self) -> Fraction:
        return -self.char_poly()[0]  # det of the multiplication matrix

    def embed(self, ball):
        """Image under one embedding, the generator mapped to the given ball."""
        acc = None
        for c in reversed(self.coords):
            cb = ball._coerce(c)
            acc = cb if acc is None else acc * ball + cb
        return acc

    def __repr__(self):
        return f"FieldElement({self.coords})"

    def __str__(self):
        names = ("", "a", "a^2", "a^3", "a^4")
        parts = []
        for c, n in zip(self.coords, names):
            if c == 0:
                continue
            if not n:
                body = str(abs(c))
            elif abs(c) == 1:
                body = n
            else:
                body = f"{abs(c)}*{n}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# root-in-field certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSearchResult:
    """Outcome of a root-in-field query.

    status is one of "certified" (witness verifies f(witness) = 0
    exactly), "absent" (an exact obstruction applies), or
    "inconclusive" (no certificate found at the given parameters;
    absence is NOT claimed).
    """

    status: str
    witness: Optional[FieldElement]
    precision_bits: int
    denominator_bound: int
    detail: str = ""

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def _conjugation_assignments(field_sig, root_reals, root_pairs):
    """Yield root-value vectors aligned with the canonical embedding order."""
    r, c = field_sig
    for real_perm in itertools.permutations(range(r)):
        for pair_perm in itertools.permutations(range(c)):
            for flips in itertools.product((False, True), repeat=c):
                w = [None] * 5
                for i in range(r):
                    w[i] = root_reals[real_perm[i]]
                for j in range(c):
                    u = root_pairs[pair_perm[j]]
                    val = mpmath.conj(u) if flips[j] else u
                    w[r + 2 * j] = val
                    w[r + 2 * j + 1] = mpmath.conj(val)
                yield w


def has_root_in_field(f: UniPoly, K: NumberField,
                      precision_bits: int = DEFAULT_PRECISION_BITS,
                      denominator_bound: int = DEFAULT_DENOMINATOR_BOUND) -> RootSearchResult:
    """Find beta in K with f(beta) = 0, prove absence, or report inconclusive.

    Certificates always re-verify by exact evaluation in K before being
    returned.  Absence is only claimed via exact criteria: an
    irreducible factor of degree 2, 3 or 4 can have no root in a quintic
    field, and an irreducible quintic whose real/complex signature
    differs from K's admits no conjugation-respecting embedding
    matching.  No completeness claim is made otherwise.
    """
    if f.degree < 1 or f.degree > 5:
        raise ValueError("degree must be between 1 and 5")
    f = f.monic()
    fac = factor_over_Q(f)
    parts = [p for p, _ in fac.factors]
    if len(parts) > 1 or fac.factors[0][1] > 1:
        outcomes = [_root_of_irreducible(p, K, precision_bits, denominator_bound)
                    for p in parts]
        for out in outcomes:
            if out.certified:
                return out
        if all(o.status == "absent" for o in outcomes):
            return RootSearchResult("absent", None, precision_bits, denominator_bound,
                                    "no irreducible factor has a root in the field")
        return RootSearchResult("inconclusive", None, precision_bits, denominator_bound,
                                "no factor certified; absence not established")
    return _root_of_irreducible(parts[0], K, precision_bits, denominator_bound)


def _root_of_irreducible(f, K, precision_bits, denominator_bound):
    if f.degree == 1:
        beta = K.rational(-f[0])
        return RootSearchResult("certified", beta, precision_bits, denominator_bound,
                                "rational root")
    if f.degree in (2, 3, 4):
        return RootSearchResult("absent", None, precision_bits, denominator_bound,
                                f"irreducible degree {f.degree} does not divide 5")
    r_f = count_real_roots(f)
    r_g, c_g = K.signature
    if r_f != r_g:
        return RootSearchResult(
            "absent", None, precision_bits, denominator_bound,
            f"signature mismatch: {r_f} real roots vs {r_g} real embeddings")

    for prec in (precision_bits, 2 * precision_bits):
        beta = _search_at_precision(f, K, prec, denominator_bound, r_g, c_g)
        if beta is not None:
            return RootSearchResult("certified", beta, precision_bits,
                                    denominator_bound, "verified exactly")
    return RootSearchResult("inconclusive", None, precision_bits, denominator_bound,
                            "no assignment verified at the given precision")


def _search_at_precision(f, K, prec, denominator_bound, r, c):
    emb = K.embeddings(prec)
    froots = complex_roots(f, prec)
    root_reals = [b.mid for b in froots[:r]]
    root_pairs = [froots[r + 2 * j].mid for j in range(c)]
    with mpmath.workprec(prec):
        vmat = mpmath.matrix(5, 5)
        for i in range(5):
            z = emb[i].mid
            acc = mpmath.mpc(1)
            for k in range(5):
                vmat[i, k] = acc
                acc *= z
        imag_tol = mpmath.mpf(2) ** (-prec // 4)
        for w in _conjugation_assignments((r, c), root_reals, root_pairs):
            try:
                sol = mpmath.lu_solve(vmat, mpmath.matrix(w))
            except ZeroDivisionError:
                continue
            coords = []
            for k in range(5):
                z = sol[k]
                if abs(z.imag) > imag_tol:
                    coords = None
                    break
                cand = reconstruct_float(z.real, denominator_bound)
                if cand is None:
                    coords = None
                    break
                coords.append(cand)
            if coords is None:
                continue
            beta = K.element(coords)
            if _evaluate_exactly(f, beta).is_zero:
                return beta
    return None


def _evaluate_exactly(f: UniPoly, beta: FieldElement) -> FieldElement:
    acc = beta.field.rational(0)
    for coeff in reversed(f.coeffs):
        acc = acc * beta + beta.field.rational(coeff)
    return acc
