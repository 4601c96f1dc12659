"""
Certified real-root counting and isolation with Sturm sequences.

All decisions are made in exact rational arithmetic. Intervals are refined by
bisection; floating point is only used when printing decimal approximations.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Sequence

from .exactpoly import (
    IntPolynomial,
    PolynomialError,
    ZeroPolynomialError,
    gcd,
    normalize_primitive,
    rational_remainder,
    sign_variations,
    squarefree_part,
)


class RootCountError(PolynomialError):
    """Raised when a polynomial does not have exactly one positive root."""

    def __init__(self, count: int, poly: IntPolynomial):
        self.count = count
        self.poly = poly
        super().__init__(f"{poly} has {count} positive roots, expected exactly 1")


# ---------------------------------------------------------------------------
# Sturm chains


def sturm_chain(f: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of the square-free part of f.

    Each remainder is rescaled by a positive constant to a primitive integer
    polynomial, which leaves every sign count unchanged.
    """
    if f.is_zero():
        raise ZeroPolynomialError("Sturm chain of the zero polynomial")
    p0 = squarefree_part(f)
    if p0.degree <= 0:
        return [p0]
    chain = [p0, normalize_primitive(p0.derivative())[2]]
    while chain[-1].degree > 0:
        r = rational_remainder(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    return chain


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def variations_at(chain: Sequence[IntPolynomial], x: Optional[Fraction], side: int = 1) -> int:
    """Sign variations of the chain at x; ``x=None`` means +inf (side=1) or -inf (side=-1)."""
    if x is None:
        if side > 0:
            return _variations([_sign(p.leading) for p in chain])
        return _variations([_sign(p.leading) * (-1) ** p.degree for p in chain])
    return _variations([p.sign_at(x) for p in chain])


def count_roots(f: IntPolynomial, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None,
                chain: Optional[list[IntPolynomial]] = None) -> int:
    """Number of distinct real roots in (lo, hi]; ``None`` endpoints are infinite."""
    chain = chain if chain is not None else sturm_chain(f)
    return variations_at(chain, lo, -1) - variations_at(chain, hi, 1)


def cauchy_bound(f: IntPolynomial) -> Fraction:
    """Strict bound on the modulus of every complex root."""
    if f.degree < 1:
        return Fraction(1)
    lead = abs(f.leading)
    return 1 + Fraction(max(abs(c) for c in f.coeffs[:-1]), lead)


class PositiveRootCount(NamedTuple):
    count: int
    descartes_bound: int


def count_positive_roots(f: IntPolynomial) -> PositiveRootCount:
    """Exact number of distinct positive roots, plus the sign-variation bound."""
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    _, g = f.strip_zero_roots()
    bound = sign_variations(f)
    if g.degree < 1:
        return PositiveRootCount(0, bound)
    return PositiveRootCount(count_roots(g, Fraction(0), None), bound)


def count_positive_roots_with_multiplicity(f: IntPolynomial) -> int:
    """Positive roots counted with multiplicity, via f, gcd(f, f'), ..."""
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    _, g = f.strip_zero_roots()
    total = 0
    while g.degree >= 1:
        total += count_roots(g, Fraction(0), None)
        g = gcd(g, g.derivative())
    return total


# ---------------------------------------------------------------------------
# isolating intervals


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def to_dict(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi)}


@dataclass(frozen=True)
class AlgebraicReal:
    """A real root of a primitive square-free polynomial pinned by an isolating interval."""

    poly: IntPolynomial
    interval: RationalInterval

    @property
    def lo(self) -> Fraction:
        return self.interval.lo

    @property
    def hi(self) -> Fraction:
        return self.interval.hi

    def is_rational(self) -> bool:
        return self.poly.degree == 1

    def exact_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        c0, c1 = self.poly.coeffs
        return Fraction(-c0, c1)

    def to_dict(self, decimal_digits: int = 12) -> dict:
        narrow = refine(self, Fraction(1, 10 ** (decimal_digits + 2)))
        with localcontext() as ctx:
            ctx.prec = decimal_digits + 30
            mid = Decimal(narrow.interval.midpoint.numerator) / Decimal(narrow.interval.midpoint.denominator)
            approx = mid.quantize(Decimal(1).scaleb(-decimal_digits))
        return {
            "poly": self.poly.to_canonical(),
            "lo": str(self.lo),
            "hi": str(self.hi),
            "decimal": str(approx),
            "decimal_digits": decimal_digits,
        }

    def __float__(self) -> float:
        return float(refine(self, Fraction(1, 2**60)).interval.midpoint)


def _split_point(f: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi) that is not a root of f, preferring the midpoint."""
    width = hi - lo
    den = 2
    while True:
        for num in range(1, den):
            m = lo + width * Fraction(num, den)
            if f(m) != 0:
                return m
        den += 1


def isolate_real_roots(f: IntPolynomial, lo: Optional[Fraction] = None,
                       hi: Optional[Fraction] = None) -> list[AlgebraicReal]:
    """Isolating intervals for the distinct real roots of f in the open interval (lo, hi).

    Defaults cover the whole real line. Finite endpoints must not be roots.
    """
    sqf = squarefree_part(f)
    if sqf.degree < 1:
        return []
    chain = sturm_chain(sqf)
    bound = cauchy_bound(sqf)
    lo = -bound if lo is None else max(Fraction(lo), -bound)
    hi = bound if hi is None else min(Fraction(hi), bound)
    if lo >= hi:
        return []
    if sqf(lo) == 0 or sqf(hi) == 0:
        raise ValueError("interval endpoints must not be roots")
    out: list[AlgebraicReal] = []
    stack = [(lo, hi, count_roots(sqf, lo, hi, chain))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(AlgebraicReal(sqf, RationalInterval(a, b)))
            continue
        m = _split_point(sqf, a, b)
        left = count_roots(sqf, a, m, chain)
        stack.append((m, b, n - left))
        stack.append((a, m, left))
    out.sort(key=lambda r: r.lo)
    return out


def positive_roots(f: IntPolynomial) -> list[AlgebraicReal]:
    _, g = f.strip_zero_roots()
    if g.degree < 1:
        return []
    roots = isolate_real_roots(g, Fraction(0), None)
    return [_ensure_positive(r) for r in roots]


def unique_positive_root(f: IntPolynomial) -> AlgebraicReal:
    """The positive root of f, which must be the only one."""
    roots = positive_roots(f)
    if len(roots) != 1:
        raise RootCountError(len(roots), f)
    return roots[0]


# ---------------------------------------------------------------------------
# refinement


def bisection_steps(x: AlgebraicReal) -> Iterator[AlgebraicReal]:
    """Endless sequence of halved isolating intervals for the same root."""
    f = x.poly
    lo, hi = x.lo, x.hi
    s_lo = f.sign_at(lo)
    while True:
        mid = (lo + hi) / 2
        s_mid = f.sign_at(mid)
        if s_mid == 0:
            # Rational root hit: keep a symmetric bracket around it.
            delta = (hi - lo) / 4
            lo, hi = mid - delta, mid + delta
        elif s_mid == s_lo:
            lo = mid
        else:
            hi = mid
        yield replace(x, interval=RationalInterval(lo, hi))


def refine(x: AlgebraicReal, eps: Fraction) -> AlgebraicReal:
    """Shrink the isolating interval to width <= eps."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if x.interval.width <= eps:
        return x
    for step in bisection_steps(x):
        if step.interval.width <= eps:
            return step
    raise AssertionError("unreachable")


def _ensure_positive(x: AlgebraicReal) -> AlgebraicReal:
    steps = bisection_steps(x)
    while x.lo <= 0:
        x = next(steps)
    return x


class Comparison(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def compare_with_one(x: AlgebraicReal) -> Comparison:
    one = Fraction(1)
    if x.poly(one) == 0 and x.interval.contains(one):
        return Comparison.EQUAL
    if x.hi < one:
        return Comparison.LESS
    if x.lo > one:
        return Comparison.GREATER
    # Exactly one root inside; 1 is not it, so the sign at 1 decides the side.
    return Comparison.LESS if x.poly.sign_at(one) != x.poly.sign_at(x.lo) else Comparison.GREATER


def horner_interval(f: IntPolynomial, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """An enclosure of f over [lo, hi] by interval Horner evaluation."""
    if f.is_zero():
        return Fraction(0), Fraction(0)
    a = b = Fraction(f.leading)
    for c in reversed(f.coeffs[:-1]):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def sign_at(x: AlgebraicReal, g: IntPolynomial) -> int:
    """Exact sign of g evaluated at the algebraic real x."""
    if g.is_zero():
        return 0
    if g.degree == 0:
        return _sign(g.leading)
    h = gcd(x.poly, g)
    if h.degree >= 1 and count_roots(h, x.lo, x.hi) > 0:
        return 0
    steps = bisection_steps(x)
    cur = x
    while True:
        a, b = horner_interval(g, cur.lo, cur.hi)
        if a > 0:
            return 1
        if b < 0:
            return -1
        cur = next(steps)


# ---------------------------------------------------------------------------
# resultants


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix for ascending coefficient lists with formal degrees len-1."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    fd, gd = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix."""
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree == 0 and g.degree == 0:
        return 1
    return _bareiss_det(sylvester_matrix(f.coeffs, g.coeffs))


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Newton interpolation returning ascending coefficients."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * n
        for k in range(n - 1):
            new[k + 1] += poly[k]
        for k in range(n):
            new[k] -= xs[i] * poly[k]
        new[0] += coef[i]
        poly = new
    return poly


def pair_product_polynomial(f: IntPolynomial) -> IntPolynomial:
    """Primitive polynomial whose roots are all products r_i * r_j of roots of f.

    Computed as Res_x(f(x), x^d f(y/x)) by evaluation at d^2 + 1 integer points
    and interpolation. Requires f(0) != 0.
    """
    if f.degree < 1 or f.coeffs[0] == 0:
        raise PolynomialError("pair-product polynomial needs deg >= 1 and f(0) != 0")
    d = f.degree
    xs = list(range(d * d + 1))
    ys = []
    for y in xs:
        # x^d f(y/x) = sum a_i y^i x^(d-i): ascending in x has a_{d-k} y^{d-k} at x^k.
        h = [f.coeffs[d - k] * y ** (d - k) for k in range(d + 1)]
        ys.append(_bareiss_det(sylvester_matrix(f.coeffs, h)))
    coeffs = _interpolate(xs, ys)
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("interpolated resultant is not integral")
    return normalize_primitive(IntPolynomial(tuple(int(c) for c in coeffs)))[2]


# ---------------------------------------------------------------------------
# weak Perron decision


@dataclass(frozen=True)
class WeakPerronVerdict:
    is_weak_perron: bool
    margin_certificate: str
    method: str

    def __bool__(self) -> bool:
        return self.is_weak_perron


def _cubic_fast_path(x: AlgebraicReal) -> Optional[WeakPerronVerdict]:
    f = x.poly
    if f.degree != 3 or not f.is_monic():
        return None
    c0, c1, c2, _ = f.coeffs
    if c0 >= 0:
        return None
    a, b, c = abs(c2), abs(c1), -c0
    if c2 < 0 and c1 > 0:
        # x^3 - a x^2 + b x - c: conjugates form a complex pair iff alpha is the
        # unique positive root; then |beta|^2 = c/alpha.
        if count_positive_roots(f).count != 1:
            return None
        ok = b**3 <= a**3 * c
        return WeakPerronVerdict(ok, f"b^3={b**3} {'<=' if ok else '>'} a^3 c={a**3 * c}", "cubic:-+-")
    if c2 > 0 and c1 < 0 and a * b > c:
        # x^3 + a x^2 - b x - c: f(sqrt b) = f(-sqrt b) = ab - c > 0 puts alpha
        # below sqrt b and a negative conjugate below -sqrt b.
        return WeakPerronVerdict(False, f"f(+-sqrt(b)) = ab - c = {a * b - c} > 0", "cubic:+--")
    return None


def is_weak_perron(x: AlgebraicReal, method: str = "auto") -> WeakPerronVerdict:
    """Decide whether every other root beta of x.poly satisfies |beta| <= x.

    ``method`` is ``"auto"`` (cubic coefficient tests when they apply),
    ``"general"`` (pair-product polynomial) or ``"cubic"`` (fast path only; raises
    when it does not apply).
    """
    if method not in ("auto", "general", "cubic"):
        raise ValueError(f"unknown method {method!r}")
    if x.poly.degree == 1:
        return WeakPerronVerdict(True, "degree 1: no other conjugates", "trivial")
    if method in ("auto", "cubic"):
        verdict = _cubic_fast_path(x)
        if verdict is not None:
            return verdict
        if method == "cubic":
            raise ValueError(f"cubic fast path does not apply to {x.poly}")
    return _weak_perron_general(x)


def _weak_perron_general(x: AlgebraicReal) -> WeakPerronVerdict:
    # |beta|^2 = beta * conj(beta) is a positive root of the pair-product
    # polynomial, and so is alpha^2; every root there has modulus at most
    # max|beta|^2. Weak Perron <=> no real root of it exceeds alpha^2.
    _, f = x.poly.strip_zero_roots()
    g = squarefree_part(pair_product_polynomial(f))
    chain = sturm_chain(g)
    cur = _ensure_positive(x)
    steps = bisection_steps(cur)
    while True:
        lo2, hi2 = cur.lo**2, cur.hi**2
        if g(lo2) != 0 and g(hi2) != 0 and count_roots(g, lo2, hi2, chain) == 1:
            above = count_roots(g, hi2, None, chain)
            return WeakPerronVerdict(
                above == 0,
                f"alpha^2 isolated in ({lo2}, {hi2}); pair-product polynomial of degree "
                f"{g.degree} has {above} real roots above",
                "general",
            )
        cur = next(steps)


__all__ = [
    "AlgebraicReal",
    "Comparison",
    "PositiveRootCount",
    "RationalInterval",
    "RootCountError",
    "WeakPerronVerdict",
    "bisection_steps",
    "cauchy_bound",
    "compare_with_one",
    "count_positive_roots",
    "count_positive_roots_with_multiplicity",
    "count_roots",
    "horner_interval",
    "is_weak_perron",
    "isolate_real_roots",
    "pair_product_polynomial",
    "positive_roots",
    "refine",
    "resultant",
    "sign_at",
    "sturm_chain",
    "unique_positive_root",
    "variations_at",
]
