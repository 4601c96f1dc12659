"""
Exact univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored in ascending order of degree, so ``IntPolynomial((-8, 5, -3, 1))``
is x^3 - 3x^2 + 5x - 8. Every text format (canonical comma form, human form) uses the
descending convention and is converted at the boundary.

Rational arithmetic, where it is needed internally (remainder sequences, gcds), uses
:class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class PolynomialError(ValueError):
    """Base class for rejected polynomial inputs."""


class ZeroPolynomialError(PolynomialError):
    """Raised when an operation needs a nonzero polynomial."""


class NonMonicDivisorError(PolynomialError):
    """Raised by :func:`divrem` when the divisor is not monic."""


class ParseError(PolynomialError):
    """Raised when polynomial text cannot be parsed."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """
    A polynomial over the integers, dense, constant term first.

    >>> IntPolynomial((-2, 0, 1))
    IntPolynomial('x^2-2')
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", _trim(coeffs))

    # construction ---------------------------------------------------------

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntPolynomial:
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (coeff,))

    @classmethod
    def constant(cls, value: int) -> IntPolynomial:
        return cls((value,))

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """Parse either the canonical comma form or the human form."""
        stripped = text.strip()
        if "x" in stripped.lower():
            return parse_human(stripped)
        return parse_canonical(stripped)

    # basic queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coeffs) if c)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    # evaluation -----------------------------------------------------------

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Number) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def eval_fraction(self, p: int, q: int) -> int:
        """q^deg * f(p/q), computed in integers."""
        n = self.degree
        return sum(c * p**i * q ** (n - i) for i, c in enumerate(self.coeffs))

    # arithmetic -----------------------------------------------------------

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> IntPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other) -> IntPolynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> IntPolynomial:
        return (-self) + other

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def reciprocal(self) -> IntPolynomial:
        """x^deg * f(1/x); the reversal of the coefficient sequence."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def strip_zero_roots(self) -> tuple[int, IntPolynomial]:
        """Return (k, g) with f = x^k * g and g(0) != 0."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k, IntPolynomial(self.coeffs[k:])

    # text -----------------------------------------------------------------

    def to_canonical(self) -> str:
        if self.is_zero():
            return "0"
        return ",".join(str(c) for c in self.descending())

    def to_human(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_human()

    def __repr__(self) -> str:
        return f"IntPolynomial('{self.to_human()}')"


def _coerce(other):
    if isinstance(other, IntPolynomial):
        return other
    if isinstance(other, int) and not isinstance(other, bool):
        return IntPolynomial((other,))
    return NotImplemented


X = IntPolynomial((0, 1))


# ---------------------------------------------------------------------------
# text formats


def parse_canonical(text: str) -> IntPolynomial:
    """Parse descending comma-separated coefficients, e.g. ``1,-3,5,-8``."""
    try:
        coeffs = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"cannot parse coefficient list {text!r}") from exc
    return IntPolynomial.from_descending(coeffs)


_TERM = re.compile(r"([+-])?(\d+)?(?:\*?(x)(?:\^(\d+))?)?")


def parse_human(text: str) -> IntPolynomial:
    """Parse ``x^3-3x^2+5x-8`` style text (spaces and ``*`` optional)."""
    s = re.sub(r"\s+", "", text).lower()
    if not s:
        raise ParseError("empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character at position {pos} in {text!r}")
        sign, num, var, exp = m.groups()
        if sign is None and not first:
            raise ParseError(f"missing operator at position {pos} in {text!r}")
        if num is None and var is None:
            raise ParseError(f"dangling sign at position {pos} in {text!r}")
        if exp is not None and var is None:
            raise ParseError(f"exponent without variable in {text!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        deg = 0 if var is None else (int(exp) if exp is not None else 1)
        coeffs[deg] = coeffs.get(deg, 0) + c
        pos = m.end()
        first = False
    top = max(coeffs)
    return IntPolynomial(tuple(coeffs.get(i, 0) for i in range(top + 1)))


# ---------------------------------------------------------------------------
# syntactic predicates


@dataclass(frozen=True)
class MinimalPair:
    """The split f = positive_part - negative_part with disjoint supports."""

    positive_part: IntPolynomial
    negative_part: IntPolynomial

    def reconstruct(self) -> IntPolynomial:
        return self.positive_part - self.negative_part


def normalize_primitive(f: IntPolynomial) -> tuple[int, int, IntPolynomial]:
    """Return (content, sign, primitive) with sign*content*primitive == f."""
    if f.is_zero():
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    content = f.content()
    sign = 1 if f.leading > 0 else -1
    primitive = IntPolynomial(tuple(sign * c // content for c in f.coeffs))
    return content, sign, primitive


def split_minimal_pair(f: IntPolynomial) -> MinimalPair:
    pos = IntPolynomial(tuple(c if c > 0 else 0 for c in f.coeffs))
    neg = IntPolynomial(tuple(-c if c < 0 else 0 for c in f.coeffs))
    return MinimalPair(pos, neg)


def is_negative_tail(f: IntPolynomial) -> bool:
    """Monic with every non-leading coefficient <= 0."""
    return f.is_monic() and all(c <= 0 for c in f.coeffs[:-1])


def sign_variations(f: IntPolynomial) -> int:
    """Sign changes in the coefficient sequence, zeros skipped."""
    signs = [c > 0 for c in f.coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# ---------------------------------------------------------------------------
# division


def divrem(f: IntPolynomial, g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Division by a monic polynomial; stays in the integers."""
    if g.is_zero():
        raise ZeroPolynomialError("division by the zero polynomial")
    if not g.is_monic():
        raise NonMonicDivisorError(f"divisor {g} is not monic")
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) - 1 < dg:
        return IntPolynomial(()), f
    quot = [0] * (len(rem) - dg)
    gc = g.coeffs
    for k in range(len(rem) - 1, dg - 1, -1):
        q = rem[k]
        if q:
            quot[k - dg] = q
            for j in range(dg + 1):
                rem[k - dg + j] -= q * gc[j]
    return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:dg]))


def _qdivrem(f: Sequence[Fraction], g: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Division over the rationals on trimmed ascending coefficient lists."""
    rem = [Fraction(c) for c in f]
    dg = len(g) - 1
    lead = Fraction(g[-1])
    if len(rem) - 1 < dg:
        return [], _ftrim(rem)
    quot = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        q = rem[k] / lead
        if q:
            quot[k - dg] = q
            for j in range(dg + 1):
                rem[k - dg + j] -= q * g[j]
    return _ftrim(quot), _ftrim(rem[:dg])


def _ftrim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def primitive_from_rational(coeffs: Sequence[Number], keep_sign: bool = True) -> IntPolynomial:
    """Scale a rational polynomial by a positive constant into a primitive integer one.

    With ``keep_sign=False`` the leading coefficient is additionally made positive.
    """
    coeffs = [Fraction(c) for c in coeffs]
    if not any(coeffs):
        return IntPolynomial(())
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    out = IntPolynomial(tuple(c // g for c in ints))
    if not keep_sign and out.leading < 0:
        out = -out
    return out


def rational_remainder(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Remainder of f by g over Q, scaled by a positive constant into a primitive integer polynomial."""
    _, r = _qdivrem(f.coeffs, g.coeffs)
    return primitive_from_rational(r)


def exact_quotient(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """f / g when g divides f over Q, returned as the primitive part with positive leading coefficient."""
    q, r = _qdivrem(f.coeffs, g.coeffs)
    if r:
        raise PolynomialError(f"{g} does not divide {f}")
    return primitive_from_rational(q, keep_sign=False)


def gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (zero if both are zero)."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, rational_remainder(a, b)
    if a.is_zero():
        return a
    return normalize_primitive(a)[2]


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """Primitive square-free part with positive leading coefficient."""
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has no square-free part")
    prim = normalize_primitive(f)[2]
    if prim.degree <= 0:
        return prim
    g = gcd(prim, prim.derivative())
    if g.degree == 0:
        return prim
    return exact_quotient(prim, g)


def is_squarefree(f: IntPolynomial) -> bool:
    return f.degree <= 0 or gcd(f, f.derivative()).degree == 0


# ---------------------------------------------------------------------------
# rational roots and irreducibility screening


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_root_screen(f: IntPolynomial) -> list[Fraction]:
    """All rational roots of f, ascending, by the rational root test."""
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has every number as a root")
    if f.coeffs[0] == 0:
        raise PolynomialError("factor out zero roots before screening")
    if f.degree == 0:
        return []
    roots = set()
    for p in _divisors(f.coeffs[0]):
        for q in _divisors(f.leading):
            if math.gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                if f.eval_fraction(sp, q) == 0:
                    roots.add(Fraction(sp, q))
    return sorted(roots)


IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
ASSUMED = "assumed, not verified"


def irreducibility_status(f: IntPolynomial) -> str:
    """Decide irreducibility over Q for degree <= 3; screen only for higher degree."""
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial")
    if f.degree <= 0:
        return REDUCIBLE
    if f.degree == 1:
        return IRREDUCIBLE
    k, g = f.strip_zero_roots()
    if k:
        return REDUCIBLE
    if rational_root_screen(g):
        return REDUCIBLE
    if f.degree <= 3:
        return IRREDUCIBLE
    if not is_squarefree(f):
        return REDUCIBLE
    return ASSUMED
