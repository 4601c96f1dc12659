"""
Brute-force cross-checks for the tail search.

Nothing here shares code with the engine's search: residues come from plain long
division of x^i by m, and feasibility is tested over the whole box
``0 <= a_i <= ceil(upper(alpha)^(n-i))`` without pruning. The low coefficients
``a_0..a_{d-1}`` multiply unit residue vectors, so for each point of the outer box
there is exactly one candidate for them; it is read off and tested against its own
box instead of being looped over, which changes the running time but not the answer.
"""
from __future__ import annotations

import itertools
import math
import threading
from fractions import Fraction
from typing import Optional

import mpmath
import numpy as np

from .exactpoly import IntPolynomial, divrem, is_negative_tail
from .realroots import AlgebraicReal, refine, unique_positive_root

MAX_VOLUME = 10**9
INNER_BLOCK = 2_000_000
# mpmath's interval context keeps its precision globally.
_IV_LOCK = threading.Lock()


class OracleRefusal(RuntimeError):
    """The enumeration box is larger than the oracle is willing to walk."""

    def __init__(self, volume: int, limit: int):
        self.volume = volume
        self.limit = limit
        super().__init__(f"box volume {volume} exceeds the oracle limit {limit}")


def residue_by_division(m: IntPolynomial, i: int) -> tuple[int, ...]:
    _, r = divrem(IntPolynomial.monomial(i), m)
    return tuple(r.coeff(j) for j in range(m.degree))


def box_caps(alpha: AlgebraicReal, n: int) -> list[int]:
    hi = refine(alpha, Fraction(1, 2**32)).hi
    return [math.ceil(hi ** (n - i)) for i in range(n)]


def box_volume(alpha: AlgebraicReal, n: int, d: int) -> tuple[int, int]:
    """(volume actually enumerated, volume of the full box)."""
    caps = box_caps(alpha, n)
    outer = math.prod(c + 1 for c in caps[d:])
    return outer, outer * math.prod(c + 1 for c in caps[:d])


def brute_force_tail(m: IntPolynomial, alpha: AlgebraicReal, n: int,
                     max_volume: int = MAX_VOLUME) -> list[tuple[int, ...]]:
    """Every (a_0, ..., a_{n-1}) in the box with sum a_i x^i = x^n mod m.

    Returned in canonical order: ascending lexicographically from a_{n-1} down to a_0.
    """
    if not m.is_monic():
        raise ValueError("oracle needs a monic polynomial")
    if not alpha.lo > 1:
        alpha = refine(alpha, Fraction(1, 2**32))
        if not alpha.lo > 1:
            raise ValueError("oracle needs alpha > 1")
    d = m.degree
    if n < d:
        return []
    caps = box_caps(alpha, n)
    outer_volume = math.prod(c + 1 for c in caps[d:])
    if outer_volume > max_volume:
        raise OracleRefusal(outer_volume, max_volume)

    res = [residue_by_division(m, i) for i in range(n + 1)]
    target = res[n]
    free = list(range(d, n))
    # Vectorize over the lowest free coordinates, loop over the rest.
    inner: list[int] = []
    block = 1
    for i in free:
        if block * (caps[i] + 1) > INNER_BLOCK and inner:
            break
        inner.append(i)
        block *= caps[i] + 1
    outer = free[len(inner):]

    magnitude = max(abs(v) for v in target) + sum(
        caps[i] * max(abs(v) for v in res[i]) for i in free)
    dtype = np.int64 if magnitude < 2**62 else object

    axes = [np.arange(caps[i] + 1, dtype=dtype) for i in inner]
    grids = np.meshgrid(*axes, indexing="ij") if axes else []
    contrib = []
    for k in range(d):
        acc = np.zeros(grids[0].shape if grids else (), dtype=dtype)
        for g, i in zip(grids, inner):
            acc = acc + g * res[i][k]
        contrib.append(acc)
    low_caps = caps[:d]
    hits = []
    for combo in itertools.product(*(range(caps[i] + 1) for i in outer)):
        base = list(target)
        for i, v in zip(outer, combo):
            for k in range(d):
                base[k] -= v * res[i][k]
        if not inner:
            if all(0 <= base[k] <= low_caps[k] for k in range(d)):
                hits.append(tuple(base) + tuple(combo))
            continue
        ok = None
        for k in range(d):
            # 0 <= base - contrib <= cap  <=>  base - cap <= contrib <= base
            cond = (contrib[k] <= base[k]) & (contrib[k] >= base[k] - low_caps[k])
            ok = cond if ok is None else ok & cond
            if not ok.any():
                break
        else:
            for idx in zip(*np.nonzero(ok)):
                low = tuple(base[k] - int(contrib[k][idx]) for k in range(d))
                mid = tuple(int(grids[j][idx]) for j in range(len(inner)))
                hits.append(low + mid + tuple(combo))
    hits.sort(key=lambda t: t[::-1])
    return hits


def verify_witness(m: IntPolynomial, H: IntPolynomial) -> bool:
    """H is a monic negative-tail polynomial divisible by m."""
    if not is_negative_tail(H) or not m.is_monic():
        return False
    _, r = divrem(H, m)
    return r.is_zero()


def numeric_sanity(m: IntPolynomial, witness: IntPolynomial, digits: int = 20,
                   alpha: Optional[AlgebraicReal] = None) -> bool:
    """Outward-rounded interval evaluation of the witness at alpha must contain 0."""
    alpha = alpha if alpha is not None else unique_positive_root(m)
    narrow = refine(alpha, Fraction(1, 10**digits))
    iv = mpmath.iv
    with _IV_LOCK:
        saved = iv.dps
        iv.dps = digits + 10
        try:
            lo = iv.mpf(narrow.lo.numerator) / narrow.lo.denominator
            hi = iv.mpf(narrow.hi.numerator) / narrow.hi.denominator
            x = iv.mpf([lo.a, hi.b])
            acc = iv.mpf(0)
            for c in reversed(witness.coeffs):
                acc = acc * x + c
            return bool(acc.a <= 0 <= acc.b)
        finally:
            iv.dps = saved
