"""
Exact two-phase simplex over the rationals.

Solves ``optimize c.x  s.t.  A x <= b, x >= 0`` with :class:`fractions.Fraction`
arithmetic and Bland's rule, so results are exact and cycling cannot occur. Sized
for the tail search, where A has only as many rows as the degree of the polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
OPTIMAL = "optimal"


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int], ncols: int):
        self.rows = rows
        self.basis = basis
        self.ncols = ncols

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        p = row[c]
        if p != 1:
            self.rows[r] = row = [v / p for v in row]
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[c]
                if f:
                    self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = c

    def run(self, cost: Sequence[Fraction], allowed: int) -> str:
        """Maximize cost over columns [0, allowed); cost has length ncols."""
        while True:
            reduced = self._reduced(cost)
            enter = next((j for j in range(allowed) if reduced[j] > 0), None)
            if enter is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], enter)

    def _reduced(self, cost: Sequence[Fraction]) -> list[Fraction]:
        red = list(cost[: self.ncols])
        for i, row in enumerate(self.rows):
            cb = cost[self.basis[i]]
            if cb:
                for j in range(self.ncols):
                    if row[j]:
                        red[j] -= cb * row[j]
        return red

    def value(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[self.basis[i]] * row[-1] for i, row in enumerate(self.rows)), Fraction(0))

    def solution(self, nvars: int) -> list[Fraction]:
        x = [Fraction(0)] * nvars
        for i, b in enumerate(self.basis):
            if b < nvars:
                x[b] = self.rows[i][-1]
        return x


def _phase_one(A: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[_Tableau]:
    m = len(A)
    k = len(A[0]) if m else 0
    # Columns: x (k), slacks (m), artificials (one per negative rhs row).
    neg = [i for i in range(m) if b[i] < 0]
    ncols = k + m + len(neg)
    rows = []
    basis = []
    for i in range(m):
        sgn = -1 if b[i] < 0 else 1
        row = [Fraction(sgn * a) for a in A[i]]
        row += [Fraction(sgn if j == i else 0) for j in range(m)]
        row += [Fraction(1 if (b[i] < 0 and neg.index(i) == t) else 0) for t in range(len(neg))]
        row.append(Fraction(sgn * b[i]))
        rows.append(row)
        basis.append(k + m + neg.index(i) if b[i] < 0 else k + i)
    tab = _Tableau(rows, basis, ncols)
    if neg:
        cost = [Fraction(0)] * (k + m) + [Fraction(-1)] * len(neg)
        tab.run(cost, ncols)
        if tab.value(cost) < 0:
            return None
        # Drive remaining (zero-valued) artificials out of the basis.
        for i in range(len(tab.rows) - 1, -1, -1):
            if tab.basis[i] >= k + m:
                col = next((j for j in range(k + m) if tab.rows[i][j] != 0), None)
                if col is None:
                    del tab.rows[i]
                    del tab.basis[i]
                else:
                    tab.pivot(i, col)
        tab.rows = [row[: k + m] + [row[-1]] for row in tab.rows]
    tab.ncols = k + m
    return tab


def feasible(A: Sequence[Sequence[int]], b: Sequence[int]) -> bool:
    """Whether {x >= 0 : A x <= b} is nonempty."""
    if not A or not A[0]:
        return all(v >= 0 for v in b)
    return _phase_one(A, b) is not None


def optimize(A: Sequence[Sequence[int]], b: Sequence[int], c: Sequence[int],
             maximize: bool = True) -> tuple[str, Optional[Fraction]]:
    """Return (status, optimal value) for max (or min) c.x over {x >= 0 : A x <= b}."""
    k = len(c)
    tab = _phase_one(A, b)
    if tab is None:
        return INFEASIBLE, None
    sign = 1 if maximize else -1
    cost = [Fraction(sign * v) for v in c] + [Fraction(0)] * (tab.ncols - k)
    status = tab.run(cost, tab.ncols)
    if status == UNBOUNDED:
        return UNBOUNDED, None
    return OPTIMAL, sign * tab.value(cost)


def variable_range(A: Sequence[Sequence[int]], b: Sequence[int],
                   index: int) -> Optional[tuple[Fraction, Optional[Fraction]]]:
    """Range [min, max] of x[index] over {x >= 0 : A x <= b}; None if empty, max None if unbounded."""
    k = len(A[0])
    tab = _phase_one(A, b)
    if tab is None:
        return None
    c = [0] * k
    c[index] = 1
    bounds = []
    for sign in (-1, 1):
        t = _Tableau([row[:] for row in tab.rows], tab.basis[:], tab.ncols)
        cost = [Fraction(sign * v) for v in c] + [Fraction(0)] * (t.ncols - k)
        status = t.run(cost, t.ncols)
        bounds.append(None if status == UNBOUNDED else sign * t.value(cost))
    return bounds[0], bounds[1]
