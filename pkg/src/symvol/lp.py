"""Exact rational simplex method with Bland's rule.

Problems have the form::

    minimise    objective . x
    subject to  rows[i] . x == rhs[i]
                x[j] >= 0  for j not in free

Free variables are pivoted into the basis by Gauss-Jordan elimination
before phase 1 and never leave it afterwards. The remaining rows go
through a textbook two-phase method on a sparse tableau. Bland's rule
(smallest eligible index enters, ties in the ratio test broken by the
smallest basic index) makes the run terminate and deterministic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import gmpy2

from .linalg import axpy

_mpq = gmpy2.mpq
_ZERO = _mpq(0)
_ONE = _mpq(1)


log = logging.getLogger(__name__)


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


class LPError(ArithmeticError):
    """Base class for solver failures."""


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass(frozen=True)
class LPInstance:
    objective: tuple[Fraction, ...]
    rows: tuple[Mapping[int, Fraction], ...]
    rhs: tuple[Fraction, ...]
    free: frozenset[int] = frozenset()

    def __post_init__(self):
        n = len(self.objective)
        if len(self.rows) != len(self.rhs):
            raise ValueError("one right-hand side per row is required")
        for row in self.rows:
            if any(not 0 <= j < n for j in row):
                raise ValueError("row refers to a variable outside the objective")
        if any(not 0 <= j < n for j in self.free):
            raise ValueError("free index out of range")

    @classmethod
    def build(cls, objective: Sequence, rows: Sequence[Mapping[int, object]], rhs: Sequence, free=()):
        return cls(
            tuple(Fraction(x) for x in objective),
            tuple({j: Fraction(x) for j, x in row.items() if x} for row in rows),
            tuple(Fraction(x) for x in rhs),
            frozenset(free),
        )

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        if any(x[j] < 0 for j in range(self.num_vars) if j not in self.free):
            return False
        return all(
            sum((a * x[j] for j, a in row.items()), Fraction(0)) == b
            for row, b in zip(self.rows, self.rhs)
        )

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * xj for c, xj in zip(self.objective, x) if c), Fraction(0))


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    basis: tuple[int, ...]
    pivots: int = field(default=0, compare=False)


class _Tableau:
    """Sparse rows ``x_basis[i] + sum_k rows[i][k] x_k == rhs[i]``."""

    def __init__(self, rows, rhs, basis, cost, z):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.cost = cost  # objective == z + sum cost[k] x_k over non-basic k
        self.z = z
        self.pivots = 0

    def pivot(self, r: int, j: int) -> None:
        row = self.rows[r]
        a = row[j]
        if a != 1:
            inv = 1 / a
            row = {k: v * inv for k, v in row.items()}
            self.rows[r] = row
            self.rhs[r] *= inv
        b = self.rhs[r]
        for i, other in enumerate(self.rows):
            if i != r:
                f = other.get(j)
                if f:
                    axpy(other, -f, row)
                    self.rhs[i] -= f * b
        f = self.cost.get(j)
        if f:
            axpy(self.cost, -f, row)
            self.z += f * b
        self.basis[r] = j
        self.pivots += 1

    def run(self, allowed) -> None:
        """Bland's rule until optimal; ``allowed(j)`` filters entering columns."""
        while True:
            entering = min(
                (k for k, v in self.cost.items() if v < 0 and allowed(k)), default=None
            )
            if entering is None:
                return
            best = None
            for i, row in enumerate(self.rows):
                a = row.get(entering)
                if a is not None and a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise Unbounded(f"column {entering} can grow without bound")
            self.pivot(best[1], entering)


def solve_lp(lp: LPInstance) -> LPSolution:
    n = lp.num_vars
    # arithmetic runs on gmpy2 rationals; results are converted back to Fraction
    rows = [{k: _mpq(v.numerator, v.denominator) for k, v in r.items()} for r in lp.rows]
    rhs = [_mpq(b.numerator, b.denominator) for b in lp.rhs]
    cost = {j: _mpq(c.numerator, c.denominator) for j, c in enumerate(lp.objective) if c}
    z = _ZERO
    pivots = 0

    # Gauss-Jordan on free columns; their rows are set aside afterwards.
    free_rows: dict[int, int] = {}  # row -> free basic variable
    for j in sorted(lp.free):
        r = next((i for i, row in enumerate(rows) if i not in free_rows and j in row), None)
        if r is None:
            continue
        inv = 1 / rows[r][j]
        rows[r] = {k: v * inv for k, v in rows[r].items()}
        rhs[r] *= inv
        prow, b = rows[r], rhs[r]
        for i, row in enumerate(rows):
            if i != r:
                f = row.get(j)
                if f:
                    axpy(row, -f, prow)
                    rhs[i] -= f * b
        f = cost.get(j)
        if f:
            axpy(cost, -f, prow)
            z += f * b
        free_rows[r] = j
        pivots += 1
    for j in lp.free:
        if j not in free_rows.values() and cost.get(j):
            raise Unbounded(f"free variable {j} does not affect any constraint")

    # Phase 1 on the remaining rows, artificial variables n, n+1, ...
    rest = [i for i in range(len(rows)) if i not in free_rows]
    t_rows, t_rhs = [], []
    for i in rest:
        row = {k: v for k, v in rows[i].items() if k not in lp.free}
        b = rhs[i]
        if b < 0:
            row = {k: -v for k, v in row.items()}
            b = -b
        t_rows.append(row)
        t_rhs.append(b)
    m = len(t_rows)
    art_cost: dict = {}
    for row in t_rows:
        axpy(art_cost, -_ONE, row)
    for i, row in enumerate(t_rows):
        row[n + i] = _ONE
    tab = _Tableau(t_rows, t_rhs, [n + i for i in range(m)], art_cost, sum(t_rhs, _ZERO))
    tab.run(lambda k: True)
    phase1 = tab.pivots
    if tab.z != 0:
        raise Infeasible(f"phase 1 optimum {tab.z} > 0")

    # Drive zero-level artificials out of the basis, dropping redundant rows.
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= n:
            k = min((k for k in tab.rows[i] if k < n), default=None)
            if k is None:
                del tab.rows[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, k)
        i += 1
    for row in tab.rows:
        for k in [k for k in row if k >= n]:
            del row[k]

    # Phase 2 with the objective reduced by the free eliminations.
    tab.cost = {k: v for k, v in cost.items() if k not in lp.free}
    tab.z = z
    for i, j in enumerate(tab.basis):
        f = tab.cost.get(j)
        if f:
            axpy(tab.cost, -f, tab.rows[i])
            tab.z += f * tab.rhs[i]
    tab.run(lambda k: k < n)

    xq = [_ZERO] * n
    for i, j in enumerate(tab.basis):
        xq[j] = tab.rhs[i]
    for r, j in free_rows.items():
        xq[j] = rhs[r] - sum(
            (v * xq[k] for k, v in rows[r].items() if k != j and k not in lp.free), _ZERO
        )
    x = [_to_fraction(v) for v in xq]
    value = lp.value(x)
    if value != tab.z:
        raise AssertionError(f"tableau value {tab.z} disagrees with recomputed {value}")
    log.debug(
        "LP %d vars x %d rows: %d free, %d phase-1, %d phase-2 pivots",
        n, len(lp.rows), pivots, phase1, tab.pivots - phase1,
    )
    basis = tuple(sorted(list(tab.basis) + list(free_rows.values())))
    return LPSolution(value, tuple(x), basis, pivots + tab.pivots)
