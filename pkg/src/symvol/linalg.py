"""Sparse Gauss-Jordan elimination over the rationals.

Vectors are ``dict[int, Fraction]`` keyed by row index with no zero
entries. :class:`Echelon` keeps the span of the vectors added so far in
reduced row echelon form: each stored vector has a pivot row holding a 1,
and no stored vector is non-zero on another vector's pivot row.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable

Vec = dict


def axpy(y: Vec, a, x: Vec) -> None:
    """In place ``y += a * x``, pruning zeros."""
    for k, v in x.items():
        w = y.get(k)
        if w is None:
            y[k] = a * v
        else:
            w += a * v
            if w:
                y[k] = w
            else:
                del y[k]


class Echelon:
    """Incrementally built RREF basis of a column space.

    With ``track=True`` every stored vector remembers how it was built
    from the tagged input vectors, which lets :meth:`solve` return a
    preimage and :meth:`add` return kernel relations.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: dict[int, Vec] = {}  # pivot row -> vector
        self.combos: dict[int, Vec] = {}  # pivot row -> {tag: coeff}
        # row -> pivots whose vector is non-zero there, for back elimination
        self._occ: dict[int, set[int]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vec, combo: Vec | None = None) -> tuple[Vec, Vec | None]:
        """Return ``(residual, combo)`` with ``residual = vec - span part``.

        The residual vanishes on all pivot rows. ``combo`` accumulates the
        negated tag coefficients that were subtracted.
        """
        r = dict(vec)
        for p in [p for p in r if p in self.rows]:
            a = r.get(p)
            if not a:
                continue
            axpy(r, -a, self.rows[p])
            if combo is not None:
                axpy(combo, -a, self.combos[p])
        return r, combo

    def add(self, vec: Vec, tag: Hashable | None = None) -> Vec | None:
        """Insert ``vec``. Returns ``None`` if it was independent.

        If it was dependent and tracking is on, returns the relation
        ``{tag: coeff}`` with ``sum coeff * input[tag] == 0`` and
        coefficient 1 on ``tag``; without tracking returns ``{}``.
        """
        combo = {tag: Fraction(1)} if self.track else None
        r, combo = self.reduce(vec, combo)
        if not r:
            return combo if self.track else {}
        p = min(r)
        inv = 1 / r[p]
        if inv != 1:
            r = {k: v * inv for k, v in r.items()}
            if combo is not None:
                combo = {k: v * inv for k, v in combo.items()}
        occ = self._occ
        for q in list(occ.get(p, ())):
            v = self.rows[q]
            a = v[p]
            # r is zero on every pivot row, so only rows of r change in v
            for k, x in r.items():
                w = v.get(k)
                if w is None:
                    v[k] = -a * x
                    occ.setdefault(k, set()).add(q)
                else:
                    w -= a * x
                    if w:
                        v[k] = w
                    else:
                        del v[k]
                        occ[k].discard(q)
            if combo is not None:
                axpy(self.combos[q], -a, combo)
        self.rows[p] = r
        if combo is not None:
            self.combos[p] = combo
        for k in r:
            if k != p:
                occ.setdefault(k, set()).add(p)
        return None

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)[0]

    def solve(self, vec: Vec) -> tuple[Vec | None, Vec]:
        """Express ``vec`` in the tagged inputs.

        Returns ``(combo, residual)``; ``combo`` is ``None`` when ``vec`` is
        not in the span, and then ``residual`` is a non-zero vector that
        vanishes on every pivot row.
        """
        if not self.track:
            raise RuntimeError("solve needs an Echelon built with track=True")
        r, neg = self.reduce(vec, {})
        if r:
            return None, r
        return {k: -v for k, v in neg.items()}, r

    def annihilator_vector(self, k: int) -> Vec:
        """The functional ``x -> x[k] - sum_p rows[p][k] * x[p]`` for a non-pivot ``k``.

        It vanishes on the whole span.
        """
        if k in self.rows:
            raise ValueError(f"row {k} is a pivot row")
        psi = {k: Fraction(1)}
        for p in self._occ.get(k, ()):
            a = self.rows[p].get(k)
            if a:
                psi[p] = -a
        return psi

    def annihilator_basis(self, num_rows: int) -> list[Vec]:
        return [self.annihilator_vector(k) for k in range(num_rows) if k not in self.rows]


def rank_of(columns: Iterable[Vec]) -> int:
    e = Echelon()
    for c in columns:
        e.add(c)
    return e.rank
