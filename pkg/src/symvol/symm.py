"""Signed averaging of simplices over all vertex permutations."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .chain import Chain
from .scomplex import AffineSimplex, Permutation

DEFAULT_DIM_CAP = 6


class DimensionCapError(ValueError):
    """The requested dimension exceeds the configured cap."""


def check_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_DIM_CAP if cap is None else cap
    if n > cap:
        raise DimensionCapError(
            f"dimension {n} exceeds the cap {cap} ((n+1)! = {factorial(n + 1)} terms per simplex)"
        )


@lru_cache(maxsize=None)
def _permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in itertools.permutations(range(n + 1)))


def enumerate_permutations(n: int, cap: int | None = None) -> list[Permutation]:
    """All permutations of ``{0, ..., n}`` in lexicographic order of images."""
    if n < 0:
        raise ValueError("n must be non-negative")
    check_cap(n, cap)
    return list(_permutations(n))


def cyclic_tau(j: int, n: int) -> Permutation:
    """The cycle ``(j j-1 ... 1 0)``: ``0 -> j`` and ``i -> i-1`` for ``1 <= i <= j``."""
    if not 0 <= j <= n:
        raise IndexError(f"tau index {j} out of range 0..{n}")
    return Permutation((j,) + tuple(range(j)) + tuple(range(j + 1, n + 1)))


@lru_cache(maxsize=65536)
def _symmetrise_simplex(t: AffineSimplex) -> tuple[tuple[AffineSimplex, Fraction], ...]:
    n = len(t) - 1
    acc: dict[AffineSimplex, int] = {}
    for pi in _permutations(n):
        s = tuple(t[i] for i in pi.images)
        acc[s] = acc.get(s, 0) + pi.sign
    scale = Fraction(1, factorial(n + 1))
    return tuple((s, k * scale) for s, k in sorted(acc.items()) if k)


def symmetrise_simplex(t: AffineSimplex, cap: int | None = None) -> Chain:
    check_cap(len(t) - 1, cap)
    return Chain._raw(len(t) - 1, dict(_symmetrise_simplex(tuple(t))))


def symmetrise(c: Chain, cap: int | None = None) -> Chain:
    """``sym(s) = 1/(n+1)! * sum_pi sgn(pi) * s o pi``, extended linearly."""
    check_cap(c.dim, cap)
    acc: dict[AffineSimplex, Fraction] = {}
    for t, x in c:
        for s, y in _symmetrise_simplex(t):
            z = acc.get(s, 0) + x * y
            if z:
                acc[s] = z
            else:
                del acc[s]
    return Chain._raw(c.dim, acc)
