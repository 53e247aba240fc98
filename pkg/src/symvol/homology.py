"""Cycle and boundary spaces of the tuple chain complex, by exact elimination.

Everything is computed over the rationals in the canonical bases
``basis(K, n)``. Pivots are chosen as the first non-zero row, so every
result (generators, witnesses, certificates) is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chain import Chain, boundary, is_cycle
from .linalg import Echelon, Vec
from .scomplex import AffineSimplex, SimplicialComplex, basis, basis_index


class NotACycleError(ValueError):
    """An operation that needs a cycle received a chain with non-zero boundary."""


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse matrix of the boundary from dimension ``n`` to ``n - 1``."""

    n: int
    rows: tuple[AffineSimplex, ...]  # basis(K, n - 1)
    cols: tuple[AffineSimplex, ...]  # basis(K, n)
    columns: tuple[dict[int, int], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * len(self.cols) for _ in self.rows]
        for j, col in enumerate(self.columns):
            for i, x in col.items():
                m[i][j] = Fraction(x)
        return m


@dataclass(frozen=True)
class SubspaceBasis:
    dim: int
    vectors: tuple[Chain, ...]

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class HomologyResult:
    """Outcome of :func:`homologous`.

    Exactly one of ``witness`` (a chain ``w`` with ``boundary(w) == a - b``)
    and ``certificate`` (a cochain vanishing on all boundaries but not on
    ``a - b``) is set.
    """

    witness: Chain | None
    certificate: dict[AffineSimplex, Fraction] | None = None

    @property
    def homologous(self) -> bool:
        return self.witness is not None

    def __bool__(self) -> bool:
        return self.homologous


def _boundary_column(t: AffineSimplex, index: dict[AffineSimplex, int]) -> dict[int, int]:
    col: dict[int, int] = {}
    for j in range(len(t)):
        i = index[t[:j] + t[j + 1:]]
        x = col.get(i, 0) + (-1 if j % 2 else 1)
        if x:
            col[i] = x
        else:
            del col[i]
    return col


@lru_cache(maxsize=None)
def boundary_matrix(K: SimplicialComplex, n: int) -> BoundaryMatrix:
    if n < 1:
        raise ValueError("boundary_matrix needs n >= 1")
    rows = tuple(basis(K, n - 1))
    cols = tuple(basis(K, n))
    index = basis_index(K, n - 1)
    return BoundaryMatrix(n, rows, cols, tuple(_boundary_column(t, index) for t in cols))


def chain_to_vec(c: Chain, K: SimplicialComplex) -> Vec:
    index = basis_index(K, c.dim)
    try:
        return {index[t]: x for t, x in c}
    except KeyError as exc:
        raise ValueError(f"simplex {exc.args[0]} is not on the complex") from None


def vec_to_chain(v: Vec, K: SimplicialComplex, n: int) -> Chain:
    b = basis(K, n)
    return Chain(n, {b[i]: x for i, x in v.items()})


@lru_cache(maxsize=None)
def _image_echelon(K: SimplicialComplex, n: int) -> Echelon:
    """RREF of the image of the boundary from ``n + 1`` into dimension ``n``."""
    e = Echelon(track=True)
    for j, col in enumerate(boundary_matrix(K, n + 1).columns):
        e.add({i: Fraction(x) for i, x in col.items()}, j)
    return e


@lru_cache(maxsize=None)
def _kernel(K: SimplicialComplex, n: int) -> tuple[Vec, ...]:
    if n == 0:
        return tuple({i: Fraction(1)} for i in range(len(basis(K, 0))))
    e = Echelon(track=True)
    out = []
    for j, col in enumerate(boundary_matrix(K, n).columns):
        rel = e.add({i: Fraction(x) for i, x in col.items()}, j)
        if rel is not None:
            out.append(dict(sorted(rel.items())))
    return tuple(out)


def cycle_space(K: SimplicialComplex, n: int) -> SubspaceBasis:
    """Kernel of the boundary on ``n``-chains; all chains when ``n == 0``."""
    return SubspaceBasis(n, tuple(vec_to_chain(v, K, n) for v in _kernel(K, n)))


def boundary_space(K: SimplicialComplex, n: int) -> SubspaceBasis:
    """Image of the boundary from ``(n + 1)``-chains, as an RREF basis."""
    e = _image_echelon(K, n)
    return SubspaceBasis(n, tuple(vec_to_chain(e.rows[p], K, n) for p in sorted(e.rows)))


def cocycle_basis(K: SimplicialComplex, n: int) -> list[Vec]:
    """Basis of the functionals on ``n``-chains that vanish on every boundary."""
    e = _image_echelon(K, n)
    return [dict(sorted(v.items())) for v in e.annihilator_basis(len(basis(K, n)))]


def betti(K: SimplicialComplex, n: int) -> int:
    dim_cycles = len(_kernel(K, n))
    return dim_cycles - _image_echelon(K, n).rank


@lru_cache(maxsize=None)
def _generators(K: SimplicialComplex, n: int) -> tuple[Chain, ...]:
    image = _image_echelon(K, n)
    quotient = Echelon()
    gens = []
    for z in _kernel(K, n):
        r, _ = image.reduce(z)
        if r and quotient.add(r) is None:
            gens.append(vec_to_chain(z, K, n))
    return tuple(gens)


def homology_generators(K: SimplicialComplex, n: int) -> list[Chain]:
    """Cycles whose classes form a basis of rational homology in dimension ``n``.

    They are the first kernel vectors (in elimination order) that are
    independent modulo boundaries.
    """
    return list(_generators(K, n))


def _relabel(K: SimplicialComplex) -> tuple[SimplicialComplex, list[int]]:
    used = sorted({v for f in K.faces for v in f})
    pos = {v: i for i, v in enumerate(used)}
    faces = frozenset(tuple(pos[v] for v in f) for f in K.faces)
    return SimplicialComplex(len(used), faces), used


def _map_chain(c: Chain, labels) -> Chain:
    return Chain._raw(c.dim, {tuple(labels[v] for v in t): x for t, x in c})


def _solve_boundary(d: Chain, K: SimplicialComplex) -> tuple[Chain | None, Vec]:
    combo, residual = _image_echelon(K, d.dim).solve(chain_to_vec(d, K))
    if combo is None:
        return None, residual
    cols = boundary_matrix(K, d.dim + 1).cols
    return Chain(d.dim + 1, {cols[j]: x for j, x in combo.items()}), residual


def homologous(a: Chain, b: Chain, K: SimplicialComplex) -> HomologyResult:
    """Decide whether the cycles ``a`` and ``b`` differ by a boundary on ``K``.

    The search first runs on the subcomplex spanned by the support of
    ``a - b`` (relabelled, so equal shapes share one elimination), and
    falls back to all of ``K``.
    """
    if a.dim != b.dim:
        raise ValueError("cannot compare cycles of different dimensions")
    for c in (a, b):
        c.check_in(K)
        if not is_cycle(c):
            raise NotACycleError("homologous() expects cycles")
    d = a - b
    if not d:
        return HomologyResult(Chain.zero(d.dim + 1))

    L, used = _relabel(K.closure(d.support()))
    inverse = {v: i for i, v in enumerate(used)}
    w, residual = _solve_boundary(_map_chain(d, inverse), L)
    if w is not None:
        return HomologyResult(_map_chain(w, used))
    if not (len(used) == K.num_vertices and L.faces == K.faces):
        w, residual = _solve_boundary(d, K)
        if w is not None:
            return HomologyResult(w)

    e = _image_echelon(K, d.dim)
    psi = e.annihilator_vector(min(residual))
    b_n = basis(K, d.dim)
    return HomologyResult(None, {b_n[i]: x for i, x in sorted(psi.items())})


def pair(cochain: dict[AffineSimplex, Fraction], c: Chain) -> Fraction:
    """Evaluate a cochain on a chain."""
    return sum((x * cochain.get(t, 0) for t, x in c), Fraction(0))


def check_witness(w: Chain, a: Chain, b: Chain) -> bool:
    return boundary(w) == a - b
