"""Sparse chains with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .scomplex import AffineSimplex, ComplexError, SimplicialComplex, face

Rational = Fraction


class Chain:
    """A finitely supported map from ``dim``-simplices to rationals.

    Zero coefficients are never stored, so two chains are equal exactly
    when their term dictionaries are equal. Instances are immutable.
    """

    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[AffineSimplex, object] | Iterable = ()):
        if dim < 0:
            raise ValueError("chain dimension must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[AffineSimplex, Fraction] = {}
        for t, x in items:
            t = tuple(t)
            if len(t) != dim + 1:
                raise ValueError(f"simplex {t} does not have dimension {dim}")
            acc[t] = acc.get(t, 0) + Fraction(x)
        self.dim = dim
        self._terms = {t: x for t, x in sorted(acc.items()) if x}
        self._hash = None

    @classmethod
    def _raw(cls, dim: int, terms: dict[AffineSimplex, Fraction]) -> Chain:
        # terms must already be pruned; skips validation
        c = cls.__new__(cls)
        c.dim = dim
        c._terms = dict(sorted(terms.items()))
        c._hash = None
        return c

    @classmethod
    def zero(cls, dim: int) -> Chain:
        return cls._raw(dim, {})

    @classmethod
    def simplex(cls, t: Sequence[int], coeff=1) -> Chain:
        return cls(len(t) - 1, {tuple(t): coeff})

    @property
    def terms(self) -> Mapping[AffineSimplex, Fraction]:
        return MappingProxyType(self._terms)

    def __getitem__(self, t: AffineSimplex) -> Fraction:
        return self._terms.get(tuple(t), Fraction(0))

    def __iter__(self) -> Iterator[tuple[AffineSimplex, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return f"Chain({self.dim}, 0)"
        body = " + ".join(f"{x}*{t}" for t, x in self._terms.items())
        return f"Chain({self.dim}, {body})"

    def __add__(self, other: Chain) -> Chain:
        return linear_combine([1, 1], [self, other])

    def __sub__(self, other: Chain) -> Chain:
        return linear_combine([1, -1], [self, other])

    def __neg__(self) -> Chain:
        return Chain._raw(self.dim, {t: -x for t, x in self._terms.items()})

    def __mul__(self, scalar) -> Chain:
        return linear_combine([scalar], [self])

    __rmul__ = __mul__

    def support(self) -> list[AffineSimplex]:
        return list(self._terms)

    def check_in(self, K: SimplicialComplex) -> Chain:
        """Raise unless every simplex of the chain lives on ``K``."""
        for t in self._terms:
            K.check_simplex(t)
        return self


def _accumulate(acc: dict, t, x) -> None:
    y = acc.get(t)
    if y is None:
        acc[t] = x
    else:
        y += x
        if y:
            acc[t] = y
        else:
            del acc[t]


def linear_combine(scalars: Sequence, chains: Sequence[Chain]) -> Chain:
    """Return ``sum(s * c)``; all chains must share one dimension."""
    if len(scalars) != len(chains):
        raise ValueError("need one scalar per chain")
    if not chains:
        raise ValueError("cannot infer the dimension of an empty combination")
    dim = chains[0].dim
    acc: dict[AffineSimplex, Fraction] = {}
    for s, c in zip(scalars, chains):
        if c.dim != dim:
            raise ValueError(f"dimension mismatch: {c.dim} != {dim}")
        s = Fraction(s)
        if not s:
            continue
        for t, x in c._terms.items():
            _accumulate(acc, t, s * x)
    return Chain._raw(dim, acc)


def face_map(c: Chain, j: int) -> Chain:
    """Linear extension of deleting the ``j``-th vertex."""
    if c.dim < 1:
        raise ValueError("face maps need a chain of dimension >= 1")
    if not 0 <= j <= c.dim:
        raise IndexError(f"face index {j} out of range for dimension {c.dim}")
    acc: dict[AffineSimplex, Fraction] = {}
    for t, x in c._terms.items():
        _accumulate(acc, t[:j] + t[j + 1:], x)
    return Chain._raw(c.dim - 1, acc)


def boundary(c: Chain) -> Chain:
    """Alternating sum of the face maps."""
    if c.dim < 1:
        raise ValueError("boundary needs a chain of dimension >= 1")
    acc: dict[AffineSimplex, Fraction] = {}
    for t, x in c._terms.items():
        for j in range(len(t)):
            _accumulate(acc, t[:j] + t[j + 1:], -x if j % 2 else x)
    return Chain._raw(c.dim - 1, acc)


def l1_norm(c: Chain) -> Fraction:
    return sum((abs(x) for x in c._terms.values()), Fraction(0))


def is_normalised(c: Chain) -> bool:
    """Membership in the Moore complex: killed by every face map but the last."""
    return all(not face_map(c, j) for j in range(c.dim))


def is_cycle(c: Chain) -> bool:
    return c.dim == 0 or not boundary(c)


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError(f"not a coefficient: {s!r}")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise ValueError(f"coefficients must be exact integers or 'p/q' strings, got {s!r}")


def chain_to_list(c: Chain) -> list[dict]:
    return [{"simplex": list(t), "coeff": format_fraction(x)} for t, x in c._terms.items()]


def chain_from_list(items, dim: int | None = None, K: SimplicialComplex | None = None) -> Chain:
    """Inverse of :func:`chain_to_list`; ``dim`` is required for an empty list."""
    if not isinstance(items, list):
        raise ComplexError("a chain is a list of {simplex, coeff} entries")
    terms = []
    for item in items:
        if not isinstance(item, dict) or "simplex" not in item or "coeff" not in item:
            raise ComplexError(f"malformed chain entry {item!r}")
        t = item["simplex"]
        if not isinstance(t, list) or not t or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in t
        ):
            raise ComplexError(f"malformed simplex {t!r}")
        try:
            x = parse_fraction(item["coeff"])
        except (ValueError, ZeroDivisionError) as exc:
            raise ComplexError(f"bad coefficient {item['coeff']!r}") from exc
        terms.append((tuple(t), x))
    dims = {len(t) - 1 for t, _ in terms}
    if dim is None:
        if len(dims) != 1:
            raise ComplexError("cannot determine a unique chain dimension")
        dim = dims.pop()
    elif dims - {dim}:
        raise ComplexError(f"chain has simplices outside dimension {dim}")
    c = Chain(dim, terms)
    if K is not None:
        c.check_in(K)
    return c
