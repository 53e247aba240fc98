"""Finite simplicial complexes and ordered vertex tuples on them.

An *affine simplex* of dimension ``n`` on a complex ``K`` is a tuple
``(v_0, ..., v_n)`` of vertices whose underlying set is a face of ``K``.
Repeated vertices are allowed, so degenerate simplices are ordinary basis
elements. Tuples are plain Python tuples of ints.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import yaml

AffineSimplex = tuple[int, ...]


class ComplexError(ValueError):
    """Raised for malformed complex documents or invalid simplices."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., n}`` given by its images ``pi(0), ..., pi(n)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images!r} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(size)))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    @cached_property
    def sign(self) -> int:
        # parity via cycle decomposition: sign = (-1)^(size - #cycles)
        seen = [False] * len(self.images)
        cycles = 0
        for start in range(len(self.images)):
            if not seen[start]:
                cycles += 1
                i = start
                while not seen[i]:
                    seen[i] = True
                    i = self.images[i]
        return -1 if (len(self.images) - cycles) % 2 else 1

    def compose(self, other: Permutation) -> Permutation:
        """Return ``self o other``, i.e. ``i -> self(other(i))``."""
        if len(other) != len(self):
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.images[j] for j in other.images))

    __mul__ = compose

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite abstract simplicial complex on vertices ``0 .. num_vertices-1``.

    ``faces`` holds every non-empty face as a sorted tuple, so membership of
    the support of a vertex tuple is a set lookup.
    """

    num_vertices: int
    faces: frozenset[tuple[int, ...]]
    name: str = field(default="", compare=False)

    @classmethod
    def from_facets(
        cls, num_vertices: int, facets: Iterable[Sequence[int]], name: str = ""
    ) -> SimplicialComplex:
        if isinstance(num_vertices, bool) or not isinstance(num_vertices, int) or num_vertices < 0:
            raise ComplexError(f"vertex count must be a non-negative integer, got {num_vertices!r}")
        faces: set[tuple[int, ...]] = {(v,) for v in range(num_vertices)}
        for facet in facets:
            verts = list(facet)
            if not verts:
                raise ComplexError("empty facet")
            for v in verts:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise ComplexError(f"vertex {v!r} is not an integer")
                if not 0 <= v < num_vertices:
                    raise ComplexError(
                        f"facet {verts} references vertex {v} outside 0..{num_vertices - 1}"
                    )
            support = tuple(sorted(set(verts)))
            for k in range(1, len(support) + 1):
                faces.update(itertools.combinations(support, k))
        return cls(num_vertices, frozenset(faces), name)

    @property
    def vertices(self) -> list[int]:
        return list(range(self.num_vertices))

    @cached_property
    def dimension(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    @cached_property
    def facets(self) -> list[tuple[int, ...]]:
        """Maximal faces, in canonical order."""
        maximal = [
            f for f in self.faces
            if not any(len(g) > len(f) and set(f) <= set(g) for g in self.faces)
        ]
        return sorted(maximal, key=lambda f: (len(f), f))

    def faces_of_dim(self, k: int) -> list[tuple[int, ...]]:
        return sorted(f for f in self.faces if len(f) == k + 1)

    def is_face(self, verts: Iterable[int]) -> bool:
        return tuple(sorted(set(verts))) in self.faces

    def check_simplex(self, t: AffineSimplex) -> AffineSimplex:
        t = tuple(t)
        if not t:
            raise ComplexError("a simplex needs at least one vertex")
        if not self.is_face(t):
            raise ComplexError(f"support of {t} is not a face of the complex")
        return t

    def closure(self, simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Smallest subcomplex (on the same vertex labels) containing the supports."""
        faces: set[tuple[int, ...]] = set()
        for t in simplices:
            support = tuple(sorted(set(t)))
            if support not in self.faces:
                raise ComplexError(f"support {support} is not a face of the complex")
            for k in range(1, len(support) + 1):
                faces.update(itertools.combinations(support, k))
        return SimplicialComplex(self.num_vertices, frozenset(faces), self.name)

    def to_document(self) -> dict:
        return {
            "name": self.name,
            "vertices": self.num_vertices,
            "facets": [list(f) for f in self.facets],
        }


def load_complex(document) -> SimplicialComplex:
    """Build a complex from a parsed document, a YAML/JSON string, or a file path.

    The document has keys ``vertices`` (count), ``facets`` (list of vertex
    lists) and an optional ``name``.
    """
    if isinstance(document, Path):
        document = document.read_text()
    if isinstance(document, str):
        try:
            document = yaml.safe_load(document)
        except yaml.YAMLError as exc:
            raise ComplexError(f"cannot parse complex document: {exc}") from exc
    if not isinstance(document, dict):
        raise ComplexError("complex document must be a mapping")
    missing = {"vertices", "facets"} - document.keys()
    if missing:
        raise ComplexError(f"complex document is missing {sorted(missing)}")
    facets = document["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ComplexError("'facets' must be a list of vertex lists")
    name = document.get("name", "")
    if not isinstance(name, str):
        raise ComplexError("'name' must be a string")
    return SimplicialComplex.from_facets(document["vertices"], facets, name)


def dump_complex(K: SimplicialComplex) -> str:
    return json.dumps(K.to_document())


def basis(K: SimplicialComplex, n: int) -> list[AffineSimplex]:
    """All ``(n+1)``-tuples of vertices whose support is a face, lexicographically."""
    return list(_basis(K, n))


@lru_cache(maxsize=None)
def _basis(K: SimplicialComplex, n: int) -> tuple[AffineSimplex, ...]:
    if n < 0:
        raise ValueError("dimension must be non-negative")
    out: set[AffineSimplex] = set()
    # a tuple has at most n+1 distinct vertices, so larger faces are skipped
    for f in K.faces:
        if len(f) <= n + 1:
            out.update(t for t in itertools.product(f, repeat=n + 1) if len(set(t)) == len(f))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def basis_index(K: SimplicialComplex, n: int) -> dict[AffineSimplex, int]:
    """Position of each tuple in ``basis(K, n)``. Shared; do not mutate."""
    return {t: i for i, t in enumerate(_basis(K, n))}


def face(t: AffineSimplex, j: int) -> AffineSimplex:
    """Delete the ``j``-th vertex."""
    if len(t) < 2:
        raise ValueError("a 0-simplex has no faces")
    if not 0 <= j < len(t):
        raise IndexError(f"face index {j} out of range for a {len(t) - 1}-simplex")
    return t[:j] + t[j + 1:]


def vertex_permute(t: AffineSimplex, pi: Permutation) -> AffineSimplex:
    """Precompose with the vertex permutation: ``(v_pi(0), ..., v_pi(n))``."""
    if len(pi) != len(t):
        raise ValueError(
            f"permutation of size {len(pi)} cannot act on a {len(t) - 1}-simplex"
        )
    return tuple(t[i] for i in pi.images)
