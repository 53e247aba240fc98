"""Bundled example complexes."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .scomplex import SimplicialComplex, load_complex

NAMES = ("circle", "sphere", "tetrahedron", "torus", "rp2", "wedge")


def path(name: str):
    if name not in NAMES:
        raise KeyError(f"unknown corpus complex {name!r}; known: {', '.join(NAMES)}")
    return resources.files(__package__).joinpath("data", f"{name}.json")


@lru_cache(maxsize=None)
def get(name: str) -> SimplicialComplex:
    return load_complex(path(name).read_text())


def all_complexes() -> dict[str, SimplicialComplex]:
    return {name: get(name) for name in NAMES}
