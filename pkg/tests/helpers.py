"""Random chains and cycles on a complex, seeded by the caller."""

from __future__ import annotations

import random
from fractions import Fraction

from symvol import Chain, SimplicialComplex, boundary, homology_generators, linear_combine


def random_coeff(rng: random.Random) -> Fraction:
    while True:
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        if x:
            return x


def random_simplex(K: SimplicialComplex, n: int, rng: random.Random) -> tuple[int, ...]:
    faces = sorted(f for f in K.faces if len(f) <= n + 1)
    f = rng.choice(faces)
    return tuple(rng.choice(f) for _ in range(n + 1))


def random_chain(K: SimplicialComplex, n: int, rng: random.Random, max_terms: int = 4) -> Chain:
    k = rng.randint(1, max_terms)
    return Chain(n, [(random_simplex(K, n, rng), random_coeff(rng)) for _ in range(k)])


def random_cycle(K: SimplicialComplex, n: int, rng: random.Random, max_terms: int = 2) -> Chain:
    """A random boundary plus, half of the time, a random multiple of homology generators."""
    c = boundary(random_chain(K, n + 1, rng, max_terms))
    gens = homology_generators(K, n)
    if gens and rng.random() < 0.5:
        c = c + linear_combine([random_coeff(rng) for _ in gens], gens)
    return c
