"""Symmetrisation of tuple chains and exact l1 semi-norms of homology classes."""

from .chain import Chain, boundary, face_map, is_cycle, is_normalised, l1_norm, linear_combine
from .homology import (
    betti,
    boundary_matrix,
    boundary_space,
    cycle_space,
    homologous,
    homology_generators,
)
from .scomplex import (
    ComplexError,
    Permutation,
    SimplicialComplex,
    basis,
    face,
    load_complex,
    vertex_permute,
)
from .symm import DimensionCapError, cyclic_tau, enumerate_permutations, symmetrise

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "ComplexError",
    "DimensionCapError",
    "Permutation",
    "SimplicialComplex",
    "basis",
    "betti",
    "boundary",
    "boundary_matrix",
    "boundary_space",
    "cycle_space",
    "cyclic_tau",
    "enumerate_permutations",
    "face",
    "face_map",
    "homologous",
    "homology_generators",
    "is_cycle",
    "is_normalised",
    "l1_norm",
    "linear_combine",
    "load_complex",
    "symmetrise",
    "vertex_permute",
]
