"""Exact checks of the symmetrisation identities on a single chain."""

from __future__ import annotations

from .chain import Chain, boundary, face_map, is_cycle, is_normalised, l1_norm
from .homology import homologous
from .scomplex import SimplicialComplex
from .symm import symmetrise


def symmetrisation_checks(
    c: Chain, K: SimplicialComplex | None = None, cap: int | None = None
) -> dict[str, bool]:
    """Run every identity that applies to ``c``.

    Always: chain map, norm non-increase, face identity. For cycles also
    normalisation of the symmetrised chain, the ``(n+1) * face_0`` step,
    and (when ``K`` is given) a boundary witness for ``sym(c) - c``.
    """
    s = symmetrise(c, cap)
    n = c.dim
    out = {"norm_non_increase": l1_norm(s) <= l1_norm(c)}
    if n >= 1:
        out["chain_map"] = boundary(s) == symmetrise(boundary(c), cap)
        d0 = face_map(s, 0)
        out["face_identity"] = all(
            face_map(s, j) == (d0 if j % 2 == 0 else -d0) for j in range(1, n + 1)
        )
    if is_cycle(c):
        out["cycle_normalisation"] = is_normalised(s)
        if n >= 1:
            # sum_j (-1)^j face_j(s) == (n+1) * face_0(s), and it vanishes
            alternating = sum(
                ((-1) ** j * face_map(s, j) for j in range(1, n + 1)), face_map(s, 0)
            )
            out["n_plus_one_argument"] = alternating == (n + 1) * d0 and not d0
        if K is not None:
            w = homologous(s, c, K).witness
            out["homotopic_to_identity"] = w is not None and boundary(w) == s - c
    return out
