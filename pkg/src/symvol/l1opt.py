"""Exact l1 semi-norms of homology classes by linear programming.

For a cycle ``c`` the semi-norm is ``min |z|_1`` over cycles ``z`` homologous
to ``c``; the normalised semi-norm adds the constraints ``face_map(z, j) == 0``
for ``j < n``. Writing ``z = p - q`` with ``p, q >= 0`` turns both into LPs.

Two encodings of "``z`` is homologous to ``c``" are available:

``"boundary"``
    ``p - q - boundary(b) == c`` with a free ``(n+1)``-chain ``b``.
``"cocycle"``
    ``psi(p - q) == psi(c)`` for every ``psi`` in a basis of the functionals
    vanishing on boundaries. Same feasible set for ``z``, far fewer rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chain import Chain, boundary, is_cycle, is_normalised, l1_norm
from .homology import (
    NotACycleError,
    boundary_matrix,
    chain_to_vec,
    cocycle_basis,
    homologous,
)
from .lp import LPInstance, LPSolution, solve_lp
from .scomplex import SimplicialComplex, basis, basis_index
from .symm import check_cap, symmetrise

ENCODINGS = ("boundary", "cocycle")
DEFAULT_ENCODING = "boundary"


class EqualityViolation(AssertionError):
    """The two semi-norms (or a constructive check) disagreed."""

    def __init__(self, message: str, report: NormReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class NormReport:
    class_representative: Chain
    seminorm: Fraction
    normalised_seminorm: Fraction
    optimal_chain: Chain
    optimal_normalised_chain: Chain
    symmetrised_optimum: Chain | None = None
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _require_cycle(c: Chain, K: SimplicialComplex) -> None:
    c.check_in(K)
    if not is_cycle(c):
        raise NotACycleError("the class representative must be a cycle")


def build_lp(
    c: Chain,
    K: SimplicialComplex,
    normalised: bool = False,
    encoding: str = DEFAULT_ENCODING,
) -> LPInstance:
    """Variables ``p`` (0..m-1), ``q`` (m..2m-1), then ``b`` for the boundary encoding."""
    n = c.dim
    m = len(basis(K, n))
    cvec = chain_to_vec(c, K)
    rows: list[dict[int, Fraction]] = []
    rhs: list[Fraction] = []
    free: list[int] = []
    if encoding == "boundary":
        cols = boundary_matrix(K, n + 1).columns
        rows = [{i: Fraction(1), m + i: Fraction(-1)} for i in range(m)]
        rhs = [cvec.get(i, Fraction(0)) for i in range(m)]
        for j, col in enumerate(cols):
            for i, a in col.items():
                rows[i][2 * m + j] = Fraction(-a)
        free = list(range(2 * m, 2 * m + len(cols)))
    elif encoding == "cocycle":
        for psi in cocycle_basis(K, n):
            row = {}
            for i, a in psi.items():
                row[i] = a
                row[m + i] = -a
            rows.append(row)
            rhs.append(sum((a * cvec[i] for i, a in psi.items() if i in cvec), Fraction(0)))
    else:
        raise ValueError(f"unknown encoding {encoding!r}; expected one of {ENCODINGS}")

    if normalised and n >= 1:
        lower = basis_index(K, n - 1)
        for j in range(n):
            face_rows: dict[int, dict[int, Fraction]] = {}
            for i, t in enumerate(basis(K, n)):
                row = face_rows.setdefault(lower[t[:j] + t[j + 1:]], {})
                row[i] = row.get(i, 0) + 1
                row[m + i] = row.get(m + i, 0) - 1
            for key in sorted(face_rows):
                rows.append(face_rows[key])
                rhs.append(Fraction(0))

    num_vars = 2 * m + len(free)
    objective = [Fraction(1)] * (2 * m) + [Fraction(0)] * len(free)
    assert len(objective) == num_vars
    return LPInstance(tuple(objective), tuple(rows), tuple(rhs), frozenset(free))


def _extract(sol: LPSolution, K: SimplicialComplex, n: int) -> Chain:
    b = basis(K, n)
    m = len(b)
    return Chain(n, {b[i]: sol.x[i] - sol.x[m + i] for i in range(m)})


def _minimise(c, K, normalised, encoding, cap):
    check_cap(c.dim, cap)
    _require_cycle(c, K)
    if not c:
        return Fraction(0), Chain.zero(c.dim)
    sol = solve_lp(build_lp(c, K, normalised, encoding))
    z = _extract(sol, K, c.dim)
    assert l1_norm(z) == sol.value
    return sol.value, z


def min_l1_in_class(
    c: Chain, K: SimplicialComplex, encoding: str = DEFAULT_ENCODING, cap: int | None = None
) -> tuple[Fraction, Chain]:
    """Minimal l1-norm over cycles homologous to ``c``, with a minimiser."""
    return _minimise(c, K, False, encoding, cap)


def min_l1_normalised(
    c: Chain, K: SimplicialComplex, encoding: str = DEFAULT_ENCODING, cap: int | None = None
) -> tuple[Fraction, Chain]:
    """Same, restricted to cycles killed by the face maps ``0 .. n-1``."""
    return _minimise(c, K, True, encoding, cap)


def equivalence_factor(n: int) -> int:
    return max(1, 2 ** (n - 1)) if n >= 1 else 1


def verify_equality(
    c: Chain,
    K: SimplicialComplex,
    encoding: str = DEFAULT_ENCODING,
    cap: int | None = None,
    strict: bool = True,
) -> NormReport:
    """Compute both semi-norms and check them against each other.

    Besides exact equality this checks the comparison bounds, that both
    optima represent the class of ``c``, and that symmetrising the
    unnormalised optimum yields a normalised representative of no larger
    norm. With ``strict`` a failed check raises :class:`EqualityViolation`
    carrying the report.
    """
    value, z = min_l1_in_class(c, K, encoding, cap)
    nvalue, zn = min_l1_normalised(c, K, encoding, cap)
    s = symmetrise(z, cap)
    n = c.dim
    checks = {
        "seminorms_equal": value == nvalue,
        "lower_bound": value <= nvalue,
        "upper_bound": nvalue <= equivalence_factor(n) * value,
        "optimum_homologous": homologous(z, c, K).homologous,
        "normalised_optimum_homologous": homologous(zn, c, K).homologous,
        "normalised_optimum_is_normalised": is_normalised(zn),
        "normalised_optimum_norm": l1_norm(zn) == nvalue,
        "symmetrised_optimum_is_cycle": n == 0 or not boundary(s),
        "symmetrised_optimum_is_normalised": is_normalised(s),
        "symmetrised_optimum_homologous": homologous(s, c, K).homologous,
        "symmetrised_optimum_norm_bound": l1_norm(s) <= l1_norm(z),
        "normalised_seminorm_below_symmetrised": nvalue <= l1_norm(s),
    }
    report = NormReport(c, value, nvalue, z, zn, s, checks)
    if strict and not report.ok:
        failed = [k for k, v in checks.items() if not v]
        raise EqualityViolation(
            f"checks failed: {', '.join(failed)} (seminorm {value}, normalised {nvalue})",
            report,
        )
    return report
