"""Energy spectra and truncated Fock-space matrices for the deformed oscillators.

With H = (A A+ + A+ A) / 2 and A+ A = [N], A A+ = [N+1], every oscillator
kind has ``E_n = ([n+1] + [n]) / 2``; only the bracket changes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .brackets import (
    Deformation,
    PhaseDeformation,
    RealDeformation,
    TDDeformation,
    bm_bracket_phase,
    bracket,
    qp_bracket,
)
from .errors import DomainError

__all__ = [
    "EnergyLevel",
    "TruncatedRep",
    "energy",
    "energy_qp",
    "energy_td",
    "energy_bm",
    "spectrum_table",
    "build_truncated_rep",
    "defining_relation_residual",
    "hamiltonian_diagonal",
]


def _level(n: int) -> int:
    if int(n) != n or n < 0:
        raise DomainError(f"level index must be a nonnegative integer, got {n}")
    return int(n)


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    energy: float


def energy_qp(n: int, d: RealDeformation) -> float:
    n = _level(n)
    return 0.5 * (qp_bracket(n + 1, d) + qp_bracket(n, d))


def energy_td(n: int, q: float) -> float:
    n = _level(n)
    if not 0.0 < q <= 1.0:
        raise DomainError(f"Tamm-Dancoff q must lie in (0, 1], got {q}")
    if n == 0:
        return 0.5
    return 0.5 * ((n + 1) * q**n + n * q ** (n - 1))


def energy_bm(n: int, d: PhaseDeformation) -> float:
    n = _level(n)
    return 0.5 * (bm_bracket_phase(n + 1, d) + bm_bracket_phase(n, d))


def energy(n: int, d: Deformation) -> float:
    if isinstance(d, RealDeformation):
        return energy_qp(n, d)
    if isinstance(d, TDDeformation):
        return energy_td(n, d.q)
    if isinstance(d, PhaseDeformation):
        return energy_bm(n, d)
    raise TypeError(f"unsupported deformation {d!r}")


def spectrum_table(n_max: int, d: Deformation) -> list[EnergyLevel]:
    """Levels ``0..n_max`` in index order."""
    n_max = _level(n_max)
    return [EnergyLevel(n, energy(n, d)) for n in range(n_max + 1)]


@dataclass(frozen=True, eq=False)
class TruncatedRep:
    """Ladder and number operators on the Fock states ``|0>..|n_max>``.

    Arrays are marked read-only after construction.
    """

    deformation: Deformation
    a_matrix: np.ndarray
    adag_matrix: np.ndarray
    n_matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.a_matrix.shape[0]

    @property
    def n_max(self) -> int:
        return self.dim - 1


def build_truncated_rep(n_max: int, d: Deformation) -> TruncatedRep:
    n_max = _level(n_max)
    if n_max < 1:
        raise DomainError("a truncated representation needs n_max >= 1")
    dim = n_max + 1
    a = np.zeros((dim, dim))
    for n in range(1, dim):
        b = bracket(n, d)
        if b < 0.0:
            raise DomainError(
                f"bracket [{n}] = {b} is negative; no real representation"
            )
        a[n - 1, n] = math.sqrt(b)
    adag = a.T.copy()
    num = np.diag(np.arange(dim, dtype=float))
    for m in (a, adag, num):
        m.flags.writeable = False
    return TruncatedRep(d, a, adag, num)


def _deformed_commutators(rep: TruncatedRep) -> list[np.ndarray]:
    """Left-minus-right sides of the defining relations, one array each."""
    a, ad = rep.a_matrix, rep.adag_matrix
    aad, ada = a @ ad, ad @ a
    ns = np.arange(rep.dim, dtype=float)
    d = rep.deformation
    if isinstance(d, RealDeformation):
        return [
            aad - d.q * ada - np.diag(d.p**ns),
            aad - d.p * ada - np.diag(d.q**ns),
        ]
    if isinstance(d, TDDeformation):
        return [aad - d.q * ada - np.diag(d.q**ns)]
    if isinstance(d, PhaseDeformation):
        q = cmath.exp(1j * d.theta)
        qn = np.array([q**k for k in range(rep.dim)])
        return [
            aad - q * ada - np.diag(1.0 / qn),
            aad - (1.0 / q) * ada - np.diag(qn),
        ]
    raise TypeError(f"unsupported deformation {d!r}")


def defining_relation_residual(
    rep: TruncatedRep, d: Deformation | None = None
) -> float:
    """Largest violation of the defining relations on the truncated space.

    Covers both deformed commutators (one for Tamm-Dancoff) plus
    ``[N, a] = -a``. The top diagonal entry is skipped: a finite cutoff
    cannot satisfy the relation on ``|n_max>``.
    """
    if d is not None and d != rep.deformation:
        raise ValueError("representation was built for a different deformation")
    dim = rep.dim
    for m in (rep.a_matrix, rep.adag_matrix, rep.n_matrix):
        if m.shape != (dim, dim):
            raise ValueError(f"matrix shape {m.shape} does not match dim {dim}")
    mask = np.ones((dim, dim), dtype=bool)
    mask[-1, -1] = False
    worst = 0.0
    for r in _deformed_commutators(rep):
        worst = max(worst, float(np.max(np.abs(r[mask]))))
    a, num = rep.a_matrix, rep.n_matrix
    worst = max(worst, float(np.max(np.abs(num @ a - a @ num + a))))
    return worst


def hamiltonian_diagonal(rep: TruncatedRep) -> np.ndarray:
    """Diagonal of ``(A A+ + A+ A) / 2``; entries ``0..n_max-1`` are exact levels."""
    a, ad = rep.a_matrix, rep.adag_matrix
    return np.diag(0.5 * (a @ ad + ad @ a)).copy()
