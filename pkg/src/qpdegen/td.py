"""Level degeneracies ``E_m = E_{m+k}`` of the Tamm-Dancoff oscillator.

Dividing ``E_{m+k} - E_m`` by ``q**(m-1) / 2`` leaves

    (m+k+1) q**(k+1) + (m+k) q**k - (m+1) q - m = 0,

which is negative at q = 0 (or has a simple root there when m = 0) and
equals 2k at q = 1, so a root in (0, 1) always exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, NotFoundError
from .numerics import DEFAULT_CELLS, Polynomial, RootResult, find_roots

__all__ = [
    "DegeneracyPair",
    "closed_form_k1",
    "closed_form_k2",
    "degeneracy_polynomial",
    "solve_degeneracy",
    "table_E0_Em",
    "SCAN_LO",
    "SCAN_HI",
    "DEFAULT_TOL",
]

SCAN_LO = 1e-9
SCAN_HI = 1.0 - 1e-9
DEFAULT_TOL = 1e-13


@dataclass(frozen=True)
class DegeneracyPair:
    """The target ``E_m = E_{m+k}``."""

    m: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise DomainError(f"m must be >= 0, got {self.m}")
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")
        if self.m == 0 and self.k < 2:
            raise DomainError(
                "E_0 = E_1 would require the excluded value q = 0; use k >= 2 for m = 0"
            )


def closed_form_k1(m: int) -> float:
    """q with ``E_m = E_{m+1}``."""
    if m < 1:
        raise DomainError("m = 0 is excluded: E_0 = E_1 needs q = 0")
    return math.sqrt(m / (m + 2))


def closed_form_k2(m: int) -> float:
    """q with ``E_m = E_{m+2}``."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    return (1.0 + math.sqrt(4 * m * m + 12 * m + 1)) / (2 * (m + 3))


def degeneracy_polynomial(pair: DegeneracyPair) -> Polynomial:
    m, k = pair.m, pair.k
    coeffs = [0.0] * (k + 2)
    coeffs[0] -= m
    coeffs[1] -= m + 1
    coeffs[k] += m + k
    coeffs[k + 1] += m + k + 1
    return Polynomial(coeffs)


def _solve(f, what: str, tol: float) -> RootResult:
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    roots = find_roots(f, SCAN_LO, SCAN_HI, DEFAULT_CELLS, residual_tol=tol)
    if not roots:
        raise NotFoundError(f"no sign change of {what} on [{SCAN_LO}, {SCAN_HI}]")
    return roots[0]


def solve_degeneracy(pair: DegeneracyPair, tol: float = DEFAULT_TOL) -> RootResult:
    """Smallest root in (0, 1) of the degeneracy polynomial.

    ``count`` on the result tells how many sign changes the scan saw.
    """
    poly = degeneracy_polynomial(pair)
    return _solve(poly, f"the E_{pair.m} = E_{pair.m + pair.k} polynomial", tol)


def _e0_em_condition(m: int):
    # q**(m-1) * ((m+1) q + m) - 1, via pow so q near 1 with large m is fine
    def f(q: float) -> float:
        return q ** (m - 1) * ((m + 1) * q + m) - 1.0

    return f


def table_E0_Em(
    m_list: Iterable[int], tol: float = DEFAULT_TOL
) -> list[tuple[int, RootResult]]:
    """Values q_m giving ``E_0 = E_m`` for each m (all m >= 2)."""
    ms = list(m_list)
    for m in ms:
        if m < 2:
            raise DomainError(f"E_0 = E_m needs m >= 2, got {m}")
    return [(m, _solve(_e0_em_condition(m), f"E_0 = E_{m}", tol)) for m in ms]
