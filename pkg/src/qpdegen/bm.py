"""Root-of-unity degeneracies of the Biedenharn-Macfarlane oscillator.

At ``theta = pi (2k+1) / (2n+r+1)`` the levels ``E_n`` and ``E_{n+r}``
coincide, because the closed-form difference

    E_{n+r} - E_n = 2 sin(r theta/2) / sin(theta) * cos((2n+1+r) theta/2) * cos(theta/2)

has its middle factor equal to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .brackets import THETA_ZERO_TOL, PhaseDeformation
from .errors import DomainError
from .spectrum import energy_bm

__all__ = [
    "AngleFamily",
    "degeneracy_angle",
    "level_difference_closed",
    "verify_degeneracy",
]


@dataclass(frozen=True)
class AngleFamily:
    """Level ``n``, gap ``r >= 1`` and branch index ``k`` of a degeneracy angle."""

    n: int
    r: int
    k: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"n must be >= 0, got {self.n}")
        if self.r < 1:
            raise DomainError(f"level gap r must be >= 1, got {self.r}")

    @property
    def pi_fraction(self) -> tuple[int, int]:
        return 2 * self.k + 1, 2 * self.n + self.r + 1


def degeneracy_angle(fam: AngleFamily) -> PhaseDeformation:
    num, den = fam.pi_fraction
    return PhaseDeformation.from_pi_fraction(num, den)


def level_difference_closed(n: int, r: int, d: PhaseDeformation) -> float:
    if r < 1:
        raise DomainError(f"level gap r must be >= 1, got {r}")
    theta = d.theta
    if abs(theta) < THETA_ZERO_TOL or math.pi - abs(theta) < THETA_ZERO_TOL:
        raise DomainError(f"closed form is singular at theta = {theta} (sin theta = 0)")
    return (
        2.0
        * math.sin(r * theta / 2.0)
        / math.sin(theta)
        * math.cos((2 * n + 1 + r) * theta / 2.0)
        * math.cos(theta / 2.0)
    )


def verify_degeneracy(fam: AngleFamily) -> float:
    """``|E_{n+r} - E_n|`` at the family's angle; zero up to rounding."""
    d = degeneracy_angle(fam)
    return abs(energy_bm(fam.n + fam.r, d) - energy_bm(fam.n, d))
