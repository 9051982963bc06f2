"""Deformed numbers ("brackets") and their factorials.

Three families are covered, all in units with hbar*omega = 1:

* q,p-bracket  ``[[x]] = (q**x - p**x) / (q - p)`` on the unit square,
* Tamm-Dancoff bracket ``{x} = x q**(x-1)`` (the p -> q limit of the above),
* Biedenharn-Macfarlane bracket for a phase ``q = exp(i theta)``, which is
  the real number ``sin(x theta) / sin(theta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError

__all__ = [
    "RealDeformation",
    "PhaseDeformation",
    "TDDeformation",
    "Deformation",
    "qp_bracket",
    "td_bracket",
    "bm_bracket_phase",
    "bm_bracket_real",
    "bracket",
    "bracket_factorial",
    "homogeneous_sum",
    "DIAGONAL_SWITCH",
    "THETA_ZERO_TOL",
]

# below this |q - p| the quotient form is replaced by the midpoint expansion
DIAGONAL_SWITCH = 1e-8
THETA_ZERO_TOL = 1e-12


@dataclass(frozen=True)
class RealDeformation:
    """Parameters (q, p) of the two-parameter oscillator.

    Both lie in [0, 1]; only the corner (0, 0) is excluded.
    """

    q: float
    p: float

    def __post_init__(self) -> None:
        q, p = float(self.q), float(self.p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)
        if not (0.0 <= q <= 1.0 and 0.0 <= p <= 1.0):
            raise DomainError(f"(q, p) = ({q}, {p}) is outside the unit square")
        if q == 0.0 and p == 0.0:
            raise DomainError("the point (q, p) = (0, 0) is excluded")

    def swapped(self) -> "RealDeformation":
        return RealDeformation(self.p, self.q)


@dataclass(frozen=True)
class TDDeformation:
    """Tamm-Dancoff parameter q in (0, 1]."""

    q: float

    def __post_init__(self) -> None:
        q = float(self.q)
        object.__setattr__(self, "q", q)
        if not 0.0 < q <= 1.0:
            raise DomainError(f"Tamm-Dancoff q must lie in (0, 1], got {q}")


@dataclass(frozen=True)
class PhaseDeformation:
    """BM deformation on the unit circle, stored as its angle in (-pi, pi]."""

    theta: float

    def __post_init__(self) -> None:
        theta = float(self.theta)
        if not math.isfinite(theta):
            raise DomainError(f"theta must be finite, got {theta}")
        if not -math.pi < theta <= math.pi:
            theta = math.remainder(theta, 2.0 * math.pi)
            if theta == -math.pi:
                theta = math.pi
        object.__setattr__(self, "theta", theta)

    @classmethod
    def from_pi_fraction(cls, num: int, den: int) -> "PhaseDeformation":
        """Angle ``pi * num / den``, reduced exactly before conversion to float."""
        if den == 0:
            raise DomainError("zero denominator in theta = pi*num/den")
        frac = Fraction(num, den) % 2
        if frac > 1:
            frac -= 2
        if frac == 1:
            return cls(math.pi)
        return cls(math.pi * frac.numerator / frac.denominator)


Deformation = Union[RealDeformation, TDDeformation, PhaseDeformation]


def _check_x(x: float) -> float:
    x = float(x)
    if not x >= 0.0:
        raise DomainError(f"bracket argument must be >= 0, got {x}")
    return x


def qp_bracket(x: float, d: RealDeformation) -> float:
    """Two-parameter bracket ``(q**x - p**x) / (q - p)``.

    Symmetric in q and p. Evaluated as ``a**x * -expm1(x log1p(-(a-b)/a)) / (a-b)``
    with ``a >= b`` so nothing cancels. For ``|q - p| < DIAGONAL_SWITCH`` the
    expansion about the midpoint ``c`` is used instead,
    ``x c**(x-1) + C(x,3) c**(x-3) h**2`` with ``h = |q-p|/2``; at p == q it is
    exactly the Tamm-Dancoff bracket ``x q**(x-1)``.
    """
    x = _check_x(x)
    if x == 0.0:
        return 0.0
    a, b = (d.q, d.p) if d.q >= d.p else (d.p, d.q)
    if b == 0.0:
        return a ** (x - 1.0)
    gap = a - b
    if gap == 0.0:
        return x * a ** (x - 1.0)
    c, h = 0.5 * (a + b), 0.5 * gap
    if gap < DIAGONAL_SWITCH and c > 1e-4:
        # truncation error is O((h/c)**4) relative
        return x * c ** (x - 1.0) + x * (x - 1.0) * (x - 2.0) / 6.0 * c ** (x - 3.0) * h * h
    rel = gap / a
    # log1p keeps b/a accurate near 1; far from 1 the plain ratio is exact enough
    log_ratio = math.log1p(-rel) if rel < 0.5 else math.log(b / a)
    return a**x * -math.expm1(x * log_ratio) / gap


def td_bracket(x: float, q: float) -> float:
    x = _check_x(x)
    if not 0.0 < q <= 1.0:
        raise DomainError(f"Tamm-Dancoff q must lie in (0, 1], got {q}")
    if x == 0.0:
        return 0.0
    return x * q ** (x - 1.0)


def bm_bracket_phase(x: float, d: PhaseDeformation) -> float:
    """``sin(x theta) / sin(theta)``, the BM bracket at ``q = exp(i theta)``.

    At theta = 0 this is x. At theta = pi (q = -1) only integer x has a
    limit, ``x * (-1)**(x - 1)``.
    """
    x = _check_x(x)
    theta = d.theta
    if abs(theta) < THETA_ZERO_TOL:
        return x
    if math.pi - abs(theta) < THETA_ZERO_TOL:
        if x != math.floor(x):
            raise DomainError(
                f"BM bracket at theta = pi is undefined for non-integer x = {x}"
            )
        n = int(x)
        return float(n if n % 2 == 1 else -n)
    return math.sin(x * theta) / math.sin(theta)


def bm_bracket_real(x: float, q: float) -> float:
    """BM bracket ``(q**x - q**-x) / (q - 1/q)`` for real q > 0."""
    x = _check_x(x)
    if not q > 0.0:
        raise DomainError(f"real BM q must be positive, got {q}")
    if abs(q - 1.0) < THETA_ZERO_TOL:
        return x
    # sinh form avoids the q - 1/q cancellation near q = 1
    t = math.log(q)
    return math.sinh(x * t) / math.sinh(t)


def bracket(x: float, d: Deformation) -> float:
    """Dispatch to the bracket matching the deformation type."""
    if isinstance(d, RealDeformation):
        return qp_bracket(x, d)
    if isinstance(d, TDDeformation):
        return td_bracket(x, d.q)
    if isinstance(d, PhaseDeformation):
        return bm_bracket_phase(x, d)
    raise TypeError(f"unsupported deformation {d!r}")


def bracket_factorial(n: int, d: Deformation) -> float:
    """Product of brackets 1..n; the empty product (n = 0) is 1."""
    if n < 0 or int(n) != n:
        raise DomainError(f"level index must be a nonnegative integer, got {n}")
    out = 1.0
    for k in range(1, int(n) + 1):
        out *= bracket(k, d)
    return out


def homogeneous_sum(n: int, q: float, p: float) -> float:
    """``sum_{r=0}^{n-1} p**(n-1-r) q**r``, i.e. the integer q,p-bracket.

    No domain checks: degeneracy curves evaluate this at the corner (0, 0)
    while bracketing. Zero for n <= 0.
    """
    if n <= 0:
        return 0.0
    acc = 0.0
    pk = 1.0
    for _ in range(n):
        acc = acc * q + pk
        pk *= p
    return acc
