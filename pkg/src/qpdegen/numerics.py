"""Small numeric kernel: Horner evaluation, sign-scan bracketing, bisection.

Everything here is deterministic: the same inputs always give bit-identical
outputs, which the CLI relies on for regression baselines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import ConvergenceError, EvaluationError

__all__ = [
    "Polynomial",
    "Bracket",
    "RootResult",
    "horner_eval",
    "scan_brackets",
    "bisect",
    "find_roots",
    "central_diff",
    "DEFAULT_CELLS",
    "DEFAULT_MAX_ITER",
]

DEFAULT_CELLS = 1024
DEFAULT_MAX_ITER = 200

RealFunction = Callable[[float], float]


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial stored with ascending-degree coefficients.

    Trailing zero coefficients are trimmed, so ``coefficients[-1]`` is the
    leading one (the zero polynomial keeps a single ``0.0``).
    """

    coefficients: tuple[float, ...]

    def __init__(self, coefficients: Sequence[float]) -> None:
        coeffs = [float(c) for c in coefficients]
        if not coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: float) -> float:
        return horner_eval(self, x)

    def divide_linear(self, root: float) -> tuple["Polynomial", float]:
        """Synthetic division by ``(x - root)``; returns (quotient, remainder)."""
        c = self.coefficients
        if len(c) == 1:
            return Polynomial([0.0]), c[0]
        out = [0.0] * (len(c) - 1)
        acc = c[-1]
        for i in range(len(c) - 2, -1, -1):
            out[i] = acc
            acc = c[i] + acc * root
        return Polynomial(out), acc


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"bracket endpoints out of order: {self.lo} > {self.hi}")
        if self.f_lo * self.f_hi > 0.0:
            raise ValueError("bracket does not enclose a sign change")

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class RootResult:
    """A located root together with how it was found.

    ``count`` is the number of sign-change cells seen by the scan that
    produced the bracket (1 when the bracket was supplied directly).
    """

    value: float
    residual: float
    bracket: tuple[float, float]
    iterations: int
    count: int = 1
    meta: dict = field(default_factory=dict, compare=False)


def horner_eval(poly: Polynomial | Sequence[float], x: float) -> float:
    coeffs = poly.coefficients if isinstance(poly, Polynomial) else poly
    if len(coeffs) == 0:
        raise ValueError("empty polynomial")
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _checked(f: RealFunction, x: float) -> float:
    v = f(x)
    if not math.isfinite(v):
        raise EvaluationError(f"non-finite function value {v!r} at x={x!r}", x)
    return v


def scan_brackets(
    f: RealFunction, lo: float, hi: float, cells: int = DEFAULT_CELLS
) -> list[Bracket]:
    """Return every sign-change cell of a uniform grid on ``[lo, hi]``.

    A grid node where ``f`` is exactly zero is reported once, as the
    degenerate bracket ``[x, x]``.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if cells < 1:
        raise ValueError("cells must be >= 1")
    step = (hi - lo) / cells
    xs = [lo + i * step for i in range(cells)] + [hi]
    fs = [_checked(f, x) for x in xs]

    out: list[Bracket] = []
    for i in range(cells):
        x0, x1, f0, f1 = xs[i], xs[i + 1], fs[i], fs[i + 1]
        if f0 == 0.0:
            out.append(Bracket(x0, x0, 0.0, 0.0))
        elif f1 != 0.0 and (f0 < 0.0) != (f1 < 0.0):
            out.append(Bracket(x0, x1, f0, f1))
    if fs[-1] == 0.0:
        out.append(Bracket(xs[-1], xs[-1], 0.0, 0.0))
    return out


def bisect(
    f: RealFunction,
    b: Bracket,
    residual_tol: float = 1e-13,
    width_tol: float = 1e-15,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootResult:
    """Plain bisection on a sign-change bracket.

    Stops once ``|f(mid)| < residual_tol`` or the bracket is narrower than
    ``width_tol`` (or can no longer be split in floating point).
    """
    if b.degenerate:
        return RootResult(b.lo, 0.0, (b.lo, b.hi), 0)
    if b.f_lo == 0.0:
        return RootResult(b.lo, 0.0, (b.lo, b.hi), 0)
    if b.f_hi == 0.0:
        return RootResult(b.hi, 0.0, (b.lo, b.hi), 0)

    lo, hi, f_lo, f_hi = b.lo, b.hi, b.f_lo, b.f_hi

    def closer() -> tuple[float, float]:
        return (lo, f_lo) if abs(f_lo) <= abs(f_hi) else (hi, f_hi)

    for it in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            x, fx = closer()
            return RootResult(x, fx, (b.lo, b.hi), it - 1)
        f_mid = _checked(f, mid)
        if abs(f_mid) < residual_tol or f_mid == 0.0:
            return RootResult(mid, f_mid, (b.lo, b.hi), it)
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        if hi - lo < width_tol:
            x, fx = closer()
            return RootResult(x, fx, (b.lo, b.hi), it)
    best_x, best_f = closer()
    raise ConvergenceError(
        f"bisection did not converge in {max_iter} iterations "
        f"(best x={best_x!r}, f={best_f!r})",
        best=best_x,
    )


def find_roots(
    f: RealFunction,
    lo: float,
    hi: float,
    cells: int = DEFAULT_CELLS,
    residual_tol: float = 1e-13,
    width_tol: float = 1e-15,
    max_iter: int = DEFAULT_MAX_ITER,
) -> list[RootResult]:
    """Scan ``[lo, hi]`` and bisect every sign-change cell, in increasing order."""
    brackets = scan_brackets(f, lo, hi, cells)
    roots = [bisect(f, b, residual_tol, width_tol, max_iter) for b in brackets]
    return [
        RootResult(r.value, r.residual, r.bracket, r.iterations, len(brackets))
        for r in roots
    ]


def central_diff(f: RealFunction, x: float, h: float = 1e-6) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)
