"""Degeneracy curves of the q,p-oscillator in the unit square.

For a level pair (l, h) the curve is ``G(q, p) = 2 (E_h - E_l) = 0``. With
``[[n]]`` the homogeneous sum ``sum_j q**j p**(n-1-j)`` and ``d = h - l``,

    G = q**l * ((1+p) [[d]] - (1 - q**d)) - (1+p) (1 - p**d) [[l]]

which is the same polynomial as ``[[h+1]] + [[h]] - [[l+1]] - [[l]]``, but
its q-derivative carries no cancellation on the flat part of the curve near
p = 1. G is symmetric in (q, p), so the p-derivative is the q-derivative
with the arguments swapped.

For l = 0 this is ``F_{m,0}`` (E_m = E_0); for h = l + 1 it is
``F_{m+1,m}``. Other pairs are computed the same way but the monotone,
single-valued shape of the curve is only established for those two families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .brackets import RealDeformation
from .errors import ConvergenceError, DomainError, NotFoundError, QPDegenError
from .numerics import (
    DEFAULT_CELLS,
    DEFAULT_MAX_ITER,
    Bracket,
    RootResult,
    bisect,
    find_roots,
)
from .spectrum import energy_qp

__all__ = [
    "CurveSpec",
    "CurveSample",
    "SingularSlopeError",
    "degeneracy_function",
    "partial_q",
    "partial_p",
    "solve_p_for_q",
    "admissible_interval",
    "trace_curve",
    "curve_slope",
    "endpoint_qm",
    "intersect_constraint",
    "diagonal_point",
    "DEFAULT_TRACE_TOL",
    "DEFAULT_SAMPLES",
]

DEFAULT_TRACE_TOL = 1e-12
DEFAULT_SAMPLES = 256
SLOPE_SINGULAR_TOL = 1e-14
P_WIDTH_TOL = 1e-18


class SingularSlopeError(QPDegenError, ArithmeticError):
    """dG/dp vanishes and the slope has no finite or signed-infinite value."""


@dataclass(frozen=True)
class CurveSpec:
    """Level pair ``(m_low, m_high)`` whose energies are set equal."""

    m_low: int
    m_high: int

    def __post_init__(self) -> None:
        if self.m_low < 0:
            raise DomainError(f"m_low must be >= 0, got {self.m_low}")
        if self.m_high < self.m_low + 1:
            raise DomainError(
                f"need m_high > m_low, got ({self.m_low}, {self.m_high})"
            )
        if self.m_low == 0 and self.m_high < 2:
            raise DomainError("E_0 = E_1 has no curve inside the unit square; use m_high >= 2")

    @property
    def gap(self) -> int:
        return self.m_high - self.m_low

    @property
    def family(self) -> str:
        if self.m_low == 0:
            return "ground"
        if self.gap == 1:
            return "adjacent"
        return "general"

    @property
    def proven(self) -> bool:
        """True for the two families whose curves are known to be monotone."""
        return self.family != "general"


@dataclass(frozen=True)
class CurveSample:
    q: float
    p: float
    residual: float
    dpdq: float


def _one_minus_pow(x: float, n: int) -> float:
    if x == 0.0:
        return 1.0
    return -math.expm1(n * math.log(x))


def _hsum(n: int, q: float, p: float) -> float:
    """[[n]] = sum_{j<n} q**j p**(n-1-j)."""
    acc = 0.0
    pk = 1.0
    for _ in range(n):
        acc = acc * q + pk
        pk *= p
    return acc


def _hsum_dq(n: int, q: float, p: float) -> float:
    """d[[n]]/dq = sum_{j=1}^{n-1} j q**(j-1) p**(n-1-j)."""
    acc = 0.0
    pk = 1.0
    for j in range(n - 1, 0, -1):
        acc = acc * q + j * pk
        pk *= p
    return acc


def _g(l: int, d: int, q: float, p: float) -> float:
    a = (1.0 + p) * _hsum(d, q, p) - _one_minus_pow(q, d)
    if l == 0:
        return a
    return q**l * a - (1.0 + p) * _one_minus_pow(p, d) * _hsum(l, q, p)


def _g_dq(l: int, d: int, q: float, p: float) -> float:
    inner = (1.0 + p) * _hsum_dq(d, q, p) + d * q ** (d - 1)
    if l == 0:
        return inner
    a = (1.0 + p) * _hsum(d, q, p) - _one_minus_pow(q, d)
    return (
        l * q ** (l - 1) * a
        + q**l * inner
        - (1.0 + p) * _one_minus_pow(p, d) * _hsum_dq(l, q, p)
    )


def _validate(q: float, p: float) -> None:
    RealDeformation(q, p)


def degeneracy_function(spec: CurveSpec, q: float, p: float) -> float:
    """``2 (E_{m_high} - E_{m_low})`` as a polynomial in (q, p)."""
    _validate(q, p)
    return _g(spec.m_low, spec.gap, q, p)


def partial_q(spec: CurveSpec, q: float, p: float) -> float:
    _validate(q, p)
    return _g_dq(spec.m_low, spec.gap, q, p)


def partial_p(spec: CurveSpec, q: float, p: float) -> float:
    _validate(q, p)
    return _g_dq(spec.m_low, spec.gap, p, q)


def curve_slope(spec: CurveSpec, q: float, p: float) -> float:
    """dp/dq of the implicit curve through (q, p).

    Where dG/dp vanishes but dG/dq does not, the tangent is vertical and a
    signed infinity is returned.
    """
    num = partial_q(spec, q, p)
    den = partial_p(spec, q, p)
    if abs(den) < SLOPE_SINGULAR_TOL:
        if abs(num) < SLOPE_SINGULAR_TOL:
            raise SingularSlopeError(f"both partial derivatives vanish at ({q}, {p})")
        return -math.copysign(math.inf, num) * (1.0 if den >= 0.0 else -1.0)
    return -num / den


def endpoint_qm(m: int, tol: float = DEFAULT_TRACE_TOL) -> RootResult:
    """Root in (0, 1) of ``q**m + q**(m-1) - 1``: where F_{m,0} meets p = 0."""
    if m < 2:
        raise DomainError(f"endpoint q_m needs m >= 2, got {m}")

    def f(q: float) -> float:
        return q ** (m - 1) * (q + 1.0) - 1.0

    roots = find_roots(f, 0.0, 1.0, DEFAULT_CELLS, residual_tol=0.0, width_tol=P_WIDTH_TOL)
    if not roots:  # pragma: no cover - f(0) = -1, f(1) = 1
        raise NotFoundError(f"no root of q^{m} + q^{m - 1} = 1 in (0, 1)")
    return roots[0]


def admissible_interval(spec: CurveSpec, tol: float = DEFAULT_TRACE_TOL) -> tuple[float, float]:
    """Range of q covered by the curve."""
    if spec.m_low == 0:
        return 0.0, endpoint_qm(spec.m_high, tol).value
    return 0.0, 1.0


def _root_on_segment(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    f_lo: float,
    f_hi: float,
    tol: float,
    max_iter: int,
) -> RootResult | None:
    """Root of f on [lo, hi] given endpoint values; None if there is none.

    Without a sign change an endpoint with ``|f| <= tol`` is accepted, ``hi``
    first. Bisection runs to floating-point resolution: on the flat ends of
    a curve a residual-based stop would leave the point visibly off it.
    """
    straddles = f_lo < 0.0 < f_hi or f_hi < 0.0 < f_lo
    if f_hi == 0.0 or (abs(f_hi) <= tol and not straddles):
        return RootResult(hi, f_hi, (lo, hi), 0)
    if f_lo == 0.0 or (abs(f_lo) <= tol and not straddles):
        return RootResult(lo, f_lo, (lo, hi), 0)
    if not straddles:
        return None
    root = bisect(
        f, Bracket(lo, hi, f_lo, f_hi), residual_tol=0.0, width_tol=P_WIDTH_TOL, max_iter=max_iter
    )
    if abs(root.residual) > tol:
        raise ConvergenceError(
            f"|G| = {abs(root.residual)!r} at {root.value!r} exceeds tol = {tol!r}",
            best=root.value,
        )
    return root


def solve_p_for_q(
    spec: CurveSpec,
    q: float,
    tol: float = DEFAULT_TRACE_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootResult:
    """p in [0, 1] with G(q, p) = 0, by bisection on the full p-range.

    ``tol`` bounds the residual of the returned point. If G already vanishes
    to within ``tol`` at p = 1 that endpoint wins; this is where the curves
    with m_low >= 1 meet q = 0.
    """
    if not 0.0 <= q <= 1.0:
        raise DomainError(f"q = {q} is outside [0, 1]")
    l, d = spec.m_low, spec.gap

    def f(p: float) -> float:
        return _g(l, d, q, p)

    root = _root_on_segment(f, 0.0, 1.0, f(0.0), f(1.0), tol, max_iter)
    if root is None:
        lo, hi = admissible_interval(spec)
        raise NotFoundError(
            f"no p in [0, 1] puts (q={q}) on the E_{spec.m_low} = E_{spec.m_high} "
            f"curve; admissible q-interval is [{lo!r}, {hi!r}]"
        )
    return root


def _sample_upper(spec: CurveSpec, s: float, tol: float) -> CurveSample:
    """Curve point on the line q - p = s, for s <= 0 (the half with p >= q)."""
    l, d = spec.m_low, spec.gap
    hi = 1.0 + s
    if hi == 0.0:
        return CurveSample(0.0, 1.0, _g(l, d, 0.0, 1.0), curve_slope(spec, 0.0, 1.0))

    def f(q: float) -> float:
        return _g(l, d, q, q - s)

    f_lo = f(0.0)
    if s == 0.0 and f_lo == 0.0:
        # the line runs into the excluded corner (0, 0); G < 0 next to it
        f_lo = -1.0
    root = _root_on_segment(f, 0.0, hi, f_lo, f(hi), tol, DEFAULT_MAX_ITER)
    if root is None:
        raise NotFoundError(
            f"the line q - p = {s!r} misses the E_{spec.m_low} = E_{spec.m_high} curve"
        )
    q = root.value
    p = q - s
    return CurveSample(q, p, root.residual, curve_slope(spec, q, p))


def trace_curve(
    spec: CurveSpec,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TRACE_TOL,
) -> list[CurveSample]:
    """Points along the curve ordered by increasing q.

    Samples are evenly spaced in ``s = q - p`` between the two endpoints, so
    the list is mapped onto itself by swapping q and p, and with an odd
    count the middle sample is the diagonal point. Points with s > 0 are the
    exact mirror images of those with s < 0.
    """
    if samples < 2:
        raise DomainError(f"samples must be >= 2, got {samples}")
    span = admissible_interval(spec, tol)[1]
    n = samples - 1
    out: list[CurveSample] = []
    for i in range(samples):
        j = n - i if 2 * i > n else i
        if j == 0:
            pt = CurveSample(0.0, span, _g(spec.m_low, spec.gap, 0.0, span),
                             curve_slope(spec, 0.0, span))
        else:
            pt = _sample_upper(spec, span * (2 * j - n) / n, tol)
        if j != i:
            pt = CurveSample(pt.p, pt.q, pt.residual, curve_slope(spec, pt.p, pt.q))
        out.append(pt)
    return out


def intersect_constraint(
    spec: CurveSpec, exponent: float, tol: float = DEFAULT_TRACE_TOL
) -> RootResult:
    """Where the one-parameter family ``p = q**exponent`` crosses the curve.

    The smallest crossing in (0, 1) is returned; ``meta`` carries p and the
    two energies at the crossing. With no crossing, the error message lists
    the sign pattern seen along the scan.
    """
    if not exponent > 0.0:
        raise DomainError(f"exponent must be positive, got {exponent}")
    l, d = spec.m_low, spec.gap

    def f(q: float) -> float:
        return _g(l, d, q, q**exponent)

    lo, hi = 1e-9, 1.0 - 1e-9
    roots = find_roots(f, lo, hi, DEFAULT_CELLS, residual_tol=tol)
    if not roots:
        signs = "".join("+" if f(x) > 0 else "-" for x in (lo, 0.25, 0.5, 0.75, hi))
        raise NotFoundError(
            f"p = q^{exponent} does not cross the E_{spec.m_low} = E_{spec.m_high} "
            f"curve in (0, 1); signs at q = {lo}, .25, .5, .75, {hi}: {signs}"
        )
    r = roots[0]
    dfm = RealDeformation(r.value, r.value**exponent)
    e_low, e_high = energy_qp(spec.m_low, dfm), energy_qp(spec.m_high, dfm)
    return RootResult(
        r.value,
        r.residual,
        r.bracket,
        r.iterations,
        r.count,
        meta={"p": dfm.p, "e_low": e_low, "e_high": e_high},
    )


def diagonal_point(spec: CurveSpec, tol: float = DEFAULT_TRACE_TOL) -> RootResult:
    """Point where the curve meets p = q (the Tamm-Dancoff oscillator)."""
    return intersect_constraint(spec, 1.0, tol)
