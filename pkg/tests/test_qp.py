import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpdegen.errors import DomainError, NotFoundError
from qpdegen.numerics import central_diff
from qpdegen.qp import (
    CurveSpec,
    SingularSlopeError,
    admissible_interval,
    curve_slope,
    degeneracy_function,
    diagonal_point,
    endpoint_qm,
    intersect_constraint,
    partial_p,
    partial_q,
    solve_p_for_q,
    trace_curve,
)
from qpdegen.td import closed_form_k1, table_E0_Em

from conftest import F_adj_literal, F_general_literal, F_m0_literal

GOLDEN = (math.sqrt(5) - 1) / 2


def f20(q):
    return (-1 - q + math.sqrt((1 + q) * (1 - 3 * q) + 4)) / 2


def test_curve_spec_validation():
    for bad in [(-1, 2), (3, 3), (4, 2), (0, 1)]:
        with pytest.raises(DomainError):
            CurveSpec(*bad)
    assert CurveSpec(0, 5).family == "ground"
    assert CurveSpec(3, 4).family == "adjacent"
    s = CurveSpec(2, 5)
    assert s.family == "general" and not s.proven and s.gap == 3


def test_function_examples():
    assert abs(degeneracy_function(CurveSpec(0, 2), 1 / 3, 1 / 3)) < 1e-15
    assert degeneracy_function(CurveSpec(1, 2), 0.0, 1.0) == 0.0
    assert degeneracy_function(CurveSpec(2, 3), 1.0, 1.0) == 2.0
    with pytest.raises(DomainError):
        degeneracy_function(CurveSpec(0, 2), 0.0, 0.0)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 8), st.integers(1, 8), st.floats(0, 1), st.floats(0, 1))
def test_function_matches_literal_sums(lo, gap, q, p):
    if (q == 0 and p == 0) or (lo == 0 and gap == 1):
        return
    spec = CurveSpec(lo, lo + gap)
    ref = F_general_literal(lo, lo + gap, q, p)
    assert abs(degeneracy_function(spec, q, p) - ref) < 1e-13 * (lo + gap + 2) ** 2
    if lo == 0:
        assert abs(F_m0_literal(gap, q, p) - ref) < 1e-13 * (gap + 2) ** 2
    if gap == 1:
        assert abs(F_adj_literal(lo, q, p) - ref) < 1e-13 * (lo + 2) ** 2


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 6), st.integers(1, 6), st.floats(0.05, 0.95), st.floats(0.05, 0.95))
def test_function_symmetric_and_partials(lo, gap, q, p):
    if lo == 0 and gap == 1:
        return
    spec = CurveSpec(lo, lo + gap)
    assert abs(degeneracy_function(spec, q, p) - degeneracy_function(spec, p, q)) < 1e-13
    h = 1e-6
    fd_q = (F_general_literal(lo, lo + gap, q + h, p) - F_general_literal(lo, lo + gap, q - h, p)) / (2 * h)
    fd_p = (F_general_literal(lo, lo + gap, q, p + h) - F_general_literal(lo, lo + gap, q, p - h)) / (2 * h)
    assert abs(partial_q(spec, q, p) - fd_q) < 1e-7 * (lo + gap + 2) ** 2
    assert abs(partial_p(spec, q, p) - fd_p) < 1e-7 * (lo + gap + 2) ** 2


def test_solve_p_examples():
    assert abs(solve_p_for_q(CurveSpec(0, 2), 0.0).value - GOLDEN) < 1e-15
    p = solve_p_for_q(CurveSpec(0, 2), 0.2).value
    assert abs(p - (-1.2 + math.sqrt(1.2 * 0.4 + 4)) / 2) < 1e-15
    assert solve_p_for_q(CurveSpec(1, 2), 1.0).value == 0.0
    assert solve_p_for_q(CurveSpec(3, 4), 0.0).value == 1.0


def test_solve_p_errors():
    with pytest.raises(NotFoundError, match="admissible"):
        solve_p_for_q(CurveSpec(0, 2), 0.9)
    with pytest.raises(DomainError):
        solve_p_for_q(CurveSpec(0, 2), 1.5)


@pytest.mark.parametrize("m", range(2, 11))
def test_solve_p_points_lie_on_curve(m):
    for spec in (CurveSpec(0, m), CurveSpec(m - 1, m)):
        hi = admissible_interval(spec)[1]
        for i in range(1, 10):
            q = hi * i / 10
            p = solve_p_for_q(spec, q).value
            lit = F_m0_literal(m, q, p) if spec.m_low == 0 else F_adj_literal(m - 1, q, p)
            assert abs(lit) < 1e-12
            assert 0.0 <= p <= 1.0


def test_endpoint_qm():
    assert abs(endpoint_qm(2).value - GOLDEN) < 1e-15
    assert abs(endpoint_qm(3).value - 0.7548776662466927600) < 1e-15
    chain = [endpoint_qm(m).value for m in range(2, 40)]
    assert all(a < b < 1.0 for a, b in zip(chain, chain[1:]))
    with pytest.raises(DomainError):
        endpoint_qm(1)


def test_trace_examples():
    pts = trace_curve(CurveSpec(0, 2), 3)
    assert pts[0].q == 0.0 and abs(pts[0].p - GOLDEN) < 1e-15
    assert abs(pts[1].q - 1 / 3) < 1e-15 and abs(pts[1].p - 1 / 3) < 1e-15
    assert abs(pts[2].q - GOLDEN) < 1e-15 and pts[2].p == 0.0

    pts = trace_curve(CurveSpec(1, 2), 2)
    assert [(s.q, s.p) for s in pts] == [(0.0, 1.0), (1.0, 0.0)]


def test_trace_symmetric():
    pts = trace_curve(CurveSpec(4, 5), 5)
    fwd = [(s.q, s.p) for s in pts]
    assert [(p, q) for q, p in reversed(fwd)] == fwd


def test_trace_f20_explicit():
    for s in trace_curve(CurveSpec(0, 2), 256):
        assert abs(s.p - f20(s.q)) < 1e-14


@pytest.mark.parametrize("m", range(2, 11))
@pytest.mark.parametrize("family", ["ground", "adjacent"])
def test_trace_invariants(m, family):
    spec = CurveSpec(0, m) if family == "ground" else CurveSpec(m - 1, m)
    pts = trace_curve(spec, 256)
    qs = [s.q for s in pts]
    ps = [s.p for s in pts]
    # for m >= 8 neighbouring samples near p = 1 (and, mirrored, q = 1)
    # can be closer than one ulp, so only weak ordering is attainable there
    assert all(a <= b for a, b in zip(qs, qs[1:]))
    assert all(a >= b for a, b in zip(ps, ps[1:]))
    if m <= 7:
        assert all(a < b for a, b in zip(qs, qs[1:]))
        assert all(a > b for a, b in zip(ps, ps[1:]))
    for s in pts:
        assert 0.0 <= s.q <= 1.0 and 0.0 <= s.p <= 1.0
        assert abs(s.residual) < 1e-12
    assert all(s.dpdq < 0 for s in pts[1:-1])


def test_trace_general_pair_runs():
    pts = trace_curve(CurveSpec(2, 5), 33)
    assert all(abs(s.residual) < 1e-12 for s in pts)


def test_trace_rejects_too_few_samples():
    with pytest.raises(DomainError):
        trace_curve(CurveSpec(0, 2), 1)


def test_slope_examples():
    q = closed_form_k1(1)
    assert abs(curve_slope(CurveSpec(1, 2), q, q) + 1) < 1e-12
    assert abs(curve_slope(CurveSpec(1, 2), 0.0, 1.0) + 0.5) < 1e-15
    assert abs(curve_slope(CurveSpec(1, 2), 1.0, 0.0) + 2.0) < 1e-15
    expected = -(2 * GOLDEN + 1) / (GOLDEN + 1)
    assert abs(curve_slope(CurveSpec(0, 2), GOLDEN, 0.0) - expected) < 1e-14
    assert abs(expected + 1.382) < 1e-3
    assert abs(curve_slope(CurveSpec(0, 2), 1 / 3, 1 / 3) - central_diff(f20, 1 / 3)) < 1e-5


def test_slope_vertical_tangent():
    # dG/dp vanishes at (1, 0) on the m >= 2 adjacent curves
    assert curve_slope(CurveSpec(2, 3), 1.0, 0.0) == -math.inf
    assert curve_slope(CurveSpec(2, 3), 0.0, 1.0) == 0.0


def test_slope_singular():
    # both partials vanish next to the excluded corner
    with pytest.raises(SingularSlopeError):
        curve_slope(CurveSpec(3, 4), 0.0, 1e-300)


def test_diagonal_points():
    for m in range(2, 11):
        (_, r), = table_E0_Em([m])
        assert abs(diagonal_point(CurveSpec(0, m)).value - r.value) < 1e-12
        assert abs(diagonal_point(CurveSpec(m, m + 1)).value - closed_form_k1(m)) < 1e-12


def test_intersections():
    a = intersect_constraint(CurveSpec(0, 3), 5)
    b = intersect_constraint(CurveSpec(4, 5), 5)
    # 40-digit mpmath roots
    assert abs(a.value - 0.68371562019212128) < 1e-12
    assert abs(b.value - 0.92145388462621145) < 1e-12
    for r in (a, b):
        assert abs(r.meta["e_high"] - r.meta["e_low"]) < 1e-10
        assert r.meta["p"] == r.value**5
    assert abs(intersect_constraint(CurveSpec(4, 5), 1).value - math.sqrt(4 / 6)) < 1e-12


def test_intersection_errors():
    with pytest.raises(DomainError):
        intersect_constraint(CurveSpec(0, 3), 0.0)
    with pytest.raises(NotFoundError, match="signs"):
        # q^200 is ~0 before q_3 and E_3 < E_0 along the q-axis past it
        intersect_constraint(CurveSpec(0, 2), 1e-3)
