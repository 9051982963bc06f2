"""Spectra and accidental energy-level degeneracies of deformed oscillators."""

from .bm import AngleFamily, degeneracy_angle, level_difference_closed, verify_degeneracy
from .brackets import (
    PhaseDeformation,
    RealDeformation,
    TDDeformation,
    bm_bracket_phase,
    bm_bracket_real,
    bracket_factorial,
    qp_bracket,
    td_bracket,
)
from .errors import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    NotFoundError,
    QPDegenError,
)
from .numerics import Bracket, Polynomial, RootResult, bisect, central_diff, horner_eval, scan_brackets
from .qp import (
    CurveSample,
    CurveSpec,
    SingularSlopeError,
    curve_slope,
    degeneracy_function,
    diagonal_point,
    endpoint_qm,
    intersect_constraint,
    solve_p_for_q,
    trace_curve,
)
from .spectrum import (
    EnergyLevel,
    TruncatedRep,
    build_truncated_rep,
    defining_relation_residual,
    energy_bm,
    energy_qp,
    energy_td,
    spectrum_table,
)
from .td import (
    DegeneracyPair,
    closed_form_k1,
    closed_form_k2,
    degeneracy_polynomial,
    solve_degeneracy,
    table_E0_Em,
)

__version__ = "0.1.0"
