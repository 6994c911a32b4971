"""Rotation-angle schedule analysis toolkit.

Construct rotary-embedding frequency schedules, evaluate their long-range
discrimination decay, solve base lower bounds for a target context length,
verify the discrimination gap by Monte Carlo and run rotation-angle
out-of-distribution diagnostics.
"""

from ._ropebound import (
    BoundResult,
    ComponentDist,
    CurveMetric,
    CurveSamples,
    LengthResult,
    McConfig,
    McReport,
    OodDimension,
    OodReport,
    ThetaSchedule,
    UnattainableError,
    argmax_win_rate,
    attention_score,
    b_value,
    effective_length,
    estimate_gap,
    estimate_gap_hetero,
    first_violation,
    load_custom_csv,
    lower_bound_base,
    make_custom,
    make_method1,
    make_method2,
    make_ntk_scaled,
    make_pi_scaled,
    make_standard,
    ntk_base,
    ood_report,
    parse_schedule_spec,
    rotate,
    sample_curve,
    table2,
    upper_bound_factor,
    violation_count,
    weighted_b_value,
)

__all__ = [
    "BoundResult",
    "ComponentDist",
    "CurveMetric",
    "CurveSamples",
    "LengthResult",
    "McConfig",
    "McReport",
    "OodDimension",
    "OodReport",
    "ThetaSchedule",
    "UnattainableError",
    "argmax_win_rate",
    "attention_score",
    "b_value",
    "effective_length",
    "estimate_gap",
    "estimate_gap_hetero",
    "first_violation",
    "load_custom_csv",
    "lower_bound_base",
    "make_custom",
    "make_method1",
    "make_method2",
    "make_ntk_scaled",
    "make_pi_scaled",
    "make_standard",
    "ntk_base",
    "ood_report",
    "parse_schedule_spec",
    "rotate",
    "sample_curve",
    "table2",
    "upper_bound_factor",
    "violation_count",
    "weighted_b_value",
]

__version__ = "0.1.0"
