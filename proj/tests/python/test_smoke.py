"""Smoke tests for the Python extension module."""

import math

import pytest

import ropebound as rb


def test_standard_schedule():
    sched = rb.make_standard(10000.0, 4)
    assert sched.d == 4
    assert sched.thetas == [1.0, 0.01]
    assert sched.recipe == "std:10000"
    assert len(sched) == 2


def test_schedule_validation():
    with pytest.raises(ValueError):
        rb.make_standard(10000.0, 3)
    with pytest.raises(ValueError):
        rb.make_custom([])


def test_spec_parsing_and_scaling():
    pi = rb.parse_schedule_spec("pi:10000:8", d=4)
    assert pi.thetas == [0.125, 0.00125]
    assert math.isclose(rb.ntk_base(10000.0, 8.0, 128), 82684.62264056222, rel_tol=1e-12)
    m2 = rb.parse_schedule_spec("method2")
    assert m2.d == 128 and m2.thetas[0] == 1.0


def test_rotation_and_score():
    sched = rb.make_custom([1.0])
    rotated = rb.rotate([1.0, 0.0], 2, sched)
    assert math.isclose(rotated[0], math.cos(2.0), rel_tol=1e-12)
    assert math.isclose(rotated[1], math.sin(2.0), rel_tol=1e-12)
    assert math.isclose(
        rb.attention_score([1.0, 0.0], [1.0, 0.0], 3, sched), math.cos(3.0), rel_tol=1e-12
    )


def test_b_value_and_curve():
    sched = rb.make_standard(10000.0, 128)
    assert rb.b_value(sched, 0) == 64.0
    curve = rb.sample_curve(sched, rb.CurveMetric.B_VALUE, 100, stride=101)
    assert curve.points == [(0, 64.0)]
    assert curve.csv().startswith("m,value\n0,64\n")
    assert rb.upper_bound_factor(sched, 0) == 2080.0


def test_violation_scan():
    tiny = rb.make_custom([1.0])
    assert rb.violation_count(tiny, 1, 10) == 6
    assert rb.first_violation(tiny, 1, 100) == 2
    assert rb.first_violation(rb.make_standard(10000.0, 128), 1, 1000) is None


def test_effective_length():
    result = rb.effective_length(rb.make_standard(500.0, 128), 100000)
    assert result.effective_length == 170
    assert result.first_violation_m == 171
    assert result.base_or_schedule == "std:500"

    censored = rb.effective_length(rb.make_standard(10000.0, 128), 1000)
    assert censored.effective_length == 1000
    assert censored.first_violation_m is None


def test_lower_bound_base():
    result = rb.lower_bound_base(1024, d=128)
    assert result.verified
    assert result.bracket_lo <= result.base <= result.bracket_hi
    assert 4.0e3 < result.base < 4.6e3
    with pytest.raises(rb.UnattainableError):
        rb.lower_bound_base(2, d=2)


def test_estimate_gap_deterministic():
    sched = rb.make_standard(10000.0, 64)
    cfg = rb.McConfig(n_samples=20000, seed=7)
    first = rb.estimate_gap(sched, 0, cfg)
    second = rb.estimate_gap(sched, 0, cfg)
    assert first.gap_hat == second.gap_hat
    assert first.theory == 64.0
    assert abs(first.z) <= 4.0
    assert first.stderr > 0.0


def test_estimate_gap_hetero():
    sched = rb.make_custom([1.0, 0.01])
    cfg = rb.McConfig(n_samples=20000, seed=3)
    report = rb.estimate_gap_hetero(sched, 2, [1.0, 0.0, 0.0, 1.0], cfg)
    assert math.isclose(report.theory, math.cos(2.0) + math.cos(0.02), rel_tol=1e-12)
    assert abs(report.z) <= 4.0


def test_argmax_win_rate():
    sched = rb.make_standard(500.0, 128)
    cfg = rb.McConfig(n_samples=2000, seed=5, eps_scale=0.0)
    assert rb.argmax_win_rate(sched, 0, 16, cfg) >= 0.99


def test_ood_report():
    sched = rb.make_standard(10000.0, 128)
    report = rb.ood_report(sched, 4096, sched, 32768)
    assert report.any_ood
    last = report.per_dim[-1]
    assert last.dim == 63 and last.ood and not last.full_period_covered
    assert report.csv().splitlines()[0] == (
        "dim,trained_max_angle,extended_max_angle,full_period_covered,ood"
    )

    small = rb.make_standard(500.0, 128)
    assert not rb.ood_report(small, 4096, small, 1 << 20).any_ood
