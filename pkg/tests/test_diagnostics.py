import numpy as np
import pytest

from hypergrowth import (
    BreakDecision,
    DiagnosticsCurve,
    DomainError,
    InsufficientDataError,
    Monotonicity,
    NoSolutionError,
    TimeSeries,
    ValidationError,
    break_test,
    curves_vs_size,
    eval_ratio,
    gradient_curve,
    growth_rate_curve,
    make_ratio,
    monotonicity_check,
    series_growth_rate,
    synthesize,
    takeoff_scan,
    time_at_ratio,
)

from conftest import F_PARAMS


def kinked_reciprocal_series(years, seed=7, sigma=0.005, name="control"):
    """Two reciprocal-space slopes, -2e-3 before 1750 and -4e-3 after,
    continuous at the kink; multiplicative noise on the values."""
    z = np.where(years < 1750.0, 5.0 - 2e-3 * years, 8.5 - 4e-3 * years)
    rng = np.random.default_rng(seed)
    values = (1.0 / z) * np.exp(rng.normal(0.0, sigma, years.size))
    return TimeSeries(years=years, values=values, name=name)


class TestCurves:
    def test_gradient_single_point(self, escalating_model):
        curve = gradient_curve(escalating_model, [0.0])
        assert curve.abscissa_kind == "time"
        assert curve.quantity == "gradient"
        assert curve.values[0] == pytest.approx(3.25e-4 / 20.25, rel=1e-10)

    def test_constant_model_curves_are_zero(self, f_params):
        m = make_ratio(f_params, f_params)
        grid = np.linspace(0.0, 2000.0, 50)
        assert np.all(gradient_curve(m, grid).values == 0.0)
        assert np.all(growth_rate_curve(m, grid).values == 0.0)

    def test_gradient_grows_with_time(self, escalating_model):
        curve = gradient_curve(escalating_model, [1000.0, 1900.0])
        assert curve.values[1] > curve.values[0]

    def test_growth_rate_single_point(self, escalating_model):
        curve = growth_rate_curve(escalating_model, [0.0])
        expected = 2.2e-3 / 4.5 - 3.35e-3 / 7.0
        assert curve.values[0] == pytest.approx(expected, rel=1e-10)

    def test_out_of_domain_grid(self, escalating_model):
        with pytest.raises(DomainError):
            gradient_curve(escalating_model, [1000.0, 2050.0])

    def test_unsorted_grid_rejected(self, escalating_model):
        with pytest.raises(ValidationError):
            gradient_curve(escalating_model, [1900.0, 1000.0])


class TestCurvesVsSize:
    def test_level_two_maps_through_crossing_time(self, escalating_model):
        grad_curve, rate_curve = curves_vs_size(escalating_model, [2.0])
        t = time_at_ratio(escalating_model, 2.0)
        assert t == pytest.approx(1904.7619047619048, rel=1e-9)
        from hypergrowth import ratio_gradient, ratio_growth_rate

        assert grad_curve.values[0] == pytest.approx(
            ratio_gradient(escalating_model, t), rel=1e-12
        )
        assert rate_curve.values[0] == pytest.approx(
            ratio_growth_rate(escalating_model, t), rel=1e-12
        )

    def test_unsorted_levels_are_sorted(self, escalating_model):
        grad_curve, _ = curves_vs_size(escalating_model, [2.2, 1.6, 2.0, 1.8])
        np.testing.assert_allclose(grad_curve.x, [1.6, 1.8, 2.0, 2.2])

    def test_both_curves_increase_with_level(self, escalating_model):
        grad_curve, rate_curve = curves_vs_size(escalating_model, [1.6, 1.8, 2.0, 2.2])
        assert np.all(np.diff(grad_curve.values) > 0)
        assert np.all(np.diff(rate_curve.values) > 0)

    def test_levels_round_trip_through_eval(self, escalating_model):
        levels = np.array([1.6, 1.8, 2.0, 2.2, 5.0, 50.0])
        _, rate_curve = curves_vs_size(escalating_model, levels)
        for level in rate_curve.x:
            t = time_at_ratio(escalating_model, level)
            assert eval_ratio(escalating_model, t) == pytest.approx(level, rel=1e-9)

    def test_unattainable_level_propagates(self, escalating_model):
        with pytest.raises(NoSolutionError):
            curves_vs_size(escalating_model, [2.0, 1.0])

    def test_duplicate_levels_rejected(self, escalating_model):
        with pytest.raises(ValidationError):
            curves_vs_size(escalating_model, [2.0, 2.0])


class TestMonotonicityCheck:
    def test_escalating_gradient_is_increasing(self, escalating_model):
        grid = np.linspace(0.0, 2040.0, 512)
        result = monotonicity_check(gradient_curve(escalating_model, grid))
        assert result.verdict is Monotonicity.INCREASING
        assert result.first_violation is None

    def test_tie_is_non_monotone_at_index_one(self):
        curve = DiagnosticsCurve("time", "value", [0.0, 1.0], [1.0, 1.0])
        result = monotonicity_check(curve)
        assert result.verdict is Monotonicity.NON_MONOTONE
        assert result.first_violation == 1

    def test_diminishing_gradient_is_decreasing(self, diminishing_model):
        grid = np.linspace(0.0, 2040.0, 256)
        result = monotonicity_check(gradient_curve(diminishing_model, grid))
        assert result.verdict is Monotonicity.DECREASING

    def test_rise_then_fall_reports_first_fall(self):
        curve = DiagnosticsCurve("time", "value", [0.0, 1.0, 2.0, 3.0], [1.0, 2.0, 3.0, 2.5])
        result = monotonicity_check(curve)
        assert result.verdict is Monotonicity.NON_MONOTONE
        assert result.first_violation == 3

    def test_single_sample_rejected(self):
        curve = DiagnosticsCurve("time", "value", [0.0], [1.0])
        with pytest.raises(InsufficientDataError):
            monotonicity_check(curve)


class TestSeriesGrowthRate:
    def test_centered_log_differences(self):
        series = TimeSeries(years=[0.0, 1.0, 3.0], values=[1.0, 2.0, 8.0])
        curve = series_growth_rate(series)
        np.testing.assert_allclose(curve.x, [1.0])
        assert curve.values[0] == pytest.approx(np.log(8.0) / 3.0)

    def test_matches_model_rate_on_dense_synthetic_data(self, escalating_model):
        grid = np.linspace(0.0, 1900.0, 2000)
        ratio_values = eval_ratio(escalating_model, grid)
        series = TimeSeries(years=grid, values=ratio_values)
        curve = series_growth_rate(series)
        from hypergrowth import ratio_growth_rate

        expected = ratio_growth_rate(escalating_model, curve.x)
        np.testing.assert_allclose(curve.values, expected, rtol=1e-4)

    def test_needs_three_points(self):
        with pytest.raises(InsufficientDataError):
            series_growth_rate(TimeSeries(years=[0.0, 1.0], values=[1.0, 2.0]))


class TestBreakTest:
    def test_noiseless_hyperbolic_has_no_break(self):
        series = synthesize(F_PARAMS, np.linspace(1500.0, 1950.0, 31))
        result = break_test(series, 1750.0)
        assert result.decision is BreakDecision.NO_BREAK
        assert result.f_statistic == 0.0
        assert result.p_value == 1.0
        assert result.sse_single < 1e-20

    def test_noisy_null_rarely_flags(self):
        # smoke version of the calibration study: 300 trials at alpha=0.05
        years = np.linspace(1500.0, 1950.0, 31)
        clean = 1.0 / (F_PARAMS.a - F_PARAMS.k * years)
        rng = np.random.default_rng(20260810)
        flags = 0
        for _ in range(300):
            values = clean * np.exp(rng.normal(0.0, 0.005, years.size))
            result = break_test(TimeSeries(years=years, values=values), 1750.0)
            flags += result.decision is BreakDecision.BREAK_DETECTED
        assert flags / 300 <= 0.06  # no_break in at least 94% of trials

    def test_positive_control_detected(self):
        series = kinked_reciprocal_series(np.linspace(1500.0, 1950.0, 31))
        result = break_test(series, 1750.0)
        assert result.decision is BreakDecision.BREAK_DETECTED
        assert result.p_value < 0.01

    def test_segmented_never_worse_than_single(self):
        years = np.linspace(1200.0, 1950.0, 40)
        clean = 1.0 / (F_PARAMS.a - F_PARAMS.k * years)
        for seed in range(50):
            noise_rng = np.random.default_rng(seed)
            values = clean * np.exp(noise_rng.normal(0.0, 0.02, years.size))
            result = break_test(TimeSeries(years=years, values=values), 1750.0)
            assert result.sse_segmented <= result.sse_single * (1 + 1e-12)
            assert 0.0 <= result.p_value <= 1.0

    def test_insufficient_segments(self):
        series = synthesize(F_PARAMS, np.linspace(1800.0, 1950.0, 12))
        with pytest.raises(InsufficientDataError):
            break_test(series, 1750.0)

    def test_points_at_break_year_join_second_segment(self):
        years = np.array([1600.0, 1650.0, 1700.0, 1750.0, 1800.0, 1850.0, 1900.0])
        series = synthesize(F_PARAMS, years)
        # 3 strictly before, 3 strictly after; the 1750 point itself rides along
        result = break_test(series, 1750.0)
        assert result.decision is BreakDecision.NO_BREAK


class TestTakeoffScan:
    def test_noiseless_synthetic_passes_both_defaults(self):
        series = synthesize(F_PARAMS, np.linspace(1500.0, 1950.0, 31))
        entries = takeoff_scan(series)
        assert [e.candidate_year for e in entries] == [1750.0, 1870.0]
        for entry in entries:
            assert entry.result.decision is BreakDecision.NO_BREAK
            assert entry.error is None

    def test_empty_candidates(self):
        series = synthesize(F_PARAMS, np.linspace(1500.0, 1950.0, 31))
        assert takeoff_scan(series, candidate_years=()) == []

    def test_positive_control_flags_1750_but_not_1870(self):
        # short pre-kink arm keeps the 1870 split uninformative; see notes on
        # construction: p(1750) < 1e-3 and p(1870) > 0.05 across noise seeds
        series = kinked_reciprocal_series(np.linspace(1700.0, 1900.0, 15), seed=7)
        entries = takeoff_scan(series, (1750.0, 1870.0))
        by_year = {e.candidate_year: e.result for e in entries}
        assert by_year[1750.0].decision is BreakDecision.BREAK_DETECTED
        assert by_year[1750.0].p_value < 0.01
        assert by_year[1870.0].decision is BreakDecision.NO_BREAK

    def test_errors_collected_not_fatal(self):
        series = synthesize(F_PARAMS, np.linspace(1500.0, 1950.0, 31))
        entries = takeoff_scan(series, (1750.0, 1949.0))
        assert entries[0].result is not None
        assert entries[1].result is None
        assert "strictly on each side" in entries[1].error
