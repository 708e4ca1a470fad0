"""Gradient/growth-rate curves, monotonicity checks, and break tests.

Two complementary diagnostics for the "did growth change regime?" question:

* sampled gradient and growth-rate curves of a ratio model, with a strict
  monotonicity check: a regime change or takeoff would show up as a sign
  change or stationary point, and for a ratio of hyperbolic trajectories
  none can exist;
* a Chow-style structural-break test on observed data, comparing a single
  straight line in reciprocal space against two independent lines split at
  a candidate year via an F statistic on residual sums.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import HypergrowthError, InsufficientDataError, ValidationError
from .fitting import _line_sse
from .ratio import RatioModel, ratio_gradient, ratio_growth_rate, time_at_ratio
from .series import TimeSeries
from .special import f_survival

ABSCISSA_KINDS = ("time", "ratio_size")
QUANTITIES = ("gradient", "growth_rate", "value")

#: Candidate regime-boundary years commonly claimed in the growth literature.
DEFAULT_BREAK_CANDIDATES = (1750.0, 1870.0)

#: Conventional dating of the Industrial Revolution, annotated on reports.
INDUSTRIAL_REVOLUTION_WINDOW = (1760.0, 1840.0)

# An adjacent step only counts as strict if it exceeds this fraction of the
# larger of the two values compared. Pairwise scaling keeps the check strict
# up to float noise even on curves spanning many decades (e.g. a gradient
# sampled all the way to the singularity guard).
MONOTONICITY_TOLERANCE = 1e-12


class Monotonicity(str, enum.Enum):
    INCREASING = "monotone_increasing"
    DECREASING = "monotone_decreasing"
    NON_MONOTONE = "non_monotone"


class BreakDecision(str, enum.Enum):
    NO_BREAK = "no_break"
    BREAK_DETECTED = "break_detected"


@dataclass(frozen=True)
class DiagnosticsCurve:
    """A sampled (abscissa, value) curve for plot emission."""

    abscissa_kind: str
    quantity: str
    x: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if self.abscissa_kind not in ABSCISSA_KINDS:
            raise ValueError(f"abscissa_kind must be one of {ABSCISSA_KINDS}")
        if self.quantity not in QUANTITIES:
            raise ValueError(f"quantity must be one of {QUANTITIES}")
        x = np.array(self.x, dtype=float).reshape(-1)
        values = np.array(self.values, dtype=float).reshape(-1)
        x.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "values", values)
        if x.shape != values.shape:
            raise ValidationError("curve abscissa and values differ in length")
        if x.size > 1 and np.any(np.diff(x) <= 0):
            raise ValidationError("curve abscissa must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise ValidationError("curve values must be finite")

    def __len__(self) -> int:
        return self.x.size


@dataclass(frozen=True)
class MonotonicityResult:
    verdict: Monotonicity
    first_violation: int | None = None


@dataclass(frozen=True)
class BreakTestResult:
    """Single-line vs two-segment comparison at one candidate break year."""

    break_year: float
    sse_single: float
    sse_segmented: float
    f_statistic: float
    p_value: float
    decision: BreakDecision
    alpha: float


@dataclass(frozen=True)
class TakeoffScanEntry:
    """Outcome of one candidate year in a scan; failures carry a message."""

    candidate_year: float
    result: BreakTestResult | None = None
    error: str | None = None


def gradient_curve(m: RatioModel, grid) -> DiagnosticsCurve:
    """Sample the ratio's gradient over a strictly increasing time grid."""
    grid = np.asarray(grid, dtype=float)
    return DiagnosticsCurve(
        abscissa_kind="time", quantity="gradient", x=grid, values=ratio_gradient(m, grid)
    )


def growth_rate_curve(m: RatioModel, grid) -> DiagnosticsCurve:
    """Sample the ratio's growth rate over a strictly increasing time grid."""
    grid = np.asarray(grid, dtype=float)
    return DiagnosticsCurve(
        abscissa_kind="time",
        quantity="growth_rate",
        x=grid,
        values=ratio_growth_rate(m, grid),
    )


def curves_vs_size(m: RatioModel, levels) -> tuple[DiagnosticsCurve, DiagnosticsCurve]:
    """Gradient and growth-rate curves parametrized by ratio size.

    Each level is mapped to its crossing time, where both quantities are
    sampled; output is sorted by level. Unattainable levels raise.
    """
    levels = np.sort(np.asarray(levels, dtype=float))
    if levels.size > 1 and np.any(np.diff(levels) == 0):
        raise ValidationError("levels must be distinct")
    times = np.array([time_at_ratio(m, level) for level in levels])
    grad = np.atleast_1d(np.asarray(ratio_gradient(m, times), dtype=float))
    rate = np.atleast_1d(np.asarray(ratio_growth_rate(m, times), dtype=float))
    return (
        DiagnosticsCurve("ratio_size", "gradient", levels, grad),
        DiagnosticsCurve("ratio_size", "growth_rate", levels, rate),
    )


def monotonicity_check(curve: DiagnosticsCurve) -> MonotonicityResult:
    """Strict monotonicity verdict with the earliest violating index.

    An adjacent step only counts as increasing (decreasing) if it exceeds
    the float-noise tolerance relative to the values compared. When neither
    direction holds throughout, the reported index is the right-hand point
    of the first adjacent pair that breaks the direction set by the first
    step; a tie on the first step violates immediately.
    """
    if len(curve) < 2:
        raise InsufficientDataError("monotonicity check needs at least 2 samples")
    values = curve.values
    diffs = np.diff(values)
    tol = MONOTONICITY_TOLERANCE * np.maximum(np.abs(values[1:]), np.abs(values[:-1]))
    increasing = diffs > tol
    decreasing = diffs < -tol
    if increasing.all():
        return MonotonicityResult(Monotonicity.INCREASING)
    if decreasing.all():
        return MonotonicityResult(Monotonicity.DECREASING)
    if increasing[0]:
        first_bad = int(np.argmin(increasing))
    elif decreasing[0]:
        first_bad = int(np.argmin(decreasing))
    else:
        first_bad = 0
    return MonotonicityResult(Monotonicity.NON_MONOTONE, first_violation=first_bad + 1)


def series_growth_rate(series: TimeSeries) -> DiagnosticsCurve:
    """Growth rate estimated from raw data by centered log-differences.

    ln(y_{i+1}/y_{i-1}) / (t_{i+1} - t_{i-1}), a symmetric estimator that
    tolerates the uneven year spacing of historical tables. Defined on the
    interior points only.
    """
    if len(series) < 3:
        raise InsufficientDataError(
            f"series {series.name!r}: need at least 3 points for a centered growth rate"
        )
    t = series.years
    y = series.values
    rate = np.log(y[2:] / y[:-2]) / (t[2:] - t[:-2])
    return DiagnosticsCurve("time", "growth_rate", t[1:-1], rate)


def break_test(series: TimeSeries, break_year: float, alpha: float = 0.05) -> BreakTestResult:
    """Chow-style test for a structural break at ``break_year``.

    The series is transformed to reciprocal space, where the no-break null
    is a single straight line. The F statistic compares that line's residual
    sum against two independently fitted lines split at the break year
    (observations exactly at the break year join the second segment), with
    2 restrictions and n-4 denominator degrees of freedom. Noiseless data
    that a single line explains exactly carries no evidence of a break:
    the statistic is defined as 0 and the p-value as 1.
    """
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    t = series.years
    z = 1.0 / series.values
    before = t < break_year
    after = t > break_year
    if before.sum() < 3 or after.sum() < 3:
        raise InsufficientDataError(
            f"series {series.name!r}: need at least 3 points strictly on each side "
            f"of {break_year:g}, got {int(before.sum())} before and {int(after.sum())} after"
        )
    second = ~before
    sse_single = _line_sse(t, z)
    sse_segmented = _line_sse(t[before], z[before]) + _line_sse(t[second], z[second])

    n = len(series)
    scale = float(np.sum((z - z.mean()) ** 2))
    if scale <= 0.0 or sse_single <= 1e-20 * scale:
        f_stat, p_value = 0.0, 1.0
    elif sse_segmented == 0.0:
        f_stat, p_value = float("inf"), 0.0
    else:
        f_stat = max(0.0, (sse_single - sse_segmented) / 2.0 / (sse_segmented / (n - 4)))
        p_value = f_survival(f_stat, 2.0, float(n - 4))
    decision = (
        BreakDecision.BREAK_DETECTED if p_value < alpha else BreakDecision.NO_BREAK
    )
    return BreakTestResult(
        break_year=float(break_year),
        sse_single=sse_single,
        sse_segmented=sse_segmented,
        f_statistic=f_stat,
        p_value=p_value,
        decision=decision,
        alpha=alpha,
    )


def takeoff_scan(
    series: TimeSeries,
    candidate_years=DEFAULT_BREAK_CANDIDATES,
    alpha: float = 0.05,
) -> list[TakeoffScanEntry]:
    """Run the break test at each candidate year, collecting failures.

    A candidate that cannot be tested (e.g. too few points on one side)
    yields an entry with an error message instead of aborting the scan.
    """
    entries: list[TakeoffScanEntry] = []
    for year in candidate_years:
        try:
            result = break_test(series, float(year), alpha=alpha)
            entries.append(TakeoffScanEntry(candidate_year=float(year), result=result))
        except HypergrowthError as exc:
            entries.append(TakeoffScanEntry(candidate_year=float(year), error=str(exc)))
    return entries
