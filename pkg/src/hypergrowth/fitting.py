"""Parameter estimation by linear least squares on reciprocal values.

A hyperbolic growth trajectory is uniquely identified by its reciprocal
values, which fall on the straight line a - k*t. Fitting therefore reduces
to a line fit of 1/y against t: the intercept estimates a, the negated
slope estimates k, and the singularity time follows as a/k. Data whose
reciprocal regression does not produce a positive intercept and a negative
slope are not hyperbolic-growth-shaped and are rejected rather than forced.

Two weighting modes are supported. ``unweighted`` is ordinary least squares
in reciprocal space; ``size_squared`` weights each squared reciprocal
residual by y_i**2, which counteracts the reciprocal transform's tendency
to over-weight small early values and approximates least squares in the
original space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import SINGULARITY_GUARD, HyperbolicParams, eval_hyperbolic, reciprocal_value
from .errors import FitRejectedError, InsufficientDataError
from .ratio import RatioModel, eval_ratio, make_ratio
from .series import TimeSeries

WEIGHTINGS = ("unweighted", "size_squared")


@dataclass(frozen=True)
class HyperbolicFit:
    """A fitted trajectory plus reciprocal-space residual statistics.

    ``residuals`` are per-point 1/y_i - (a - k*t_i); with an intercept in
    the model their weighted sum is zero by construction.
    """

    params: HyperbolicParams
    residuals: np.ndarray
    rmse_reciprocal: float
    r_squared_reciprocal: float
    n_points: int
    weighting: str

    @property
    def t_s(self) -> float:
        """Singularity time a/k of the fitted trajectory."""
        return self.params.singularity_time


@dataclass(frozen=True)
class RatioFit:
    """A ratio model assembled from two independently fitted series.

    Residuals compare the observed numerator/denominator quotient against
    the model ratio, on common years inside the model's valid domain.
    """

    model: RatioModel
    numerator_fit: HyperbolicFit
    denominator_fit: HyperbolicFit
    common_years: np.ndarray
    observed_ratio: np.ndarray
    predicted_ratio: np.ndarray
    residuals: np.ndarray


def _weighted_line(t: np.ndarray, z: np.ndarray, w: np.ndarray) -> tuple[float, float]:
    """Weighted least-squares line z ~ intercept + slope*t.

    Centered normal equations; well conditioned for year-scale abscissas.
    """
    sw = w.sum()
    tbar = (w * t).sum() / sw
    zbar = (w * z).sum() / sw
    dt = t - tbar
    slope = (w * dt * (z - zbar)).sum() / (w * dt * dt).sum()
    return zbar - slope * tbar, slope


def _line_sse(t: np.ndarray, z: np.ndarray) -> float:
    """Sum of squared residuals of the unweighted line fit z ~ t."""
    intercept, slope = _weighted_line(t, z, np.ones_like(t))
    r = z - (intercept + slope * t)
    return float(r @ r)


def fit_hyperbolic(series: TimeSeries, weighting: str = "unweighted") -> HyperbolicFit:
    """Estimate (a, k) from a series by reciprocal-space line regression."""
    if weighting not in WEIGHTINGS:
        raise ValueError(f"unknown weighting {weighting!r}; expected one of {WEIGHTINGS}")
    if len(series) < 3:
        raise InsufficientDataError(
            f"series {series.name!r}: need at least 3 points to fit, got {len(series)}"
        )
    t = series.years
    z = 1.0 / series.values
    w = series.values**2 if weighting == "size_squared" else np.ones_like(z)

    intercept, slope = _weighted_line(t, z, w)
    a_hat, k_hat = intercept, -slope
    if a_hat <= 0 or k_hat <= 0:
        raise FitRejectedError(
            f"series {series.name!r}: reciprocal regression gave a={a_hat:.6g}, "
            f"k={k_hat:.6g}; data is not hyperbolic-growth-shaped"
        )
    params = HyperbolicParams(a=a_hat, k=k_hat)

    residuals = z - (a_hat - k_hat * t)
    sse = float((w * residuals**2).sum())
    zbar = float((w * z).sum() / w.sum())
    sst = float((w * (z - zbar) ** 2).sum())
    r_squared = 1.0 - sse / sst if sst > 0 else 1.0
    rmse = float(np.sqrt(sse / w.sum()))
    return HyperbolicFit(
        params=params,
        residuals=residuals,
        rmse_reciprocal=rmse,
        r_squared_reciprocal=r_squared,
        n_points=len(series),
        weighting=weighting,
    )


def fit_ratio(
    numerator: TimeSeries, denominator: TimeSeries, weighting: str = "unweighted"
) -> RatioFit:
    """Fit both series and assemble their ratio model.

    Also reports observed-vs-model ratio residuals on the common years;
    common years at or past the fitted model's domain end are left out of
    the residual report since the model has no value there.
    """
    num_fit = fit_hyperbolic(numerator, weighting)
    den_fit = fit_hyperbolic(denominator, weighting)
    model = make_ratio(num_fit.params, den_fit.params)

    common, num_idx, den_idx = np.intersect1d(
        numerator.years, denominator.years, return_indices=True
    )
    if common.size < 3:
        raise InsufficientDataError(
            f"series {numerator.name!r} and {denominator.name!r} share only "
            f"{common.size} common years; need at least 3 for residual reporting"
        )
    observed = numerator.values[num_idx] / denominator.values[den_idx]

    in_domain = (reciprocal_value(model.f, common) >= SINGULARITY_GUARD * model.f.a) & (
        reciprocal_value(model.g, common) >= SINGULARITY_GUARD * model.g.a
    )
    common = common[in_domain]
    observed = observed[in_domain]
    predicted = np.atleast_1d(np.asarray(eval_ratio(model, common), dtype=float))
    return RatioFit(
        model=model,
        numerator_fit=num_fit,
        denominator_fit=den_fit,
        common_years=common,
        observed_ratio=observed,
        predicted_ratio=predicted,
        residuals=observed - predicted,
    )


def predict(fit: HyperbolicFit, grid, name: str = "fitted") -> TimeSeries:
    """Evaluate the fitted trajectory on a year grid."""
    grid = np.asarray(grid, dtype=float)
    values = np.atleast_1d(np.asarray(eval_hyperbolic(fit.params, grid), dtype=float))
    return TimeSeries(years=grid, values=values, name=name)
