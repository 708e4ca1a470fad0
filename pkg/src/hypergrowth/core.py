"""Closed-form hyperbolic growth trajectories.

A hyperbolic growth trajectory is the reciprocal of a decreasing straight
line,

    f(t) = 1 / (a - k*t),    a > 0, k > 0,

so its reciprocal values 1/f(t) = a - k*t fall on a line and the trajectory
blows up at the finite singularity time t_s = a/k. Everything in this module
is a pure function of the parameter pair (a, k); all functions accept scalar
or ndarray time arguments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Evaluations require a - k*t >= SINGULARITY_GUARD * a. Keeps values finite
# (at most 1e9/a) while still allowing near-singularity plot ranges.
SINGULARITY_GUARD = 1e-9


@dataclass(frozen=True)
class HyperbolicParams:
    """Parameters of a hyperbolic growth trajectory 1/(a - k*t).

    ``a`` is the reciprocal-line intercept (units 1/value), ``k`` the
    reciprocal-line slope magnitude (units 1/(value*year)). Both must be
    positive, which makes the singularity time a/k finite and positive.
    """

    a: float
    k: float

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.k)):
            raise ValueError(f"parameters must be finite, got a={self.a}, k={self.k}")
        if self.a <= 0 or self.k <= 0:
            raise ValueError(f"parameters must be positive, got a={self.a}, k={self.k}")

    @property
    def singularity_time(self) -> float:
        """Time a/k at which the trajectory diverges."""
        return self.a / self.k


def reciprocal_value(p: HyperbolicParams, t):
    """Reciprocal of the trajectory: the straight line a - k*t.

    Defined for every t, unlike the trajectory itself.
    """
    return p.a - p.k * np.asarray(t, dtype=float)


def _guarded_line(p: HyperbolicParams, t):
    """a - k*t, raising DomainError at or past the singularity guard."""
    lin = reciprocal_value(p, t)
    if np.any(lin < SINGULARITY_GUARD * p.a):
        raise DomainError(
            f"time at or beyond the singularity guard "
            f"(singularity at t_s={p.singularity_time:.6g})"
        )
    return lin


def eval_hyperbolic(p: HyperbolicParams, t):
    """Trajectory value 1/(a - k*t); strictly positive and increasing in t."""
    return 1.0 / _guarded_line(p, t)


def singularity_time(p: HyperbolicParams) -> float:
    """Finite time a/k at which the trajectory escapes to infinity."""
    return p.singularity_time


def inverse_time(p: HyperbolicParams, size):
    """Time at which the trajectory reaches ``size``: a/k - 1/(k*size).

    Inverse of :func:`eval_hyperbolic` in the variable sense (time as a
    function of size). Approaches a/k from below as size grows.
    """
    size = np.asarray(size, dtype=float)
    if np.any(size <= 0):
        raise DomainError("size must be positive")
    return p.a / p.k - 1.0 / (p.k * size)


def derivative(p: HyperbolicParams, t):
    """Time derivative k/(a - k*t)**2; strictly positive and increasing."""
    return p.k / _guarded_line(p, t) ** 2


def growth_rate(p: HyperbolicParams, t):
    """Relative growth rate f'/f = k/(a - k*t); positive and increasing."""
    return p.k / _guarded_line(p, t)


def finite_difference_step(p: HyperbolicParams, t) -> float:
    """Central-difference step for validating analytic derivatives.

    h = max(1e-4, 1e-6 * (t_s - t)) balances truncation against rounding
    as the trajectory steepens toward the singularity.
    """
    return max(1e-4, 1e-6 * (p.singularity_time - float(t)))
