"""Ratios of two hyperbolic growth trajectories.

The ratio R(t) = f(t)/g(t) of two hyperbolic trajectories equals the ratio
of the denominator's reciprocal line to the numerator's,

    R(t) = (a_g - k_g*t) / (a_f - k_f*t),

equivalently a hyperbolic trajectory multiplied by a decreasing straight
line. Its whole shape is governed by one constant,

    C = k_f*a_g - k_g*a_f,

whose sign says which singularity comes first: C > 0 means the numerator
blows up first and R escalates to infinity with it; C < 0 means the
denominator blows up first and R decreases to zero there; C = 0 makes R
constant. R'(t) = C / (a_f - k_f*t)**2 never changes sign, so the ratio is
monotone throughout its domain: there is no breakpoint, kink, or takeoff
anywhere, however abrupt the curve may look on a linear plot.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import SINGULARITY_GUARD, HyperbolicParams, eval_hyperbolic, reciprocal_value
from .errors import DomainError, NoSolutionError

#: Pathways for evaluating the ratio; all agree to rounding error.
PATHWAYS = ("direct", "hyperbolic_times_linear", "linear_over_linear")


class Shape(str, enum.Enum):
    """Qualitative shape of a ratio model, decided by the sign of C."""

    ESCALATING = "escalating"
    DIMINISHING = "diminishing"
    CONSTANT = "constant"


@dataclass(frozen=True)
class RatioModel:
    """Ratio f(t)/g(t) of two hyperbolic trajectories.

    ``f`` is the numerator (e.g. GDP), ``g`` the denominator (e.g.
    population). The modulation constant C is always derived from the
    parameters, never stored separately.
    """

    f: HyperbolicParams
    g: HyperbolicParams

    @property
    def modulation_constant(self) -> float:
        """C = k_f*a_g - k_g*a_f; sign(C) = sign(t_s(g) - t_s(f))."""
        return self.f.k * self.g.a - self.g.k * self.f.a

    @property
    def domain_end(self) -> float:
        """Earliest singularity time; the model is valid strictly before it."""
        return min(self.f.singularity_time, self.g.singularity_time)


def make_ratio(f: HyperbolicParams, g: HyperbolicParams) -> RatioModel:
    """Build the ratio model f/g. Both singularity orderings are accepted."""
    return RatioModel(f=f, g=g)


def _guarded_lines(m: RatioModel, t):
    """Both reciprocal lines at t, raising DomainError past the model domain.

    Requires each line to stay above its own singularity guard; the binding
    constraint is the earlier of the two singularities.
    """
    lin_f = reciprocal_value(m.f, t)
    lin_g = reciprocal_value(m.g, t)
    if np.any(lin_f < SINGULARITY_GUARD * m.f.a) or np.any(
        lin_g < SINGULARITY_GUARD * m.g.a
    ):
        raise DomainError(
            f"time at or beyond the ratio domain "
            f"(earliest singularity at t_s={m.domain_end:.6g})"
        )
    return lin_f, lin_g


def eval_ratio(m: RatioModel, t, pathway: str = "direct"):
    """Value of the ratio at t, by any of three equivalent pathways.

    ``direct`` divides the two trajectory values, ``hyperbolic_times_linear``
    multiplies the numerator trajectory by the denominator's reciprocal line,
    ``linear_over_linear`` divides the two reciprocal lines. The results are
    identical up to rounding.
    """
    if pathway not in PATHWAYS:
        raise ValueError(f"unknown pathway {pathway!r}; expected one of {PATHWAYS}")
    lin_f, lin_g = _guarded_lines(m, t)
    if pathway == "direct":
        return eval_hyperbolic(m.f, t) / eval_hyperbolic(m.g, t)
    if pathway == "hyperbolic_times_linear":
        return eval_hyperbolic(m.f, t) * lin_g
    return lin_g / lin_f


def ratio_gradient(m: RatioModel, t):
    """Time derivative of the ratio: C / (a_f - k_f*t)**2.

    Shares the sign of C for every valid t, which is what rules out any
    change of growth direction.
    """
    lin_f, _ = _guarded_lines(m, t)
    return m.modulation_constant / lin_f**2


def ratio_growth_rate(m: RatioModel, t):
    """Logarithmic growth rate d(ln R)/dt = k_f/(a_f-k_f*t) - k_g/(a_g-k_g*t).

    Positive for all valid t iff C > 0; satisfies R' = R * d(ln R)/dt.
    """
    lin_f, lin_g = _guarded_lines(m, t)
    return m.f.k / lin_f - m.g.k / lin_g


def time_at_ratio(m: RatioModel, level: float) -> float:
    """Unique time at which the ratio attains ``level``.

    Solves (a_g - k_g*t) = level * (a_f - k_f*t) in closed form. The ratio
    tends to k_g/k_f in the distant past, so that level is an asymptote with
    no crossing; levels whose algebraic root falls at or beyond the earliest
    singularity are likewise rejected rather than reported.
    """
    level = float(level)
    denom = level * m.f.k - m.g.k
    if denom == 0.0:
        raise NoSolutionError(
            f"level {level:g} equals the asymptotic ratio k_g/k_f and is never attained"
        )
    t = (level * m.f.a - m.g.a) / denom
    lin_f = reciprocal_value(m.f, t)
    lin_g = reciprocal_value(m.g, t)
    if lin_f < SINGULARITY_GUARD * m.f.a or lin_g < SINGULARITY_GUARD * m.g.a:
        raise NoSolutionError(
            f"level {level:g} is only attained at t={t:.6g}, at or beyond the "
            f"ratio domain (earliest singularity at t_s={m.domain_end:.6g})"
        )
    return t


def classify_shape(m: RatioModel) -> Shape:
    """Classify the ratio by the sign of C.

    ESCALATING (C > 0): the ratio increases monotonically and blows up at
    the numerator's singularity. DIMINISHING (C < 0): it decreases
    monotonically toward zero approaching the denominator's singularity.
    CONSTANT: |C| within rounding tolerance of zero, scaled to the magnitude
    of C's terms.
    """
    c = m.modulation_constant
    eps = 1e-12 * m.f.k * m.g.a
    if abs(c) <= eps:
        return Shape.CONSTANT
    return Shape.ESCALATING if c > 0 else Shape.DIMINISHING
