"""F-distribution tail probabilities via the regularized incomplete beta.

Self-contained so the significance machinery carries no dependency beyond
the standard library. The regularized incomplete beta function

    I_x(a, b) = B(x; a, b) / B(a, b)

is evaluated with the standard continued-fraction expansion (modified Lentz
iteration, cf. Numerical Recipes 6.4), using the symmetry
I_x(a, b) = 1 - I_{1-x}(b, a) to stay in the rapidly-converging regime
x < (a+1)/(a+b+2). Converges to near machine precision, comfortably inside
1e-10 absolute error for the degree-of-freedom ranges that arise here.
"""

from __future__ import annotations

import math

_MAX_ITER = 500
_EPS = 1e-15
_FPMIN = 1e-300


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta, by modified Lentz."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_ITER + 1):
        m2 = 2 * m
        # even step
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        # odd step
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h
    raise ArithmeticError(
        f"incomplete beta continued fraction did not converge for a={a}, b={b}, x={x}"
    )


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if a <= 0 or b <= 0:
        raise ValueError(f"shape parameters must be positive, got a={a}, b={b}")
    if x < 0 or x > 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def f_survival(f_stat: float, df_num: float, df_den: float) -> float:
    """Upper tail P(F > f_stat) of the F distribution.

    Uses P(F > f) = I_x(df_den/2, df_num/2) with x = df_den/(df_den + df_num*f).
    """
    if df_num <= 0 or df_den <= 0:
        raise ValueError(
            f"degrees of freedom must be positive, got df_num={df_num}, df_den={df_den}"
        )
    if math.isinf(f_stat):
        return 0.0
    if f_stat <= 0.0:
        return 1.0
    x = df_den / (df_den + df_num * f_stat)
    return regularized_incomplete_beta(0.5 * df_den, 0.5 * df_num, x)
