"""Truncated exponential-type power series in ``t`` with ``Poly`` coefficients.

Only what the generating-function oracles need: products, powers and
composition into ``sum_k a_k u^k`` for a series ``u`` without constant term.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .polynomials import ONE, ZERO, Poly, X

Series = list  # list[Poly], index = power of t


def series_mul(a: Series, b: Series, order: int) -> Series:
    out = [ZERO] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return out


def exp_minus_one_times_x(order: int) -> Series:
    """u(t) = x (e^t - 1), truncated at t^order."""
    return [ZERO] + [X * Fraction(1, factorial(n)) for n in range(1, order + 1)]


def substitute(coeffs: Sequence[Fraction], u: Series, order: int) -> Series:
    """sum_k coeffs[k] * u^k; requires u[0] == 0 so only k <= order matter."""
    assert u[0].is_zero()
    out = [ZERO] * (order + 1)
    power = [ONE] + [ZERO] * order
    for k in range(min(len(coeffs), order + 1)):
        if coeffs[k]:
            out = [o + p * coeffs[k] for o, p in zip(out, power)]
        power = series_mul(power, u, order)
    return out


def egf_coefficient(s: Series, n: int) -> Poly:
    """n! [t^n] s."""
    return s[n] * factorial(n)
