"""Geometric (Fubini) polynomials and identities among them.

``w_n(x) = sum_k S(n,k) k! x^k`` and its order-``p`` generalization
``w_n^(p)(x) = sum_k S(n,k) p(p+1)...(p+k-1) x^k``, the coefficients of
``(1 - x(e^t - 1))^(-p)``.  Identity helpers return ``(lhs, rhs)`` pairs so
callers can show both sides when they disagree.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact_core import binomial, stirling1_unsigned, stirling2
from .polynomials import ONE, Poly, X, binomial_power, compose_affine, derivative, divide_exact
from .powerseries import egf_coefficient, exp_minus_one_times_x, substitute

__all__ = [
    "geometric",
    "geometric_gf_oracle",
    "geometric_order",
    "derivative_via_gp",
    "dk_wn_via_higher_order",
    "reflect_gp",
    "convolve_gp",
    "higher_order_via_gp",
    "raising_gp",
]


def _rising(p: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= p + i
    return out


def geometric(n: int) -> Poly:
    """w_n(x)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Poly(stirling2(n, k) * factorial(k) for k in range(n + 1))


def geometric_order(n: int, p: int) -> Poly:
    """w_n^(p)(x); ``geometric_order(n, 1) == geometric(n)``."""
    if p < 1:
        raise ValueError("order p must be >= 1")
    return Poly(stirling2(n, k) * _rising(p, k) for k in range(n + 1))


def geometric_gf_oracle(n: int) -> Poly:
    """n! [t^n] 1/(1 - x(e^t - 1)), by truncated series arithmetic alone."""
    u = exp_minus_one_times_x(n)
    return egf_coefficient(substitute([Fraction(1)] * (n + 1), u, n), n)


def dk_wn_via_higher_order(n: int, k: int) -> Poly:
    """k-th derivative of w_n as (k!)^2 sum_m C(n,m) S(m,k) w_{n-m}^(k+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = Poly()
    for m in range(k, n + 1):
        acc = acc + geometric_order(n - m, k + 1) * (binomial(n, m) * stirling2(m, k))
    return acc * factorial(k) ** 2


def derivative_via_gp(n: int, k: int) -> Poly:
    """k-th derivative of w_n written through plain geometric polynomials.

    (1+x)^k d^k/dx^k w_n = k! sum_{m,j} C(n,m) S(m,k) [k+1, j+1] w_{n-m+j},
    and the factor (1+x)^k is removed by exact division.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = Poly()
    for m in range(k, n + 1):
        outer = binomial(n, m) * stirling2(m, k)
        if not outer:
            continue
        for j in range(k + 1):
            acc = acc + geometric(n - m + j) * (outer * stirling1_unsigned(k + 1, j + 1))
    return divide_exact(acc * factorial(k), binomial_power(1, 1, k))


def higher_order_via_gp(n: int, p: int) -> tuple[Poly, Poly]:
    """Both sides of p! (1+x)^p w_n^(p+1) = sum_k [p+1, k+1] w_{n+k}."""
    lhs = geometric_order(n, p + 1) * binomial_power(1, 1, p) * factorial(p)
    rhs = Poly()
    for k in range(p + 1):
        rhs = rhs + geometric(n + k) * stirling1_unsigned(p + 1, k + 1)
    return lhs, rhs


def reflect_gp(n: int) -> tuple[Poly, Poly]:
    """Both sides of x w_n(-x-1) = (-1)^n (x+1) w_n(x), n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    w = geometric(n)
    return X * compose_affine(w, -1, -1), (X + ONE) * w * (-1) ** n


def convolve_gp(n: int) -> tuple[Poly, Poly]:
    """Both sides of (1+x) sum_k C(n,k) w_k w_{n-k} = w_{n+1} + w_n."""
    acc = Poly()
    for k in range(n + 1):
        acc = acc + geometric(k) * geometric(n - k) * binomial(n, k)
    return (X + ONE) * acc, geometric(n + 1) + geometric(n)


def raising_gp(n: int) -> tuple[Poly, Poly]:
    """Both sides of x d/dx((1+x) w_n) = w_{n+1}."""
    return X * derivative((X + ONE) * geometric(n), 1), geometric(n + 1)
