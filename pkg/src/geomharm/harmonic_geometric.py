"""Harmonic geometric polynomials ``hw_n(x) = sum_k S(n,k) k! H_k x^k``.

Besides the definition this module builds ``hw_n`` four more ways out of
ordinary geometric polynomials (plus one generating-function oracle) and
exposes the reflection formula and recurrences as ``(lhs, rhs)`` pairs.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact_core import binomial, harmonic, stirling1_unsigned, stirling2
from .geometric import geometric
from .polynomials import ONE, Poly, X, binomial_power, compose_affine, derivative, divide_exact
from .powerseries import egf_coefficient, exp_minus_one_times_x, series_mul, substitute

__all__ = [
    "hgp",
    "hgp_gf_oracle",
    "hgp_via_theorem4",
    "hgp_via_theorem5",
    "hgp_via_eq14",
    "hgp_via_pro2",
    "reflect_hgp",
    "recurrence_eq4",
    "convolution_eq8",
    "raising_tf",
    "recurrence_pro2b",
    "keller_genocchi",
]


def hgp(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be >= 0")
    return Poly(
        [0] + [stirling2(n, k) * factorial(k) * harmonic(k) for k in range(1, n + 1)]
    )


def hgp_gf_oracle(n: int) -> Poly:
    """n! [t^n] of -ln(1-u)/(1-u), u = x(e^t - 1).

    The two factors are expanded separately and multiplied as series, so the
    harmonic numbers only appear through the Cauchy product.
    """
    u = exp_minus_one_times_x(n)
    neg_log = substitute([Fraction(0)] + [Fraction(1, k) for k in range(1, n + 1)], u, n)
    geom = substitute([Fraction(1)] * (n + 1), u, n)
    return egf_coefficient(series_mul(neg_log, geom, n), n)


def hgp_via_theorem4(m: int) -> Poly:
    """(1+x-m) w_{m-1} + (1+x) sum_{k=1}^{m-1} C(m,k) w_{k-1} w_{m-k}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    acc = Poly()
    for k in range(1, m):
        acc = acc + geometric(k - 1) * geometric(m - k) * binomial(m, k)
    return Poly([1 - m, 1]) * geometric(m - 1) + (X + ONE) * acc


def hgp_via_theorem5(n: int) -> Poly:
    """Triple sum over w_{l+j} (x/(1+x))^k, cleared by (1+x)^n and divided back."""
    if n < 1:
        raise ValueError("n must be >= 1")
    w = [geometric(i) for i in range(2 * n + 2)]
    numer = Poly()
    for k in range(1, n + 1):
        inner = Poly()
        for l in range(n + 1):
            s = stirling2(n - l, k)
            if not s:
                continue
            for j in range(k + 1):
                inner = inner + w[l + j] * (binomial(n, l) * s * stirling1_unsigned(k + 1, j + 1))
        weight = Fraction((-1) ** (k + 1), k)
        numer = numer + inner * X**k * binomial_power(1, 1, n - k) * weight
    return divide_exact(numer, binomial_power(1, 1, n))


def hgp_via_eq14(n: int) -> Poly:
    """sum_k (-1)^(k+1) x^k / (k k!) d^k/dx^k w_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    w = geometric(n)
    acc = Poly()
    for k in range(1, n + 1):
        acc = acc + X**k * derivative(w, k) * Fraction((-1) ** (k + 1), k * factorial(k))
    return acc


def hgp_via_pro2(m: int) -> Poly:
    """hw_{m+1} = w_{m+1} + m x w_m + (1+x) sum_{k=0}^{m-2} C(m,k) w_{m-k-1} w_{k+1}.

    Note the returned polynomial has index ``m + 1``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    acc = Poly()
    for k in range(m - 1):
        acc = acc + geometric(m - k - 1) * geometric(k + 1) * binomial(m, k)
    return geometric(m + 1) + X * geometric(m) * m + (X + ONE) * acc


def reflect_hgp(n: int) -> tuple[Poly, Poly]:
    """x hw_{n+1}(-1-x) against (-1)^(n+1) (x+1)(hw_{n+1}(x) + n w_n(x))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    lhs = X * compose_affine(hgp(n + 1), -1, -1)
    rhs = (X + ONE) * (hgp(n + 1) + geometric(n) * n) * (-1) ** (n + 1)
    return lhs, rhs


def recurrence_eq4(n: int) -> tuple[Poly, Poly]:
    """x sum_{k=1}^n C(n,k) hw_k against (x+1) hw_n - (x+1) w_{n-1}."""
    if n < 2:
        raise ValueError("n must be >= 2")
    acc = Poly()
    for k in range(1, n + 1):
        acc = acc + hgp(k) * binomial(n, k)
    return X * acc, (X + ONE) * (hgp(n) - geometric(n - 1))


def convolution_eq8(n: int) -> tuple[Poly, Poly]:
    """(x+1) sum_k C(n,k) hw_{n-k} w_k against hw_{n+1} + hw_n - w_{n+1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = Poly()
    for k in range(n + 1):
        acc = acc + hgp(n - k) * geometric(k) * binomial(n, k)
    return (X + ONE) * acc, hgp(n + 1) + hgp(n) - geometric(n + 1)


def raising_tf(n: int) -> tuple[Poly, Poly]:
    """hw_{n+1} against x d/dx((1+x) hw_n) + x w_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rhs = X * derivative((X + ONE) * hgp(n), 1) + X * geometric(n)
    return hgp(n + 1), rhs


def recurrence_pro2b(n: int) -> tuple[Poly, Poly]:
    """x sum_k C(n,k) hw_{k+1} against (1+x)(hw_{n+1} - hw_n - w_n + w_{n-1})."""
    if n < 2:
        raise ValueError("n must be >= 2")
    acc = Poly()
    for k in range(n + 1):
        acc = acc + hgp(k + 1) * binomial(n, k)
    rhs = (X + ONE) * (hgp(n + 1) - hgp(n) - geometric(n) + geometric(n - 1))
    return X * acc, rhs


def keller_genocchi(n: int) -> tuple[Fraction, Fraction]:
    """hw_n(-1/2) against its Genocchi-number closed form, n >= 2."""
    from .exact_core import genocchi

    if n < 2:
        raise ValueError("n must be >= 2")
    lhs = hgp(n)(Fraction(-1, 2))
    if n % 2 == 0:
        rhs = -Fraction(n - 1, 2 * n) * genocchi(n)
    else:
        rhs = Fraction(1, 2) * sum(
            (binomial(n, k) * genocchi(k) / k * genocchi(n - k + 1) / (n - k + 1) for k in range(1, n + 1)),
            Fraction(0),
        )
    return lhs, rhs
