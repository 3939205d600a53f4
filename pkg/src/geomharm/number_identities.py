"""Harmonic-Stirling sums with Bernoulli-number closed forms.

Each function returns ``(lhs, rhs)`` computed independently: the left side
from Stirling and harmonic numbers, the right side from ``bernoulli`` (or a
factorial/harmonic closed form).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import ParityError
from .exact_core import (
    bernoulli,
    binomial,
    harmonic,
    poly_bernoulli,
    stirling1_unsigned,
    stirling2,
)

__all__ = [
    "identity_eq16",
    "identity_teo6",
    "identity_hgb",
    "identity_eq18",
    "identity_cor1_double",
    "identity_teo8",
    "identity_pbb",
]

Pair = tuple[Fraction, Fraction]


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def identity_eq16(n: int) -> Pair:
    """sum_k [n,k] k = n! H_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = Fraction(sum(stirling1_unsigned(n, k) * k for k in range(1, n + 1)))
    return lhs, factorial(n) * harmonic(n)


def identity_teo6(n: int, j: int) -> Pair:
    """sum_{k=j}^n [n+1,k+1] {k,j} k = C(n+1,j) n!/(j-1)! (H_{n+1} - H_j)."""
    if not 1 <= j <= n:
        raise ValueError("need 1 <= j <= n")
    lhs = Fraction(
        sum(stirling1_unsigned(n + 1, k + 1) * stirling2(k, j) * k for k in range(j, n + 1))
    )
    rhs = binomial(n + 1, j) * Fraction(factorial(n), factorial(j - 1)) * (harmonic(n + 1) - harmonic(j))
    return lhs, rhs


def identity_hgb(n: int) -> Pair:
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = sum(
        (_sign(k + 1) * stirling2(n, k) * factorial(k) * harmonic(k) / (k + 1) for k in range(1, n + 1)),
        Fraction(0),
    )
    return lhs, Fraction(n, 2) * bernoulli(n - 1)


def identity_eq18(n: int) -> Pair:
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = sum(
        (_sign(k - 1) * stirling2(n, k) * factorial(k - 1) * harmonic(k) for k in range(1, n + 1)),
        Fraction(0),
    )
    return lhs, bernoulli(n - 1)


def identity_cor1_double(n: int, m: int) -> Pair:
    """(-1)^(n-1) (n-1)/2 B_{n+m-1} against a double Stirling-harmonic sum; n+m odd."""
    if n < 2 or m < 1:
        raise ValueError("need n > 1 and m >= 1")
    if (n + m) % 2 == 0:
        raise ParityError(f"n + m = {n + m} is even; the identity is stated for odd n + m")
    lhs = _sign(n - 1) * Fraction(n - 1, 2) * bernoulli(n + m - 1)
    rhs = Fraction(0)
    for j in range(1, n + 1):
        sj = stirling2(n, j) * factorial(j) * harmonic(j)
        for k in range(1, m + 1):
            rhs += _sign(k + j) * sj * stirling2(m, k) * factorial(k) / ((k + j) * (k + j + 1))
    return lhs, rhs


def identity_teo8(n: int) -> Pair:
    if n < 2:
        raise ValueError("n must be >= 2")
    lhs = sum(
        (
            _sign(k) * stirling2(n, k) * factorial(k - 1) * harmonic(k - 1) * harmonic(k)
            for k in range(2, n + 1)
        ),
        Fraction(0),
    )
    return lhs, Fraction(n + 1, 2) * bernoulli(n - 2)


def identity_pbb(n: int) -> Pair:
    """Order-2 poly-Bernoulli number against -(n-2)/4 B_{n-1}, odd n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        raise ParityError(f"n = {n} is even; the identity is stated for odd n")
    return poly_bernoulli(n, 2), -Fraction(n - 2, 4) * bernoulli(n - 1)
