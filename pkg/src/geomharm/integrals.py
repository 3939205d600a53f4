"""Weighted integrals over [0, 1] of geometric and harmonic geometric polynomials.

Left sides are exact moment-map integrals of the literal integrand (the
polynomial in ``-x`` is formed by affine composition); right sides are
Bernoulli-number closed forms.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParityError
from .exact_core import bernoulli
from .geometric import geometric
from .harmonic_geometric import hgp
from .polynomials import (
    Poly,
    compose_affine,
    integrate01,
    integrate01_w_geom,
    integrate01_w_log_over_x,
)

__all__ = [
    "int_gp_plain",
    "int_semiorth",
    "int_hgp_plain",
    "int_hgp_geomweight",
    "int_hgp_gp_product",
    "int_gp_logweight",
    "explore_eq13_odd",
    "explore_hgp_semiorth",
]

Pair = tuple[Fraction, Fraction]


def _neg(p: Poly) -> Poly:
    return compose_affine(p, 0, -1)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def int_gp_plain(n: int) -> Pair:
    """int_0^1 w_n(-y) dy = B_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return integrate01(_neg(geometric(n))), bernoulli(n)


def int_semiorth(n: int, m: int) -> Pair:
    """int_0^1 (1-x)/x w_n(-x) w_m(-x) dx = (-1)^(n+1) B_{n+m}."""
    if n < 0 or m < 0:
        raise ValueError("n, m must be >= 0")
    lhs = integrate01_w_geom(_neg(geometric(n) * geometric(m)))
    return lhs, _sign(n + 1) * bernoulli(n + m)


def int_hgp_plain(n: int) -> Pair:
    """int_0^1 hw_n(-y) dy = -(n/2) B_{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return integrate01(_neg(hgp(n))), -Fraction(n, 2) * bernoulli(n - 1)


def int_hgp_geomweight(n: int) -> Pair:
    """int_0^1 (1-x)/x hw_{n+1}(-x) dx = (-1)^n (n-1)/2 B_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    lhs = integrate01_w_geom(_neg(hgp(n + 1)))
    return lhs, _sign(n) * Fraction(n - 1, 2) * bernoulli(n)


def _hgp_gp_weighted(n: int, m: int) -> Fraction:
    return integrate01_w_geom(_neg(hgp(n + 1) * geometric(m)))


def int_hgp_gp_product(n: int, m: int) -> Pair:
    """int_0^1 (1-x)/x hw_{n+1}(-x) w_m(-x) dx = (-1)^n (n/2) B_{n+m}, n+m even."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    if (n + m) % 2:
        raise ParityError(f"n + m = {n + m} is odd; no closed form is known")
    return _hgp_gp_weighted(n, m), _sign(n) * Fraction(n, 2) * bernoulli(n + m)


def int_gp_logweight(n: int) -> Pair:
    """int_0^1 ln(1-x)/x w_n(-x) dx = B_{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return integrate01_w_log_over_x(_neg(geometric(n))), bernoulli(n - 1)


def explore_eq13_odd(n: int, m: int) -> Fraction:
    """Exact value of the hw_{n+1} w_m weighted integral for odd n + m (no closed form asserted)."""
    if n < 0 or m < 1 or (n + m) % 2 == 0:
        raise ValueError("need n >= 0, m >= 1, n + m odd")
    return _hgp_gp_weighted(n, m)


def explore_hgp_semiorth(n: int, m: int) -> Fraction:
    """Exact int_0^1 (1-x)/x hw_n(-x) hw_m(-x) dx (no closed form asserted)."""
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    return integrate01_w_geom(_neg(hgp(n) * hgp(m)))
