"""Closed forms for power sums weighted by integer powers and harmonic numbers.

    A(m; x)       = sum_{n>=0}      n^m x^n
    A^(p)(m; x)   = sum_{n=0}^{p}   n^m x^n
    hA(m; x)      = sum_{n>=0}  H_n n^m x^n
    hA^(p)(m; x)  = sum_{n=1}^{p} H_n n^m x^n

Series involving harmonic numbers take values ``a + b*ln(1-x)`` with
rational ``a, b``; these are carried exactly as :class:`LogLinValue`.
The convention ``0**0 == 1`` holds throughout.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DomainError, LogResidueError
from .exact_core import binomial, harmonic, register_dependent_cache
from .geometric import geometric
from .harmonic_geometric import hgp
from .polynomials import format_rational

__all__ = [
    "LogLinValue",
    "A_inf",
    "A_fin",
    "A_fin_neg1",
    "hA_inf",
    "hA_tail",
    "hA_fin",
    "direct_sum",
]

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class LogLinValue:
    """The number ``base + log_coeff * ln(1 - at)``."""

    base: Fraction
    log_coeff: Fraction
    at: Fraction

    def __post_init__(self):
        for name in ("base", "log_coeff", "at"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not -1 < self.at < 1:
            raise DomainError(f"ln(1 - x) needs |x| < 1, got x = {self.at}")

    def _check(self, other: LogLinValue) -> None:
        if other.at != self.at:
            raise ValueError("LogLinValues at different points cannot be combined")

    def __add__(self, other):
        if isinstance(other, LogLinValue):
            self._check(other)
            return LogLinValue(self.base + other.base, self.log_coeff + other.log_coeff, self.at)
        if isinstance(other, (int, Fraction)):
            return LogLinValue(self.base + other, self.log_coeff, self.at)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LogLinValue(-self.base, -self.log_coeff, self.at)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LogLinValue(self.base * other, self.log_coeff * other, self.at)
        if isinstance(other, LogLinValue):
            # (a + b L)(c + d L) only stays in the field when b or d is zero
            self._check(other)
            if self.log_coeff and other.log_coeff:
                raise ArithmeticError("product of two log-bearing values leaves the a + b ln(1-x) field")
            return LogLinValue(
                self.base * other.base,
                self.base * other.log_coeff + self.log_coeff * other.base,
                self.at,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __float__(self):
        return float(self.base) + float(self.log_coeff) * math.log1p(-float(self.at))

    def is_rational(self) -> bool:
        return self.log_coeff == 0

    def __str__(self):
        return f"{format_rational(self.base)} + {format_rational(self.log_coeff)}*ln(1-x)"


def _check_domain(x: Fraction, harmonic_series: bool = False) -> Fraction:
    x = Fraction(x)
    if not -1 < x < 1:
        raise DomainError(f"series needs |x| < 1, got x = {x}")
    if harmonic_series and x == 0:
        raise DomainError("harmonic series are evaluated for x != 0; use direct_sum at x = 0")
    return x


def _pow(base: int, e: int) -> int:
    return 1 if e == 0 else base**e


@lru_cache(maxsize=4096)
def _w_at(m: int, y: Fraction) -> Fraction:
    return geometric(m)(y)


@lru_cache(maxsize=4096)
def _hw_at(m: int, y: Fraction) -> Fraction:
    return hgp(m)(y)


@lru_cache(maxsize=8192)
def A_inf(m: int, x: Scalar) -> Fraction:
    """sum_{n>=0} n^m x^n = w_m(x/(1-x)) / (1-x)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    x = _check_domain(x)
    return _w_at(m, x / (1 - x)) / (1 - x)


@lru_cache(maxsize=2048)
def A_fin(m: int, p: int, x: Scalar) -> Fraction:
    """sum_{n=0}^{p} n^m x^n, from the geometric-polynomial closed form.

    The tail beyond ``p`` is x^(p+1)/(1-x) sum_k C(m,k) (p+1)^(m-k) w_k(x/(1-x)).
    """
    if m < 0 or p < 0:
        raise ValueError("m, p must be >= 0")
    x = _check_domain(x)
    y = x / (1 - x)
    tail = sum((binomial(m, k) * _pow(p + 1, m - k) * _w_at(k, y) for k in range(m + 1)), Fraction(0))
    return A_inf(m, x) - x ** (p + 1) / (1 - x) * tail


_neg1_prefix: dict[Fraction, list[Fraction]] = {}
_neg1_lock = threading.Lock()


def A_fin_neg1(q: int, x: Scalar) -> Fraction:
    """sum_{n=1}^{q} x^n / n, the finite analogue of A(-1; x) = -ln(1-x)."""
    if q < 0:
        raise ValueError("q must be >= 0")
    x = Fraction(x)
    with _neg1_lock:
        sums = _neg1_prefix.setdefault(x, [Fraction(0)])
        if len(sums) <= q:
            xn = x ** len(sums)
            for n in range(len(sums), q + 1):
                sums.append(sums[-1] + xn / n)
                xn *= x
        return sums[q]


def hA_inf(m: int, x: Scalar) -> LogLinValue:
    """sum_{n>=0} H_n n^m x^n = (hw_m(y) - ln(1-x) w_m(y)) / (1-x), y = x/(1-x)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    x = _check_domain(x, harmonic_series=True)
    y = x / (1 - x)
    return LogLinValue(_hw_at(m, y) / (1 - x), -_w_at(m, y) / (1 - x), x)


def _A_shifted(k: int, x: Fraction) -> LogLinValue:
    """A(k-1; x), where A(-1; x) = sum_{n>=1} x^n/n = -ln(1-x)."""
    if k == 0:
        return LogLinValue(0, -1, x)
    return LogLinValue(A_inf(k - 1, x), 0, x)


def _A_fin_shifted(k: int, q: int, x: Fraction) -> Fraction:
    return A_fin_neg1(q, x) if k == 0 else A_fin(k - 1, q, x)


def _correction(m: int, k: int, p: int, x: Fraction) -> Fraction:
    """sum_{j=0}^{p-1} j^(m-k) A^(p-j)(k-1; x) x^j.

    For k >= 1 each A^(p-j)(k-1; x) x^j splits into A(k-1; x) x^j minus
    x^(p+1)/(1-x) sum_i C(k-1,i) (p+1-j)^(k-1-i) w_i(y), so the sum over j
    reduces to one finite power sum and integer sums over j.
    """
    a = m - k
    if k == 0:
        return _correction_log_part(a, p, x)
    r = k - 1
    y = x / (1 - x)
    inner = Fraction(0)
    for i in range(r + 1):
        int_sum = sum(_pow(j, a) * _pow(p + 1 - j, r - i) for j in range(p))
        inner += binomial(r, i) * _w_at(i, y) * int_sum
    return A_inf(r, x) * A_fin(a, p - 1, x) - x ** (p + 1) / (1 - x) * inner


def _correction_log_part(a: int, p: int, x: Fraction) -> Fraction:
    """sum_{j=0}^{p-1} j^a x^j sum_{n=1}^{p-j} x^n/n, over one common denominator.

    With x = u/v and L = lcm(1..p), every term times v^(2p) L is an integer,
    which avoids a gcd per term.
    """
    u, v = x.numerator, x.denominator
    lcm_all = math.lcm(*range(1, p + 1))
    # prefix[q] = v^p L * sum_{n<=q} x^n/n
    prefix = [0] * (p + 1)
    un, vpn = 1, v**p
    for n in range(1, p + 1):
        un *= u
        vpn //= v
        prefix[n] = prefix[n - 1] + un * vpn * (lcm_all // n)
    total = 0
    uj, vpj = 1, v**p
    for j in range(p):
        if j or a == 0:
            total += _pow(j, a) * uj * vpj * prefix[p - j]
        uj *= u
        vpj //= v
    return Fraction(total, v ** (2 * p) * lcm_all)


def hA_tail(m: int, p: int, x: Scalar) -> LogLinValue:
    """sum_{n>p} H_n n^m x^n in closed form.

    x^p sum_k C(m,k) p^(m-k) hA(k;x)
      + sum_k C(m,k) A(k-1;x) A^(p-1)(m-k;x)
      - sum_k sum_{j<p} C(m,k) j^(m-k) A^(p-j)(k-1;x) x^j
    """
    if m < 0 or p < 1:
        raise ValueError("need m >= 0 and p >= 1")
    x = _check_domain(x, harmonic_series=True)
    total = LogLinValue(0, 0, x)
    xp = x**p
    for k in range(m + 1):
        c = binomial(m, k)
        total += hA_inf(k, x) * (c * _pow(p, m - k) * xp)
        total += _A_shifted(k, x) * (c * A_fin(m - k, p - 1, x))
        total -= c * _correction(m, k, p, x)
    return total


def hA_fin(m: int, p: int, x: Scalar) -> Fraction:
    """sum_{n=1}^{p} H_n n^m x^n as hA(m;x) minus its tail; the log parts must cancel."""
    diff = hA_inf(m, x) - hA_tail(m, p, x)
    if not diff.is_rational():
        raise LogResidueError(f"ln(1-x) coefficient {diff.log_coeff} did not cancel (m={m}, p={p}, x={x})")
    return diff.base


for _cached in (_w_at, _hw_at, A_inf, A_fin):
    register_dependent_cache(_cached.cache_clear)


def direct_sum(m: int, p: int, x: Scalar, with_harmonic: bool = False) -> Fraction:
    """Term-by-term sum of n^m x^n over 0..p, or of H_n n^m x^n over 1..p."""
    x = Fraction(x)
    total = Fraction(0)
    xn = Fraction(1)
    for n in range(p + 1):
        if with_harmonic:
            if n:
                total += harmonic(n) * _pow(n, m) * xn
        else:
            total += _pow(n, m) * xn
        xn *= x
    return total
