"""Exact scalars and the combinatorial number families.

All values are :class:`fractions.Fraction` (aliased ``Rational``) or plain
``int``.  Triangular tables are memoized process-wide and grow on demand.

Bernoulli convention: ``B_1 = -1/2``.  ``bernoulli`` is defined by the
Stirling sum ``B_n = sum_k (-1)^k S(n,k) k!/(k+1)``, which equals
``int_0^1 w_n(-y) dy``; the classical recurrence is an independent check.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

__all__ = [
    "Rational",
    "SeqTable",
    "stirling2",
    "stirling1_unsigned",
    "binomial",
    "harmonic",
    "bernoulli",
    "genocchi",
    "poly_bernoulli",
    "stirling2_row",
    "clear_caches",
    "corrupt_stirling2",
]

Rational = Fraction

_lock = threading.RLock()
_S2: list[list[int]] = [[1]]
_S1: list[list[int]] = [[1]]
_H: list[Fraction] = [Fraction(0)]
_B: dict[int, Fraction] = {}
_dependent_caches: list = []


@dataclass(frozen=True)
class SeqTable:
    """A named sequence with the index of its first value."""

    name: str
    offset: int
    values: tuple

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("SeqTable needs at least one value")


def _grow(table: list[list[int]], n: int, first_kind: bool) -> None:
    with _lock:
        while len(table) <= n:
            m = len(table)
            prev = table[-1]
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                left = prev[k - 1]
                right = prev[k] if k < m else 0
                mult = (m - 1) if first_kind else k
                row[k] = mult * right + left
            table.append(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind {n, k}."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    if k > n:
        return 0
    if len(_S2) <= n:
        _grow(_S2, n, first_kind=False)
    return _S2[n][k]


def stirling2_row(n: int) -> list[int]:
    """Row ``[S(n,0), ..., S(n,n)]`` of the second-kind triangle."""
    return [stirling2(n, k) for k in range(n + 1)]


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind [n, k]."""
    if n < 0 or k < 0:
        raise ValueError("stirling1_unsigned needs nonnegative arguments")
    if k > n:
        return 0
    if len(_S1) <= n:
        _grow(_S1, n, first_kind=True)
    return _S1[n][k]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise ValueError("harmonic needs n >= 0")
    if len(_H) <= n:
        with _lock:
            while len(_H) <= n:
                _H.append(_H[-1] + Fraction(1, len(_H)))
    return _H[n]


def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise ValueError("bernoulli needs n >= 0")
    b = _B.get(n)
    if b is None:
        b = sum(
            (Fraction((-1) ** k * stirling2(n, k) * factorial(k), k + 1) for k in range(n + 1)),
            Fraction(0),
        )
        _B[n] = b
    return b


def genocchi(n: int) -> Fraction:
    """G_n = n * w_{n-1}(-1/2); defined for n >= 1."""
    if n < 1:
        raise ValueError("genocchi is only defined here for n >= 1")
    from .geometric import geometric

    return n * geometric(n - 1)(Fraction(-1, 2))


def poly_bernoulli(n: int, q: int) -> Fraction:
    if n < 0:
        raise ValueError("poly_bernoulli needs n >= 0")
    total = Fraction(0)
    for k in range(n + 1):
        term = Fraction(stirling2(n, k) * factorial(k)) / Fraction(k + 1) ** q
        total += term if k % 2 == 0 else -term
    return total if n % 2 == 0 else -total


def register_dependent_cache(clear) -> None:
    """Register a callable that empties a cache derived from these tables."""
    _dependent_caches.append(clear)


def clear_caches() -> None:
    """Drop every memoized value (tables rebuild lazily)."""
    with _lock:
        del _S2[1:]
        del _S1[1:]
        del _H[1:]
        _B.clear()
        for clear in _dependent_caches:
            clear()


@contextmanager
def corrupt_stirling2(n: int, k: int, value: int) -> Iterator[None]:
    """Test hook: temporarily overwrite the single table entry S(n, k).

    The table is first grown to ``n + 64`` rows so that no later row is
    derived from the corrupted value.  Caches are reset on exit.
    """
    if not 0 <= k <= n:
        raise ValueError("entry must satisfy 0 <= k <= n")
    with _lock:
        stirling2(n + 64, 0)
        _B.clear()
        for clear in _dependent_caches:
            clear()
        original = _S2[n][k]
        _S2[n][k] = value
    try:
        yield
    finally:
        with _lock:
            _S2[n][k] = original  # row 0 survives clear_caches
        clear_caches()


def seq_table(name: str, values: Sequence, offset: int = 0) -> SeqTable:
    return SeqTable(name, offset, tuple(values))
