import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geomharm.errors import DomainError, LogResidueError
from geomharm.exact_core import harmonic
from geomharm.series_eval import (
    A_fin,
    A_fin_neg1,
    A_inf,
    LogLinValue,
    direct_sum,
    hA_fin,
    hA_inf,
    hA_tail,
)

GRID = [Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(-2, 3), Fraction(3, 4)]


def float_partial(m, x, harmonic_weights=False, tol=1e-17):
    """Float partial sums of the literal series, truncated once terms are negligible."""
    total, n, h = 0.0, 0, 0.0
    xf = float(x)
    while True:
        if n:
            h += 1.0 / n
        term = (n**m if n or m else 1) * xf**n * (h if harmonic_weights else 1.0)
        total += term
        if n > 50 and abs(term) < tol * max(1.0, abs(total)):
            return total
        n += 1


def test_A_inf_examples():
    assert A_inf(0, Fraction(1, 2)) == 2
    assert A_inf(1, Fraction(1, 2)) == 2
    assert A_inf(2, Fraction(1, 3)) == Fraction(3, 2)
    with pytest.raises(DomainError):
        A_inf(1, 1)
    with pytest.raises(DomainError):
        A_inf(1, Fraction(-3, 2))


def test_A_fin_examples():
    assert A_fin(0, 0, Fraction(1, 2)) == 1
    assert A_fin(3, 0, Fraction(1, 2)) == 0
    assert A_fin(1, 3, Fraction(1, 2)) == Fraction(11, 8)
    x = Fraction(-2, 3)
    assert A_fin(2, 10, x) == sum(n**2 * x**n for n in range(11))


def test_hA_inf_examples():
    x = Fraction(1, 3)
    v = hA_inf(0, x)
    assert (v.base, v.log_coeff) == (0, -1 / (1 - x))
    v = hA_inf(1, Fraction(1, 2))
    assert (v.base, v.log_coeff) == (2, -2)
    assert abs(float(v) - float_partial(1, Fraction(1, 2), True)) < 1e-10
    with pytest.raises(DomainError):
        hA_inf(1, 0)


@pytest.mark.parametrize("m,p,x", [(0, 1, Fraction(1, 2)), (1, 2, Fraction(1, 3)), (2, 5, Fraction(-1, 2))])
def test_hA_tail_numeric(m, p, x):
    tail = sum(float(harmonic(n)) * n**m * float(x) ** n for n in range(p + 1, 400))
    assert abs(float(hA_tail(m, p, x)) - tail) < 1e-10


def test_hA_fin_examples():
    assert hA_fin(0, 2, Fraction(1, 2)) == Fraction(7, 8)
    assert hA_fin(1, 3, Fraction(1, 3)) == direct_sum(1, 3, Fraction(1, 3), with_harmonic=True)
    x = Fraction(-2, 3)
    assert hA_fin(3, 12, x) == sum(harmonic(n) * n**3 * x**n for n in range(1, 13))


def test_direct_sum_examples():
    assert direct_sum(1, 3, Fraction(1, 2)) == Fraction(11, 8)
    assert direct_sum(0, 2, Fraction(1, 2), with_harmonic=True) == Fraction(7, 8)
    assert direct_sum(4, 0, Fraction(1, 3), with_harmonic=True) == 0


def test_A_fin_neg1():
    x = Fraction(2, 5)
    assert A_fin_neg1(0, x) == 0
    assert A_fin_neg1(3, x) == x + x**2 / 2 + x**3 / 3


@pytest.mark.parametrize("x", GRID)
def test_grid_oracle_equality(x):
    for m in range(9):
        for p in range(61):
            assert A_fin(m, p, x) == direct_sum(m, p, x)
            if p:
                assert hA_fin(m, p, x) == direct_sum(m, p, x, with_harmonic=True)


@pytest.mark.parametrize("x", GRID)
def test_numeric_convergence(x):
    for m in range(6):
        assert math.isclose(float(A_inf(m, x)), float_partial(m, x), rel_tol=1e-10, abs_tol=1e-10)
        assert math.isclose(float(hA_inf(m, x)), float_partial(m, x, True), rel_tol=1e-10, abs_tol=1e-10)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(0, 5),
    st.integers(1, 25),
    st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=11).filter(lambda x: x != 0),
)
def test_hA_fin_property(m, p, x):
    assert hA_fin(m, p, x) == direct_sum(m, p, x, with_harmonic=True)


def test_loglin_arithmetic():
    x = Fraction(1, 3)
    a = LogLinValue(1, 2, x)
    b = LogLinValue(Fraction(1, 2), -2, x)
    assert a + b == LogLinValue(Fraction(3, 2), 0, x)
    assert (a - a).is_rational()
    assert a * 3 == LogLinValue(3, 6, x)
    assert a * LogLinValue(2, 0, x) == LogLinValue(2, 4, x)
    with pytest.raises(ArithmeticError):
        a * b
    with pytest.raises(ValueError):
        a + LogLinValue(0, 1, Fraction(1, 2))
    with pytest.raises(DomainError):
        LogLinValue(0, 1, 1)
    assert str(LogLinValue(0, -2, Fraction(1, 2))) == "0 + -2*ln(1-x)"
    assert math.isclose(float(a), 1 + 2 * math.log(2 / 3))


def test_log_residue_is_reported(monkeypatch):
    from geomharm import series_eval

    real = series_eval.hA_tail
    monkeypatch.setattr(series_eval, "hA_tail", lambda m, p, x: real(m, p, x) + LogLinValue(0, 1, x))
    with pytest.raises(LogResidueError):
        series_eval.hA_fin(1, 3, Fraction(1, 2))
