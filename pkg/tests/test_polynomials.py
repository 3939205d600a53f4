from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from geomharm.errors import DivisionByZeroPoly, NonvanishingAtOne, NonvanishingAtZero, NonzeroRemainder
from geomharm.exact_core import harmonic
from geomharm.polynomials import (
    ONE,
    ZERO,
    Poly,
    X,
    add,
    compose_affine,
    derivative,
    divide_exact,
    evaluate,
    integrate01,
    integrate01_w_geom,
    integrate01_w_log_over_1mx,
    integrate01_w_log_over_x,
    mul,
    parse_poly,
    parse_rational,
    scale,
    to_text,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(rationals, max_size=6).map(Poly)


def test_normalization():
    assert Poly([1, 0, 0]).coeffs == (1,)
    assert Poly([0, 0]).is_zero()
    assert ZERO.degree is None
    assert Poly([0, 0, 3]).degree == 2


def test_ring_examples():
    assert mul(X, X + 1) == Poly([0, 1, 1])
    p = Poly([1, 2, 3])
    assert add(p, ZERO) == p
    assert scale(Poly([0, 1, 2]), 3) == Poly([0, 3, 6])


def test_eval_examples():
    assert evaluate(Poly([0, 1, 2]), 1) == 3
    assert evaluate(Poly([7, 1, 2]), 0) == 7
    assert evaluate(Poly([0, 1, 6, 6]), Fraction(-1, 2)) == Fraction(1, 4)


def test_derivative_examples():
    assert derivative(Poly([0, 1, 2]), 1) == Poly([1, 4])
    assert derivative(Poly([1, 2, 3]), 5) == ZERO
    assert derivative(X**3, 2) == Poly([0, 6])
    p = Poly([3, 1])
    assert derivative(p, 0) is p


def test_compose_affine_examples():
    assert compose_affine(X, -1, -1) == Poly([-1, -1])
    assert compose_affine(Poly([0, 1, 2]), -1, -1) == Poly([1, 3, 2])
    p = Poly([Fraction(1, 3), 0, 5])
    assert compose_affine(p, 0, 1) == p


def test_divide_exact_examples():
    assert divide_exact(Poly([0, 1, 1]), X) == Poly([1, 1])
    assert divide_exact(Poly([1, 2, 1]), Poly([1, 1])) == Poly([1, 1])
    with pytest.raises(NonzeroRemainder):
        divide_exact(Poly([1, 0, 1]), X)
    with pytest.raises(DivisionByZeroPoly):
        divide_exact(X, ZERO)


def test_integrate01_examples():
    assert integrate01(ONE) == 1
    assert integrate01(-X) == Fraction(-1, 2)
    assert integrate01(Poly([0, -1, 3])) == Fraction(1, 2)


def test_integrate01_w_geom_examples():
    assert integrate01_w_geom(X) == Fraction(1, 2)
    # hw_2(-x) * w_1(-x) = x^2 - 3x^3
    assert integrate01_w_geom(Poly([0, 0, 1, -3])) == Fraction(-1, 12)
    assert integrate01_w_geom(Poly([0, 1, -3, 2])) == Fraction(1, 6)
    with pytest.raises(NonvanishingAtZero):
        integrate01_w_geom(ONE)


def test_integrate01_w_log_over_x_examples():
    assert integrate01_w_log_over_x(X) == -1
    assert integrate01_w_log_over_x(X**2) == Fraction(-3, 4)
    assert integrate01_w_log_over_x(-X) == 1
    with pytest.raises(NonvanishingAtZero):
        integrate01_w_log_over_x(Poly([1, 1]))


def test_integrate01_w_log_over_1mx_examples():
    assert integrate01_w_log_over_1mx(Poly([1, -1])) == -1
    assert integrate01_w_log_over_1mx(Poly([1, -1]) ** 2) == Fraction(-1, 4)
    with pytest.raises(NonvanishingAtOne):
        integrate01_w_log_over_1mx(X)


@pytest.mark.parametrize("k", range(1, 31))
def test_log_moment_against_quadrature(k):
    exact = integrate01_w_log_over_x(X**k)
    assert exact == -harmonic(k) / k
    numeric, _ = quad(lambda t: __import__("math").log1p(-t) / t * t**k, 0, 1, limit=200)
    assert abs(numeric - float(exact)) < 1e-9


@pytest.mark.parametrize("k", range(1, 12))
def test_log_over_1mx_against_quadrature(k):
    import math

    p = Poly([1, -1]) * X ** (k - 1)
    numeric, _ = quad(lambda t: math.log1p(-t) / (1 - t) * float(evaluate(p, Fraction(t))), 0, 1, limit=200)
    assert abs(numeric - float(integrate01_w_log_over_1mx(p))) < 1e-9


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + q == q + p
    assert p - p == ZERO


@settings(max_examples=80, deadline=None)
@given(polys, polys, rationals)
def test_eval_is_multiplicative(p, q, x):
    assert evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x)


@settings(max_examples=60, deadline=None)
@given(polys)
def test_reflection_is_involution(p):
    assert compose_affine(compose_affine(p, -1, -1), -1, -1) == p


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_divide_exact_recovers_factor(p, q):
    if q.is_zero():
        return
    assert divide_exact(p * q, q) == p


@settings(max_examples=60, deadline=None)
@given(polys)
def test_text_round_trip(p):
    assert parse_poly(to_text(p)) == p


def test_text_form():
    assert to_text(ZERO) == "0"
    assert to_text(Poly([0, 1, 3])) == "x + 3*x^2"
    assert to_text(Poly([Fraction(-1, 2), -1, 0, Fraction(2, 3)])) == "-1/2 + -1*x + 2/3*x^3"


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2") == -2
    for bad in ("0.5", "1/0", "x"):
        with pytest.raises((ValueError, ZeroDivisionError)):
            parse_rational(bad)
