"""Dense univariate polynomials over the rationals.

``Poly`` is immutable; coefficient ``i`` multiplies ``x**i`` and the zero
polynomial has no coefficients.  Besides ring arithmetic the module provides
exact definite integrals over ``[0, 1]`` against the weights ``1``,
``(1-x)/x``, ``ln(1-x)/x`` and ``ln(1-x)/(1-x)``, each computed from the
closed-form moments of the monomials.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

from .errors import DivisionByZeroPoly, NonvanishingAtOne, NonvanishingAtZero, NonzeroRemainder
from .exact_core import binomial, harmonic

__all__ = [
    "Poly",
    "X",
    "ONE",
    "ZERO",
    "add",
    "sub",
    "mul",
    "scale",
    "evaluate",
    "derivative",
    "compose_affine",
    "divide_exact",
    "integrate01",
    "integrate01_w_geom",
    "integrate01_w_log_over_x",
    "integrate01_w_log_over_1mx",
    "format_rational",
    "parse_rational",
    "parse_poly",
]

Scalar = Union[int, Fraction]


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return to_text(self)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        return evaluate(self, x)


def _coerce(p) -> Poly | None:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly([p])
    return None


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def sub(p: Poly, q: Poly) -> Poly:
    return p - q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def scale(p: Poly, c: Scalar) -> Poly:
    return p * Fraction(c)


def evaluate(p: Poly, x: Scalar):
    """Horner evaluation.  Exact for rational ``x``; floats pass through."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return Fraction(acc) if not isinstance(acc, float) else acc


def derivative(p: Poly, k: int = 1) -> Poly:
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    if k == 0:
        return p
    return Poly(
        c * (factorial(i) // factorial(i - k)) for i, c in enumerate(p.coeffs) if i >= k
    )


def compose_affine(p: Poly, a: Scalar, b: Scalar) -> Poly:
    """Return ``p(a + b*x)`` expanded."""
    lin = Poly([a, b])
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * lin + c
    return acc


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if q.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lead = q.coeffs[-1]
    if len(rem) - 1 < dq:
        return ZERO, p
    quot = [Fraction(0)] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i] / lead
        quot[i - dq] = c
        if c:
            for j, b in enumerate(q.coeffs):
                rem[i - dq + j] -= c * b
    return Poly(quot), Poly(rem[:dq])


def divide_exact(p: Poly, q: Poly) -> Poly:
    """Quotient ``p / q``; raises :class:`NonzeroRemainder` if ``q`` does not divide ``p``."""
    quot, rem = divmod_poly(p, q)
    if not rem.is_zero():
        raise NonzeroRemainder(f"({p}) / ({q}) leaves remainder {rem}")
    return quot


def integrate01(p: Poly) -> Fraction:
    """int_0^1 p(x) dx."""
    return sum((c / (k + 1) for k, c in enumerate(p.coeffs)), Fraction(0))


def integrate01_w_geom(p: Poly) -> Fraction:
    """int_0^1 (1-x)/x * p(x) dx; needs p(0) = 0."""
    if p.coeff(0) != 0:
        raise NonvanishingAtZero(f"constant term {p.coeff(0)} makes (1-x)/x weight diverge")
    return sum(
        (c * Fraction(1, k * (k + 1)) for k, c in enumerate(p.coeffs) if k >= 1), Fraction(0)
    )


def integrate01_w_log_over_x(p: Poly) -> Fraction:
    """int_0^1 ln(1-x)/x * p(x) dx, using int_0^1 x^(k-1) ln(1-x) dx = -H_k/k."""
    if p.coeff(0) != 0:
        raise NonvanishingAtZero(f"constant term {p.coeff(0)} makes ln(1-x)/x weight diverge")
    return sum(
        (-c * harmonic(k) / k for k, c in enumerate(p.coeffs) if k >= 1), Fraction(0)
    )


def integrate01_w_log_over_1mx(p: Poly) -> Fraction:
    """int_0^1 ln(1-x)/(1-x) * p(x) dx; needs p(1) = 0.

    After y = 1 - x each monomial y^k contributes int_0^1 y^(k-1) ln y dy = -1/k^2.
    """
    if evaluate(p, 1) != 0:
        raise NonvanishingAtOne(f"p(1) = {evaluate(p, 1)} makes ln(1-x)/(1-x) weight diverge")
    q = compose_affine(p, 1, -1)
    return sum((-c / (k * k) for k, c in enumerate(q.coeffs) if k >= 1), Fraction(0))


def format_rational(r: Scalar) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


_RAT = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals are rejected to keep values exact."""
    m = _RAT.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def to_text(p: Poly) -> str:
    """Canonical form ``c0 + c1*x + c2*x^2``; unit coefficients are dropped."""
    if p.is_zero():
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            terms.append(format_rational(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{format_rational(c)}*{mono}")
    return " + ".join(terms)


_TERM = re.compile(r"^(?:([+-]?\d+(?:/\d+)?)\*?)?(x(?:\^(\d+))?)?$")


def parse_poly(text: str) -> Poly:
    """Inverse of :func:`to_text`."""
    if text.strip() == "0":
        return ZERO
    coeffs: dict[int, Fraction] = {}
    for raw in text.split(" + "):
        m = _TERM.match(raw.strip())
        if not m or not (m.group(1) or m.group(2)):
            raise ValueError(f"bad polynomial term {raw!r}")
        c = parse_rational(m.group(1)) if m.group(1) else Fraction(1)
        k = 0 if not m.group(2) else int(m.group(3) or 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
    top = max(coeffs)
    return Poly(coeffs.get(i, 0) for i in range(top + 1))


def binomial_power(a: Scalar, b: Scalar, n: int) -> Poly:
    """(a + b x)^n expanded by the binomial theorem."""
    a, b = Fraction(a), Fraction(b)
    return Poly(binomial(n, k) * a ** (n - k) * b**k for k in range(n + 1))
