"""Truncated power series over an exact coefficient field.

A ``TruncatedSeries`` holds coefficients c_0..c_N of sum c_k x^k.  The
coefficient type is duck-typed: rationals (``Fraction``) or rational
functions in q (``RationalFunctionQ``) both work, since all operations
only use +, -, *, / and integer powers.  Arithmetic never reads beyond
order N, so truncation is exact by construction.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .polynomials import BivariatePolynomial, RationalFunctionQ


class ZeroConstantTermError(ZeroDivisionError):
    """Series division by a series whose constant term is zero."""


class NonPolynomialCoefficientError(ArithmeticError):
    """A coefficient expected to reduce to an integer polynomial did not."""


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")

    def coefficient(self, k):
        return self.coeffs[k]

    def to_json(self):
        """Exact textual coefficients c_0..c_N."""
        out = []
        for c in self.coeffs:
            if isinstance(c, Fraction):
                out.append(str(c))
            elif isinstance(c, RationalFunctionQ):
                out.append(c.text())
            else:
                out.append(str(c))
        return {"order": self.order, "coefficients": out}


def series_from_coefficients(coeffs, order):
    """Pad or truncate an explicit coefficient list to the given order."""
    cs = list(coeffs)
    if not cs:
        raise ValueError("at least one coefficient is required")
    zero = cs[0] * 0
    while len(cs) <= order:
        cs.append(zero)
    return TruncatedSeries(order, tuple(cs[: order + 1]))


def series_exp_linear(c, order):
    """exp(c*x) truncated: coefficients c^k / k!."""
    coeffs = []
    power = c**0
    for k in range(order + 1):
        coeffs.append(power / factorial(k))
        power = power * c
    return TruncatedSeries(order, tuple(coeffs))


def _check_orders(a, b):
    if a.order != b.order:
        raise ValueError("series orders differ; truncate explicitly first")


def series_add(a, b):
    _check_orders(a, b)
    return TruncatedSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_sub(a, b):
    _check_orders(a, b)
    return TruncatedSeries(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def series_scale(a, c):
    return TruncatedSeries(a.order, tuple(c * x for x in a.coeffs))


def series_mul(a, b):
    _check_orders(a, b)
    zero = a.coeffs[0] * 0
    out = [zero] * (a.order + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(a.order + 1 - i):
            y = b.coeffs[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return TruncatedSeries(a.order, tuple(out))


def series_divide(a, b):
    """Coefficients of a/b; the divisor's constant term must be invertible."""
    _check_orders(a, b)
    if not b.coeffs[0]:
        raise ZeroConstantTermError("divisor has zero constant term")
    b0 = b.coeffs[0]
    out = []
    for k in range(a.order + 1):
        acc = a.coeffs[k]
        for j in range(k):
            acc = acc - out[j] * b.coeffs[k - j]
        out.append(acc / b0)
    return TruncatedSeries(a.order, tuple(out))


def coefficient_as_integer(series, k):
    """k! * c_k for a rational series, asserted to be an integer."""
    value = series.coefficient(k) * factorial(k)
    if not isinstance(value, Fraction):
        value = Fraction(value)
    if value.denominator != 1:
        raise NonPolynomialCoefficientError(
            f"coefficient {k} scaled by {k}! is {value}, not an integer"
        )
    return int(value)


def coefficient_as_polynomial(series, k):
    """k! * c_k reduced to an integer polynomial in q.

    Fails loudly if the rational function's denominator does not cancel
    or if any resulting coefficient is non-integral: either signals that
    the identity under test is violated.
    """
    value = series.coefficient(k)
    if isinstance(value, (int, Fraction)):
        return BivariatePolynomial.constant(coefficient_as_integer(series, k))
    scaled = value * factorial(k)
    if not scaled.is_polynomial():
        raise NonPolynomialCoefficientError(
            f"coefficient {k} has residual denominator {scaled.den.text()}"
        )
    unit = scaled.den.coefficient(0)
    out = {}
    for i, c in enumerate(scaled.num.coefficients):
        c = c / unit
        if c.denominator != 1:
            raise NonPolynomialCoefficientError(
                f"coefficient {k} has non-integer q^{i} term {c}"
            )
        if c:
            out[(i, 0)] = int(c)
    return BivariatePolynomial(out)
