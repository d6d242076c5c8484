from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclic_derangements.polynomials import (
    BivariatePolynomial,
    InexactDivisionError,
    QPoly,
    RationalFunctionQ,
    as_q_polynomial,
    integer_scaled,
    is_palindromic,
    q_binomial,
    q_binomial_by_division,
    q_factorial,
    q_integer,
    qpoly_gcd,
    reciprocal_check,
    t_bracket,
)


def bivariates(max_terms=6, max_deg=4, max_coeff=7):
    return st.dictionaries(
        st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)),
        st.integers(-max_coeff, max_coeff),
        max_size=max_terms,
    ).map(BivariatePolynomial)


def qpolys(max_deg=5):
    return st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=6),
        max_size=max_deg + 1,
    ).map(lambda cs: QPoly(tuple(cs)))


# -- BivariatePolynomial --------------------------------------------------------


def test_zero_and_degree_conventions():
    z = BivariatePolynomial.zero()
    assert z.is_zero() and z.q_degree == -1 and z.t_degree == -1
    assert BivariatePolynomial({(2, 0): 0}).is_zero()
    one = BivariatePolynomial.one()
    assert one.q_degree == 0 and one.coefficient(0, 0) == 1


def test_arithmetic_known_product():
    q, t = BivariatePolynomial.q(), BivariatePolynomial.t()
    left = 1 + q * t
    right = q - t
    assert (left * right).terms() == [
        ((0, 1), -1),
        ((1, 0), 1),
        ((1, 2), -1),
        ((2, 1), 1),
    ]


@given(bivariates(), bivariates(), bivariates())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + BivariatePolynomial.zero() == a
    assert a * BivariatePolynomial.one() == a
    assert a - a == BivariatePolynomial.zero()


@given(bivariates(), st.integers(0, 4))
def test_power_matches_repeated_product(a, k):
    expected = BivariatePolynomial.one()
    for _ in range(k):
        expected = expected * a
    assert a**k == expected


@given(bivariates(), st.integers(-3, 3), st.integers(-3, 3))
def test_evaluate_is_ring_homomorphism(a, qv, tv):
    b = BivariatePolynomial.monomial(2, 1, 1) - 3
    assert (a * b).evaluate(qv, tv) == a.evaluate(qv, tv) * b.evaluate(qv, tv)
    assert (a + b).evaluate(qv, tv) == a.evaluate(qv, tv) + b.evaluate(qv, tv)


def test_derivative_q():
    q, t = BivariatePolynomial.q(), BivariatePolynomial.t()
    p = q**3 * t + 2 * q - 5 + t**2
    assert p.derivative_q() == 3 * q**2 * t + 2


@given(bivariates(), bivariates())
def test_exact_div_roundtrip(a, b):
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            (a * b).exact_div(b)
    else:
        assert (a * b).exact_div(b) == a


def test_exact_div_rejects_remainders():
    q = BivariatePolynomial.q()
    with pytest.raises(InexactDivisionError):
        (q**2 + 1).exact_div(q + 1)


def test_text_and_json_forms():
    q, t = BivariatePolynomial.q(), BivariatePolynomial.t()
    p = q + t + q * t + t**2 + q * t**2
    assert p.text() == "q + t + qt + t^2 + qt^2"
    assert BivariatePolynomial.zero().text() == "0"
    assert (q**2 - 3).text() == "-3 + q^2"
    assert p.to_json()[0] == {"q": 0, "t": 1, "c": "1"}


def test_q_coefficient_list_requires_t_free():
    q, t = BivariatePolynomial.q(), BivariatePolynomial.t()
    assert (1 + 2 * q**2).q_coefficient_list() == [1, 0, 2]
    with pytest.raises(ValueError):
        (q + t).q_coefficient_list()


# -- q-analogs ---------------------------------------------------------------------


def test_q_integer_and_factorial():
    q = BivariatePolynomial.q()
    assert q_integer(0).is_zero()
    assert q_integer(4) == 1 + q + q**2 + q**3
    assert q_factorial(3) == q_integer(1) * q_integer(2) * q_integer(3)
    assert q_factorial(0) == BivariatePolynomial.one()
    assert q_factorial(4).evaluate(1, 1) == 24


def test_t_bracket():
    t = BivariatePolynomial.t()
    assert t_bracket(1) == BivariatePolynomial.one()
    assert t_bracket(3) == 1 + t + t**2


def test_q_binomial_values():
    q = BivariatePolynomial.q()
    assert q_binomial(4, 2) == 1 + q + 2 * q**2 + q**3 + q**4
    assert q_binomial(5, 0) == BivariatePolynomial.one()
    assert q_binomial(3, 5).is_zero()
    for n in range(7):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)
            assert q_binomial(n, k) == q_binomial_by_division(n, k)


def test_reciprocal_and_palindromic():
    q = BivariatePolynomial.q()
    assert reciprocal_check(1 + 6 * q + q**2, 2)
    assert not reciprocal_check(2 + q, 1)
    assert is_palindromic(q + q**2)          # symmetric about its support
    assert is_palindromic(q + 3 * q**2 + q**3)
    assert not is_palindromic(2 + q)
    assert is_palindromic(BivariatePolynomial.zero())


# -- QPoly ------------------------------------------------------------------------


def test_qpoly_normalization_and_degree():
    assert QPoly((Fraction(0), Fraction(0))).degree == -1
    p = QPoly((Fraction(1), Fraction(2), Fraction(0)))
    assert p.degree == 1 and p.leading == 2
    assert p.coefficient(5) == 0


@given(qpolys(), qpolys())
def test_qpoly_divmod_invariant(a, b):
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            divmod(a, b)
        return
    quot, rem = divmod(a, b)
    assert quot * b + rem == a
    assert rem.degree < b.degree or rem.is_zero()


@given(qpolys())
def test_qpoly_derivative_of_product(a):
    b = QPoly((Fraction(-1), Fraction(0), Fraction(3)))
    lhs = (a * b).derivative()
    rhs = a.derivative() * b + a * b.derivative()
    assert lhs == rhs


def test_qpoly_gcd_known():
    x = QPoly.variable()
    a = (x + 1) * (x - 2)
    b = (x + 1) * (x + 3)
    assert qpoly_gcd(a, b) == x + 1
    assert qpoly_gcd(a, QPoly()) == a.monic()


def test_shift_down():
    x = QPoly.variable()
    p = x**2 + x**3
    assert p.shift_down(2) == 1 + x
    with pytest.raises(InexactDivisionError):
        (1 + x).shift_down(1)


def test_integer_scaled():
    p = QPoly((Fraction(1, 2), Fraction(1, 3)))
    assert integer_scaled(p) == [3, 2]


def test_as_q_polynomial_bridge():
    q = BivariatePolynomial.q()
    p = as_q_polynomial(3 + q**2)
    assert p.coefficients == (Fraction(3), Fraction(0), Fraction(1))


# -- RationalFunctionQ ----------------------------------------------------------------


def test_rational_function_reduction():
    x = QPoly.variable()
    f = RationalFunctionQ((x + 1) * (x - 1), (x + 1) * 2)
    assert f.num * 2 == x - 1
    assert f.den == QPoly((Fraction(1),))
    assert f == RationalFunctionQ(x - 1, QPoly((Fraction(2),)))


@given(st.integers(-4, 4), st.integers(1, 4))
def test_rational_function_field_ops(a, b):
    x = RationalFunctionQ.variable()
    f = (x + a) / (x**2 + b)
    assert f * (x**2 + b) == x + a
    assert (f - f).is_zero()
    assert (f / f == RationalFunctionQ.one()) or f.is_zero()
    assert (RationalFunctionQ.one() / f) * f == RationalFunctionQ.one() or f.is_zero()


def test_rational_function_pow_and_zero_division():
    x = RationalFunctionQ.variable()
    assert x**-2 == RationalFunctionQ.one() / (x * x)
    with pytest.raises(ZeroDivisionError):
        x / RationalFunctionQ.zero()


def test_rational_function_is_polynomial():
    x = RationalFunctionQ.variable()
    assert (x * x + 1).is_polynomial()
    assert not (RationalFunctionQ.one() / x).is_polynomial()
