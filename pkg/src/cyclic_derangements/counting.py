"""Counting derangements in C_r wr S_n, exactly, by every available route.

Plain counts d(r, n):

* inclusion-exclusion formula  r^n n! sum_{i=0..n} (-1)^i / (r^i i!)
* two-term recurrence   d_n = (rn - 1) d_{n-1} + r(n-1) d_{n-2}
* one-term recurrence   d_n = rn d_{n-1} + (-1)^n
* transform from the r = 1 counts   d_n = sum_i C(n,i) r^i (r-1)^{n-i} d_i^{(1)}
* exhaustive enumeration

q,t-refinements (q tracks the major index, t the exponent sum), the
descent/excedance Eulerian families, exponential generating function
cross-checks, an embedded table of published reference values (with one
deliberately reported discrepancy), and a rational certificate that
d(r,n) / (r^n n!) converges to exp(-1/r).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .polynomials import (
    BivariatePolynomial,
    QPoly,
    RationalFunctionQ,
    q_factorial,
    q_integer,
    t_bracket,
)
from .series import (
    TruncatedSeries,
    coefficient_as_integer,
    coefficient_as_polynomial,
    series_divide,
    series_exp_linear,
    series_from_coefficients,
    series_scale,
    series_sub,
)
from .stats import (
    descent_count,
    exponent_sum,
    major_index,
    weak_excedance_count,
)
from .wreath import STANDARD, enumerate_derangements, enumerate_group, group_order


def _require_r(r):
    if r < 1:
        raise ValueError(f"modulus r must be at least 1, got {r}")


def _require_n(n):
    if n < 0:
        raise ValueError(f"size n must be nonnegative, got {n}")


# -- plain counts --------------------------------------------------------------


def derangement_count(r, n):
    """Inclusion-exclusion formula; the rational sum provably clears."""
    _require_r(r)
    _require_n(n)
    total = sum(
        Fraction((-1) ** i, r**i * factorial(i)) for i in range(n + 1)
    )
    value = total * r**n * factorial(n)
    # integrality is part of the identity; a failure here is a finding
    assert value.denominator == 1
    return int(value)


def derangement_count_two_term(r, n):
    """d_n = (rn - 1) d_{n-1} + r(n-1) d_{n-2}, d_0 = 1, d_1 = r - 1."""
    _require_r(r)
    _require_n(n)
    if n == 0:
        return 1
    prev_prev, prev = 1, r - 1
    for k in range(2, n + 1):
        prev_prev, prev = prev, (r * k - 1) * prev + r * (k - 1) * prev_prev
    return prev


def derangement_count_one_term(r, n):
    """d_n = rn d_{n-1} + (-1)^n, d_0 = 1."""
    _require_r(r)
    _require_n(n)
    value = 1
    for k in range(1, n + 1):
        value = r * k * value + (-1) ** k
    return value


def derangement_count_mixed_transform(r, n):
    """d_n^{(r)} = sum_i C(n,i) r^i (r-1)^{n-i} d_i^{(1)}; needs r >= 2."""
    _require_n(n)
    if r < 2:
        raise ValueError(
            "the transform degenerates at r = 1; use derangement_count"
        )
    classical = [derangement_count(1, i) for i in range(n + 1)]
    return sum(
        comb(n, i) * r**i * (r - 1) ** (n - i) * classical[i]
        for i in range(n + 1)
    )


def derangement_count_enumerated(r, n, bound=None):
    """Count by exhaustive enumeration (subject to the cardinality bound)."""
    return sum(1 for _ in enumerate_derangements(r, n, bound))


def fixed_point_count(r, n, k):
    """Number of elements with exactly k fixed points: C(n,k) d_{n-k}."""
    _require_r(r)
    _require_n(n)
    if not 0 <= k <= n:
        return 0
    return comb(n, k) * derangement_count(r, n - k)


@dataclass(frozen=True)
class CountTable:
    """One row of counts d_0..d_N for a fixed modulus."""

    r: int
    values: tuple
    method: str


COUNT_METHODS = {
    "formula": derangement_count,
    "two-term": derangement_count_two_term,
    "one-term": derangement_count_one_term,
    "transform": derangement_count_mixed_transform,
    "brute-force": derangement_count_enumerated,
}


def count_table(r, n_max, method="formula", bound=None):
    fn = COUNT_METHODS.get(method)
    if fn is None:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(COUNT_METHODS)}")
    if method == "brute-force":
        values = tuple(fn(r, n, bound) for n in range(n_max + 1))
    else:
        values = tuple(fn(r, n) for n in range(n_max + 1))
    return CountTable(r, values, method)


# Published reference values for r <= 5, n <= 6, kept verbatim for
# comparison.  The (r=3, n=2) cell circulates as 12, but the formula,
# all recurrences, and exhaustive enumeration agree on 13; the cell is
# reported as a discrepancy, never silently normalized.
REFERENCE_COUNTS = {
    1: (1, 0, 1, 2, 9, 44, 265),
    2: (1, 1, 5, 29, 233, 2329, 27949),
    3: (1, 2, 12, 116, 1393, 20894, 376093),
    4: (1, 3, 25, 299, 4785, 95699, 2296777),
    5: (1, 4, 41, 614, 12281, 307024, 9210721),
}


@dataclass(frozen=True)
class Discrepancy:
    r: int
    n: int
    reference: int
    computed: int

    def to_json(self):
        return {
            "r": self.r,
            "n": self.n,
            "reference": self.reference,
            "computed": self.computed,
        }


def reference_discrepancies():
    """Cells where the computed counts differ from the reference table."""
    out = []
    for r, row in sorted(REFERENCE_COUNTS.items()):
        for n, ref in enumerate(row):
            computed = derangement_count(r, n)
            if computed != ref:
                out.append(Discrepancy(r, n, ref, computed))
    return out


# -- q,t-refinements -----------------------------------------------------------


def group_qt_closed(r, n):
    """sum over the whole group of q^maj t^sgn = [r]_t^n [n]_q!."""
    _require_r(r)
    _require_n(n)
    return t_bracket(r) ** n * q_factorial(n)


def group_qt_bruteforce(r, n, order=STANDARD, bound=None):
    acc = {}
    for sigma in enumerate_group(r, n, bound):
        key = (major_index(sigma, order), exponent_sum(sigma))
        acc[key] = acc.get(key, 0) + 1
    return BivariatePolynomial(acc)


def qt_derangement_formula(r, n):
    """[r]_t^n [n]_q! sum_i (-1)^i q^C(i,2) / ([r]_t^i [i]_q!).

    Each term is divided out exactly in Z[q,t]; a residue would signal
    an identity violation and raises InexactDivisionError.
    """
    _require_r(r)
    _require_n(n)
    full = t_bracket(r) ** n * q_factorial(n)
    total = BivariatePolynomial.zero()
    for i in range(n + 1):
        quotient = full.exact_div(t_bracket(r) ** i * q_factorial(i))
        term = BivariatePolynomial.monomial((-1) ** i, comb(i, 2)) * quotient
        total = total + term
    return total


def qt_derangement_two_term(r, n):
    """d_n = ([r]_t [n]_q - q^{n-1}) d_{n-1} + q^{n-1} [r]_t [n-1]_q d_{n-2}."""
    _require_r(r)
    _require_n(n)
    bracket = t_bracket(r)
    if n == 0:
        return BivariatePolynomial.one()
    prev_prev = BivariatePolynomial.one()
    prev = bracket - 1
    for k in range(2, n + 1):
        q_power = BivariatePolynomial.monomial(1, k - 1)
        current = (bracket * q_integer(k) - q_power) * prev + (
            q_power * bracket * q_integer(k - 1)
        ) * prev_prev
        prev_prev, prev = prev, current
    return prev


def qt_derangement_one_term(r, n):
    """d_n = [r]_t [n]_q d_{n-1} + (-1)^n q^C(n,2)."""
    _require_r(r)
    _require_n(n)
    bracket = t_bracket(r)
    value = BivariatePolynomial.one()
    for k in range(1, n + 1):
        value = bracket * q_integer(k) * value + BivariatePolynomial.monomial(
            (-1) ** k, comb(k, 2)
        )
    return value


def qt_derangement_bruteforce(r, n, order=STANDARD, bound=None):
    acc = {}
    for sigma in enumerate_derangements(r, n, bound):
        key = (major_index(sigma, order), exponent_sum(sigma))
        acc[key] = acc.get(key, 0) + 1
    return BivariatePolynomial(acc)


# -- Eulerian / excedance polynomials -------------------------------------------


def exc_derangement_poly(r, n):
    """Excedance polynomial over derangements, by the recurrence

    D_n = (n-1) r q (D_{n-1} + D_{n-2}) + (r-1) D_{n-1}
          + r q (1-q) D'_{n-1},  D_0 = 1, D_1 = r - 1.
    """
    _require_r(r)
    _require_n(n)
    q = BivariatePolynomial.q()
    one = BivariatePolynomial.one()
    if n == 0:
        return one
    prev_prev = one
    prev = BivariatePolynomial.constant(r - 1)
    for k in range(2, n + 1):
        current = (
            (k - 1) * r * q * (prev + prev_prev)
            + (r - 1) * prev
            + r * q * (one - q) * prev.derivative_q()
        )
        prev_prev, prev = prev, current
    return prev


def exc_derangement_bruteforce(r, n, bound=None):
    acc = {}
    for sigma in enumerate_derangements(r, n, bound):
        k = weak_excedance_count(sigma)
        acc[(k, 0)] = acc.get((k, 0), 0) + 1
    return BivariatePolynomial(acc)


def eulerian_by_excedances(r, n, bound=None):
    """A_n^{(r)}(q) = sum over the group of q^exc."""
    acc = {}
    for sigma in enumerate_group(r, n, bound):
        k = weak_excedance_count(sigma)
        acc[(k, 0)] = acc.get((k, 0), 0) + 1
    return BivariatePolynomial(acc)


def eulerian_by_descents(r, n, order=STANDARD, bound=None):
    """A_n^{(r)}(q) = sum over the group of q^(n - des)."""
    acc = {}
    for sigma in enumerate_group(r, n, bound):
        k = n - descent_count(sigma, order)
        acc[(k, 0)] = acc.get((k, 0), 0) + 1
    return BivariatePolynomial(acc)


def eulerian_poly(r, n, route="exc", bound=None):
    """Brute-force Eulerian polynomial; routes must agree (verified suites)."""
    if route == "exc":
        return eulerian_by_excedances(r, n, bound)
    if route == "des":
        return eulerian_by_descents(r, n, bound=bound)
    raise ValueError(f"unknown route {route!r}; choose 'exc' or 'des'")


def eulerian_from_exc(r, n):
    """A_n^{(r)}(q) = sum_k C(n,k) q^k D_{n-k}^{(r)}(q), recurrence-based."""
    _require_r(r)
    _require_n(n)
    total = BivariatePolynomial.zero()
    for k in range(n + 1):
        total = total + BivariatePolynomial.monomial(
            comb(n, k), k
        ) * exc_derangement_poly(r, n - k)
    return total


# -- exponential generating functions --------------------------------------------


def derangement_egf(r, order):
    """exp(-x) / (1 - r x) over Fraction coefficients."""
    _require_r(r)
    numerator = series_exp_linear(Fraction(-1), order)
    denominator = series_from_coefficients([Fraction(1), Fraction(-r)], order)
    return series_divide(numerator, denominator)


def exc_derangement_egf(r, order):
    """(1-q) exp(x(r-1)) / (exp(qrx) - q exp(rx)) over Q(q)."""
    _require_r(r)
    q = RationalFunctionQ.variable()
    one = RationalFunctionQ.one()
    numerator = series_scale(
        series_exp_linear(RationalFunctionQ.constant(r - 1), order), one - q
    )
    denominator = series_sub(
        series_exp_linear(q * r, order),
        series_scale(series_exp_linear(RationalFunctionQ.constant(r), order), q),
    )
    return series_divide(numerator, denominator)


def eulerian_egf(r, order):
    """(1-q) exp(x(r-1)(1-q)) / (1 - q exp(rx(1-q))) over Q(q).

    The numerator exponent carries the factor r-1.  Dropping it (see
    ``eulerian_egf_alternate``) gives a series that matches the
    excedance-based polynomials only at r = 2, which is exactly the
    discrepancy the verification suite demonstrates.
    """
    _require_r(r)
    q = RationalFunctionQ.variable()
    one = RationalFunctionQ.one()
    u = one - q
    numerator = series_scale(series_exp_linear(u * (r - 1), order), u)
    denominator = series_sub(
        series_from_coefficients([one], order),
        series_scale(series_exp_linear(u * r, order), q),
    )
    return series_divide(numerator, denominator)


def eulerian_egf_alternate(r, order):
    """Same as ``eulerian_egf`` but with numerator exponent x(1-q).

    Retained as a negative control: at r = 1 it generates the classical
    descent-normalized Eulerian polynomials rather than the excedance
    normalization used throughout, and for r >= 3 it matches nothing.
    """
    _require_r(r)
    q = RationalFunctionQ.variable()
    one = RationalFunctionQ.one()
    u = one - q
    numerator = series_scale(series_exp_linear(u, order), u)
    denominator = series_sub(
        series_from_coefficients([one], order),
        series_scale(series_exp_linear(u * r, order), q),
    )
    return series_divide(numerator, denominator)


@dataclass(frozen=True)
class CheckLine:
    """One comparison inside a verification report."""

    label: str
    passed: bool
    expected: str = ""
    actual: str = ""

    def to_json(self):
        out = {"label": self.label, "passed": self.passed}
        if not self.passed:
            out["expected"] = self.expected
            out["actual"] = self.actual
        return out


def egf_check_derangements(r, n_max):
    """n! [x^n] of exp(-x)/(1-rx) against the closed-form counts."""
    series = derangement_egf(r, n_max)
    lines = []
    for n in range(n_max + 1):
        expected = derangement_count(r, n)
        actual = coefficient_as_integer(series, n)
        lines.append(
            CheckLine(
                label=f"derangement-egf r={r} n={n}",
                passed=actual == expected,
                expected=str(expected),
                actual=str(actual),
            )
        )
    return lines


def egf_check_eulerian(r, n_max):
    """n! [x^n] of the Eulerian EGF against the convolution polynomials."""
    series = eulerian_egf(r, n_max)
    lines = []
    for n in range(n_max + 1):
        expected = eulerian_from_exc(r, n)
        actual = coefficient_as_polynomial(series, n)
        lines.append(
            CheckLine(
                label=f"eulerian-egf r={r} n={n}",
                passed=actual == expected,
                expected=expected.text(),
                actual=actual.text(),
            )
        )
    return lines


def egf_check_exc_derangements(r, n_max):
    """n! [x^n] of the excedance EGF against the recurrence polynomials."""
    series = exc_derangement_egf(r, n_max)
    lines = []
    for n in range(n_max + 1):
        expected = exc_derangement_poly(r, n)
        actual = coefficient_as_polynomial(series, n)
        lines.append(
            CheckLine(
                label=f"exc-derangement-egf r={r} n={n}",
                passed=actual == expected,
                expected=expected.text(),
                actual=actual.text(),
            )
        )
    return lines


# -- probability certificate ------------------------------------------------------


def probability_gap_certificate(r, n, bracket_terms=30):
    """Certify |d(r,n)/(r^n n!) - exp(-1/r)| < e / (r^{n+1} (n+1)!).

    Entirely rational: exp(-1/r) is bracketed by consecutive partial
    sums of its alternating series, and e is replaced by a rational
    lower bound (valid since e only appears on the larger side).
    """
    _require_r(r)
    _require_n(n)
    ratio = Fraction(derangement_count(r, n), group_order(r, n))
    m = n + bracket_terms
    partial = sum(Fraction((-1) ** i, r**i * factorial(i)) for i in range(m + 1))
    next_term = Fraction((-1) ** (m + 1), r ** (m + 1) * factorial(m + 1))
    lo, hi = sorted((partial, partial + next_term))
    e_lower = sum(Fraction(1, factorial(k)) for k in range(20))
    allowed = e_lower * Fraction(1, r ** (n + 1) * factorial(n + 1))
    worst = max(abs(ratio - lo), abs(ratio - hi))
    return CheckLine(
        label=f"probability-gap r={r} n={n}",
        passed=worst < allowed,
        expected=f"< {allowed}",
        actual=str(worst),
    )


# -- small bridges ----------------------------------------------------------------


def exc_poly_as_qpoly(poly):
    """Excedance polynomials are t-free; view them over the rationals."""
    return QPoly.from_bivariate(poly)
