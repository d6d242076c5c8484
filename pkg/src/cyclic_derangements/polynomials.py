"""Exact polynomial arithmetic.

Three layers, all built on arbitrary-precision integers and
``fractions.Fraction`` (no floats anywhere):

* ``BivariatePolynomial``: sparse polynomials in q and t with integer
  coefficients, the carrier for every q,t-generating function.
* ``QPoly``: dense univariate polynomials in q over the rationals, used
  for Sturm chains and as numerator/denominator of rational functions.
* ``RationalFunctionQ``: the field Q(q), used as the coefficient field
  of truncated power series.

Plus the classical q-analogs: q-integers, q-factorials, the t-bracket
[r]_t and Gaussian binomial coefficients.
"""

from fractions import Fraction
from math import gcd as int_gcd


class InexactDivisionError(ArithmeticError):
    """Polynomial division that was required to be exact left a remainder."""


class BivariatePolynomial:
    """Sparse polynomial in q and t with integer coefficients.

    Immutable by convention: the coefficient mapping is copied on
    construction and never mutated afterwards.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        store = {}
        if coeffs:
            for (dq, dt), c in coeffs.items():
                c = int(c)
                if dq < 0 or dt < 0:
                    raise ValueError("monomial degrees must be nonnegative")
                if c:
                    store[(int(dq), int(dt))] = c
        self._coeffs = store

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c, q_degree, t_degree=0):
        return cls({(q_degree, t_degree): c})

    @classmethod
    def q(cls):
        return cls({(1, 0): 1})

    @classmethod
    def t(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_q_coefficients(cls, coeffs):
        """Build a t-free polynomial from an ascending coefficient list."""
        return cls({(i, 0): c for i, c in enumerate(coeffs)})

    # -- basic queries -------------------------------------------------

    def terms(self):
        """Monomials as ((q_degree, t_degree), coefficient), sorted."""
        return sorted(self._coeffs.items())

    def coefficient(self, q_degree, t_degree=0):
        return self._coeffs.get((q_degree, t_degree), 0)

    @property
    def q_degree(self):
        return max((k[0] for k in self._coeffs), default=-1)

    @property
    def t_degree(self):
        return max((k[1] for k in self._coeffs), default=-1)

    def is_zero(self):
        return not self._coeffs

    def is_t_free(self):
        return all(dt == 0 for _, dt in self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        result = BivariatePolynomial.__new__(BivariatePolynomial)
        result._coeffs = out
        return result

    __radd__ = __add__

    def __neg__(self):
        result = BivariatePolynomial.__new__(BivariatePolynomial)
        result._coeffs = {k: -c for k, c in self._coeffs.items()}
        return result

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for (aq, at), ac in self._coeffs.items():
            for (bq, bt), bc in other._coeffs.items():
                k = (aq + bq, at + bt)
                s = out.get(k, 0) + ac * bc
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        result = BivariatePolynomial.__new__(BivariatePolynomial)
        result._coeffs = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = BivariatePolynomial.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- calculus and evaluation ----------------------------------------

    def derivative_q(self):
        return BivariatePolynomial(
            {(dq - 1, dt): c * dq for (dq, dt), c in self._coeffs.items() if dq}
        )

    def evaluate(self, q_value, t_value=1):
        """Exact evaluation; accepts ints or Fractions."""
        total = 0
        for (dq, dt), c in self._coeffs.items():
            total += c * q_value**dq * t_value**dt
        return total

    def specialize_t(self, t_value):
        """Substitute an integer for t, returning a t-free polynomial."""
        out = {}
        for (dq, dt), c in self._coeffs.items():
            k = (dq, 0)
            s = out.get(k, 0) + c * t_value**dt
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        result = BivariatePolynomial.__new__(BivariatePolynomial)
        result._coeffs = out
        return result

    def q_coefficient_list(self):
        """Ascending integer coefficients; requires a t-free polynomial."""
        if not self.is_t_free():
            raise ValueError("polynomial involves t")
        out = [0] * (self.q_degree + 1)
        for (dq, _), c in self._coeffs.items():
            out[dq] = c
        return out

    # -- exact division --------------------------------------------------

    def exact_div(self, divisor):
        """Exact division in Z[q,t]; raises InexactDivisionError otherwise.

        Long division eliminating the lexicographically largest monomial
        of the remainder at each step; terminates because that monomial
        strictly decreases.
        """
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_key = max(divisor._coeffs)
        lead_coeff = divisor._coeffs[lead_key]
        rem = dict(self._coeffs)
        quot = {}
        while rem:
            mk = max(rem)
            dq, dt = mk[0] - lead_key[0], mk[1] - lead_key[1]
            c, residue = divmod(rem[mk], lead_coeff)
            if dq < 0 or dt < 0 or residue:
                raise InexactDivisionError(
                    f"{self!r} is not divisible by {divisor!r}"
                )
            quot[(dq, dt)] = quot.get((dq, dt), 0) + c
            for (bq, bt), bc in divisor._coeffs.items():
                k = (bq + dq, bt + dt)
                s = rem.get(k, 0) - c * bc
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return BivariatePolynomial(quot)

    # -- rendering --------------------------------------------------------

    @staticmethod
    def _term_text(dq, dt, c):
        parts = []
        if dq:
            parts.append("q" if dq == 1 else f"q^{dq}")
        if dt:
            parts.append("t" if dt == 1 else f"t^{dt}")
        body = "".join(parts)
        if not body:
            return str(c)
        if c == 1:
            return body
        if c == -1:
            return f"-{body}"
        return f"{c}{body}"

    def text(self):
        """Canonical human-readable form, ascending by (t, q) degree."""
        if not self._coeffs:
            return "0"
        ordered = sorted(self._coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        pieces = []
        for (dq, dt), c in ordered:
            term = self._term_text(dq, dt, c)
            if not pieces:
                pieces.append(term)
            elif term.startswith("-"):
                pieces.append(f"- {term[1:]}")
            else:
                pieces.append(f"+ {term}")
        return " ".join(pieces)

    def to_json(self):
        """Term list sorted by (q, t); coefficients as decimal strings."""
        return [
            {"q": dq, "t": dt, "c": str(c)} for (dq, dt), c in self.terms()
        ]

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"BivariatePolynomial({self.text()!r})"


def reciprocal_check(poly, n):
    """Test q^n * p(1/q) == p(q) for a t-free polynomial p."""
    if not poly.is_t_free():
        raise ValueError("reciprocal check applies to t-free polynomials")
    if poly.q_degree > n:
        return False
    return all(
        poly.coefficient(k) == poly.coefficient(n - k) for k in range(n + 1)
    )


def is_palindromic(poly):
    """Coefficient symmetry across the polynomial's own support.

    Equivalent to q^(v+d) * p(1/q) == p(q) where v and d are the lowest
    and highest exponents with nonzero coefficient.
    """
    if not poly.is_t_free():
        raise ValueError("palindromicity applies to t-free polynomials")
    if poly.is_zero():
        return True
    coeffs = poly.q_coefficient_list()
    low = next(i for i, c in enumerate(coeffs) if c)
    trimmed = coeffs[low:]
    return trimmed == trimmed[::-1]


# -- q-analogs ---------------------------------------------------------------


def q_integer(i):
    """[i]_q = 1 + q + ... + q^(i-1)."""
    if i < 0:
        raise ValueError("q-integer defined for i >= 0")
    return BivariatePolynomial({(k, 0): 1 for k in range(i)})


def q_factorial(n):
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    result = BivariatePolynomial.one()
    for i in range(1, n + 1):
        result = result * q_integer(i)
    return result


def t_bracket(r):
    """[r]_t = 1 + t + ... + t^(r-1)."""
    if r < 0:
        raise ValueError("t-bracket defined for r >= 0")
    return BivariatePolynomial({(0, k): 1 for k in range(r)})


def q_binomial(m, k):
    """Gaussian binomial via the q-Pascal recurrence."""
    if k < 0 or k > m:
        return BivariatePolynomial.zero()
    # row-by-row Pascal triangle keeps every step in Z[q]
    row = [BivariatePolynomial.one()]
    for m_cur in range(1, m + 1):
        new_row = [BivariatePolynomial.one()]
        for j in range(1, m_cur):
            new_row.append(row[j - 1] + BivariatePolynomial.monomial(1, j) * row[j])
        new_row.append(BivariatePolynomial.one())
        row = new_row
    return row[k]


def q_binomial_by_division(m, k):
    """Gaussian binomial as [m]_q! / ([k]_q! [m-k]_q!), checked exact."""
    if k < 0 or k > m:
        return BivariatePolynomial.zero()
    return q_factorial(m).exact_div(q_factorial(k) * q_factorial(m - k))


# -- univariate rational-coefficient polynomials ------------------------------


class QPoly:
    """Dense univariate polynomial over Fraction, ascending coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @classmethod
    def from_bivariate(cls, poly):
        return cls(poly.q_coefficient_list())

    @property
    def coefficients(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def coefficient(self, k):
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    @property
    def leading(self):
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = QPoly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self._coeffs)
        dn = other.degree
        lead = other.leading
        if len(rem) <= dn:
            return QPoly(), QPoly(rem)
        quot = [Fraction(0)] * (len(rem) - dn)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dn] = c
                for j, b in enumerate(other._coeffs):
                    rem[i - dn + j] -= c * b
        return QPoly(quot), QPoly(rem[:dn])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def derivative(self):
        return QPoly(tuple(i * c for i, c in enumerate(self._coeffs) if i))

    def evaluate(self, x):
        total = Fraction(0)
        for c in reversed(self._coeffs):
            total = total * x + c
        return total

    def monic(self):
        if not self._coeffs:
            return self
        lead = self._coeffs[-1]
        return QPoly(tuple(c / lead for c in self._coeffs))

    def shift_down(self, k):
        """Divide by q^k; requires the k lowest coefficients to vanish."""
        if any(self._coeffs[i] for i in range(min(k, len(self._coeffs)))):
            raise InexactDivisionError("polynomial is not divisible by q^k")
        return QPoly(self._coeffs[k:])

    def text(self, variable="q"):
        if not self._coeffs:
            return "0"
        pieces = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                var = variable if i == 1 else f"{variable}^{i}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"QPoly({self.text()!r})"


def qpoly_gcd(a, b):
    """Monic greatest common divisor by the Euclidean algorithm."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def as_q_polynomial(poly):
    """Bridge a t-free BivariatePolynomial into a QPoly."""
    return QPoly.from_bivariate(poly)


def integer_scaled(poly):
    """Scale a QPoly by the lcm of denominators; returns int coefficients."""
    denom = 1
    for c in poly.coefficients:
        denom = denom * c.denominator // int_gcd(denom, c.denominator)
    return [int(c * denom) for c in poly.coefficients]


# -- rational functions in q ---------------------------------------------------


class RationalFunctionQ:
    """Element of the field Q(q), stored reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, QPoly):
            num = QPoly((num,)) if isinstance(num, (int, Fraction)) else QPoly(num)
        if den is None:
            den = QPoly((1,))
        elif not isinstance(den, QPoly):
            den = QPoly((den,)) if isinstance(den, (int, Fraction)) else QPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = qpoly_gcd(num, den)
        if g and g.degree > 0:
            num = num // g
            den = den // g
        # normalize: monic denominator
        lead = den.leading
        if lead != 1:
            num = num * (1 / lead)
            den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, c):
        return cls(QPoly((c,)))

    @classmethod
    def variable(cls):
        return cls(QPoly.variable())

    @classmethod
    def one(cls):
        return cls(QPoly((1,)))

    @classmethod
    def zero(cls):
        return cls(QPoly())

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.degree == 0

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunctionQ):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunctionQ(QPoly((other,)))
        if isinstance(other, QPoly):
            return RationalFunctionQ(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunctionQ(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        result = RationalFunctionQ.__new__(RationalFunctionQ)
        result.num = -self.num
        result.den = self.den
        return result

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunctionQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunctionQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if exponent < 0:
            return RationalFunctionQ.one() / self ** (-exponent)
        result = RationalFunctionQ.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def text(self):
        if self.is_polynomial():
            return self.num.text()
        return f"({self.num.text()})/({self.den.text()})"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"RationalFunctionQ({self.text()!r})"
