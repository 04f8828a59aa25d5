"""Exact arithmetic in Q(i)(q).

Every structure constant used by the web calculus lives in the field of
rational functions in one variable q over the Gaussian rationals.  A value
is stored as a reduced fraction of Laurent polynomials: the numerator is a
Laurent polynomial (integer exponents of either sign), the denominator is a
genuine polynomial that is monic, has nonzero constant term, and shares no
factor with the numerator.  Under that normalization equality of values is
structural equality of the stored data, so ScalarQ can be hashed and used
as a dictionary value without any symbolic simplification step.

Also houses the quantum combinatorics: [a]_{q^e}, quantum factorials and
quantum binomial coefficients.
"""

from fractions import Fraction

__all__ = [
    "GaussianRational",
    "LaurentPoly",
    "ScalarQ",
    "ZERO",
    "ONE",
    "Q",
    "QINV",
    "QTILDE",
    "SQRT_MINUS_ONE",
    "qint",
    "qfact",
    "qbinom",
    "specialize",
]


class GaussianRational:
    """A number a + b*sqrt(-1) with rational a, b, in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "{}i".format(self.im)
        sign = "+" if self.im > 0 else "-"
        return "{}{}{}i".format(self.re, sign, abs(self.im))

    def __repr__(self):
        return "GaussianRational({!r}, {!r})".format(self.re, self.im)


_GR_ZERO = GaussianRational(0)
_GR_ONE = GaussianRational(1)


def _coeff(value):
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value)


class LaurentPoly:
    """Laurent polynomial in q with GaussianRational coefficients.

    Stored as a dict exponent -> nonzero coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cs = {}
        if coeffs:
            for e, c in coeffs.items():
                if e != int(e):
                    raise ValueError(f"exponent must be an integer, got {e!r}")
                c = _coeff(c)
                if c:
                    cs[int(e)] = c
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, e, c=1):
        return cls({e: c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        cs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = cs.get(e, _GR_ZERO) + c
            if s:
                cs[e] = s
            elif e in cs:
                del cs[e]
        return LaurentPoly(cs)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        cs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = cs.get(e, _GR_ZERO) + c1 * c2
                if s:
                    cs[e] = s
                elif e in cs:
                    del cs[e]
        return LaurentPoly(cs)

    def scale(self, c):
        c = _coeff(c)
        return LaurentPoly({e: c * v for e, v in self.coeffs.items()})

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def valuation(self):
        if not self.coeffs:
            raise ValueError("valuation of zero")
        return min(self.coeffs)

    def degree(self):
        if not self.coeffs:
            raise ValueError("degree of zero")
        return max(self.coeffs)

    def leading(self):
        return self.coeffs[self.degree()]

    def evaluate(self, q0):
        q0 = _coeff(q0)
        if not q0 and any(e < 0 for e in self.coeffs):
            raise ZeroDivisionError("pole at q0")
        total = _GR_ZERO
        for e, c in self.coeffs.items():
            if e >= 0:
                p = q0
                v = _GR_ONE
                k = e
            else:
                p = q0.inverse()
                v = _GR_ONE
                k = -e
            while k:
                if k & 1:
                    v = v * p
                p = p * p
                k >>= 1
            total = total + c * v
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            parts.append("({})*q^{}".format(self.coeffs[e], e))
        return " + ".join(parts)

    def __repr__(self):
        return "LaurentPoly({!r})".format(self.coeffs)


def _poly_divmod(a, b):
    """Euclidean division for honest polynomials (valuation >= 0)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = {}
    rem = dict(a.coeffs)
    bd = b.degree()
    blead = b.leading()
    while rem:
        rd = max(rem)
        if rd < bd:
            break
        factor = rem[rd] / blead
        q[rd - bd] = factor
        for e, c in b.coeffs.items():
            k = e + rd - bd
            s = rem.get(k, _GR_ZERO) - factor * c
            if s:
                rem[k] = s
            elif k in rem:
                del rem[k]
    return LaurentPoly(q), LaurentPoly(rem)


def _poly_gcd(a, b):
    """Monic gcd of two honest polynomials."""
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a:
        a = a.scale(a.leading().inverse())
    return a


class ScalarQ:
    """Element of Q(i)(q) as a reduced fraction of Laurent polynomials.

    Normal form: the denominator is a polynomial with nonzero constant
    term, monic, and coprime to the numerator.  Equality and hashing are
    structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num)
        if den is None:
            den = LaurentPoly.constant(1)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", LaurentPoly.constant(1))
            return
        num = num.shift(-den.valuation())
        den = den.shift(-den.valuation())
        v = min(num.valuation(), 0)
        p = num.shift(-v)
        g = _poly_gcd(p, den)
        if g.coeffs != {0: _GR_ONE}:
            p = _poly_divmod(p, g)[0]
            den = _poly_divmod(den, g)[0]
        lead = den.leading()
        if lead != _GR_ONE:
            inv = lead.inverse()
            p = p.scale(inv)
            den = den.scale(inv)
        object.__setattr__(self, "num", p.shift(v))
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ScalarQ is immutable")

    @classmethod
    def q_power(cls, e):
        return cls(LaurentPoly.monomial(e))

    def _coerce(self, other):
        if isinstance(other, ScalarQ):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return ScalarQ(LaurentPoly.constant(other))
        return None

    def __bool__(self):
        return bool(self.num)

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
        return ScalarQ(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ScalarQ(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ScalarQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(i)(q)")
        return ScalarQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        coerced = self._coerce(other)
        return coerced / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ONE / (self ** (-k))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_laurent(self):
        return self.den.coeffs == {0: _GR_ONE}

    def triples(self):
        """Serialized form: ([exp, re, im] triples of num, same for den)."""
        def tri(poly):
            return [[e, str(poly.coeffs[e].re), str(poly.coeffs[e].im)]
                    for e in sorted(poly.coeffs)]
        return tri(self.num), tri(self.den)

    def __str__(self):
        if not self.num:
            return "0"
        if self.is_laurent():
            parts = []
            for e in sorted(self.num.coeffs, reverse=True):
                c = self.num.coeffs[e]
                if e == 0:
                    term = "{}".format(c)
                else:
                    cs = "" if c == _GR_ONE else (
                        "-" if c == -_GR_ONE else "{}*".format(c))
                    term = "{}q^{}".format(cs, e) if e != 1 else "{}q".format(cs)
                parts.append(term)
            out = parts[0]
            for term in parts[1:]:
                if term.startswith("-"):
                    out += " - " + term[1:]
                else:
                    out += " + " + term
            return out
        return "({}) / ({})".format(self.num, self.den)

    def __repr__(self):
        return "ScalarQ({!r}, {!r})".format(self.num, self.den)


ZERO = ScalarQ(0)
ONE = ScalarQ(1)
Q = ScalarQ.q_power(1)
QINV = ScalarQ.q_power(-1)
QTILDE = Q - QINV
SQRT_MINUS_ONE = ScalarQ(LaurentPoly.constant(GaussianRational(0, 1)))


def qint(a, e=1):
    """The quantum integer [a]_{q^e} = (q^{ea} - q^{-ea})/(q^e - q^{-e})."""
    if e < 1:
        raise ValueError("exponent step must be >= 1")
    if a < 0:
        return -qint(-a, e)
    total = ZERO
    for j in range(a):
        total = total + ScalarQ.q_power(e * (a - 1 - 2 * j))
    return total


def qfact(a):
    """[a]_q! = [1]_q [2]_q ... [a]_q."""
    if a < 0:
        raise ValueError("negative quantum factorial")
    out = ONE
    for j in range(1, a + 1):
        out = out * qint(j)
    return out


def qbinom(n, k):
    """Quantum binomial: qbinom(n, k) = [n]_q! / ([k]_q! [n-k]_q!).

    The displayed ratio with arguments (k+l choose l) is qbinom(k + l, l).
    """
    if k < 0 or k > n:
        return ZERO
    return qfact(n) / (qfact(k) * qfact(n - k))


def specialize(s, q0):
    """Exact substitution q = q0; raises on a pole."""
    if not isinstance(q0, GaussianRational):
        q0 = GaussianRational(q0)
    d = s.den.evaluate(q0)
    if not d:
        raise ZeroDivisionError("pole at q0")
    return s.num.evaluate(q0) / d
