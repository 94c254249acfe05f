"""Exact scalar arithmetic: cyclotomic numbers, Laurent polynomials in t,
and rational functions in t.

Rational numbers are plain `fractions.Fraction`.  `Cyclotomic` represents
elements of Q(zeta_ell) as residues modulo the ell-th cyclotomic polynomial,
so every identity in the package is exact and equality is decidable.  All
values here are immutable after construction and safe to share between
threads.

Coercion rule: plain ints, Fractions, and rational-valued elements embed
into any Q(zeta_ell); two genuinely irrational values must carry the same
order ell to be combined.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Cyclotomic",
    "LaurentPoly",
    "RatFunc",
    "cyclotomic_polynomial",
    "euler_phi",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


# ---------------------------------------------------------------------------
# dense polynomials over Q, constant term first (internal helpers)


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO)
        for i in range(n)
    )


def _psub(a, b):
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else _ZERO) - (b[i] if i < len(b) else _ZERO)
        for i in range(n)
    )


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    if len(r) < len(b):
        return (), _trim(r)
    q = [_ZERO] * (len(r) - len(b) + 1)
    inv = _ONE / b[-1]
    for shift in range(len(r) - len(b), -1, -1):
        c = r[shift + len(b) - 1] * inv
        if c:
            q[shift] = c
            for i, cb in enumerate(b):
                r[shift + i] -= c * cb
    return _trim(q), _trim(r)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(ell: int) -> tuple:
    """Coefficients of Phi_ell, constant term first.

    Computed by dividing x^ell - 1 by Phi_d for every proper divisor d;
    memoized per ell.

    >>> cyclotomic_polynomial(3)
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))
    """
    if ell < 1:
        raise ValueError("order must be a positive integer")
    poly = _trim([Fraction(-1)] + [_ZERO] * (ell - 1) + [_ONE])
    for d in range(1, ell):
        if ell % d == 0:
            poly, rem = _pdivmod(poly, cyclotomic_polynomial(d))
            if rem:
                raise AssertionError("cyclotomic division left a remainder")
    return poly


def euler_phi(ell: int) -> int:
    """Degree of Phi_ell."""
    return len(cyclotomic_polynomial(ell)) - 1


# ---------------------------------------------------------------------------


class Cyclotomic:
    """An element of Q(zeta_ell), reduced modulo Phi_ell.

    zeta_ell is a fixed primitive ell-th root of unity; elements are stored
    as coefficient tuples of length phi(ell) in the power basis
    1, zeta, ..., zeta^(phi(ell)-1).

    >>> z = Cyclotomic.zeta(3)
    >>> (z + z * z).as_fraction()
    Fraction(-1, 1)
    """

    __slots__ = ("ell", "coeffs")

    def __init__(self, ell: int, coeffs):
        phi = euler_phi(ell)
        cs = [_frac(c) for c in coeffs]
        if len(cs) > phi:
            _, rem = _pdivmod(tuple(cs), cyclotomic_polynomial(ell))
            cs = list(rem)
        cs.extend([_ZERO] * (phi - len(cs)))
        self.ell = ell
        self.coeffs = tuple(cs[:phi])

    @staticmethod
    def of(ell: int, value) -> "Cyclotomic":
        """Embed an int, Fraction, or Cyclotomic into Q(zeta_ell)."""
        if isinstance(value, Cyclotomic):
            if value.ell == ell:
                return value
            if value.is_rational():
                return Cyclotomic(ell, (value.as_fraction(),))
            raise ValueError(
                f"cannot move an irrational value from order {value.ell} to {ell}"
            )
        return Cyclotomic(ell, (_frac(value),))

    @staticmethod
    def zeta(ell: int, power: int = 1) -> "Cyclotomic":
        """zeta_ell raised to `power`."""
        power %= ell
        return Cyclotomic(ell, (_ZERO,) * power + (_ONE,))

    # -- predicates and views ------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def as_int(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return f.numerator

    # -- coercion ------------------------------------------------------------

    def _unify(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic(self.ell, (_frac(other),))
        elif not isinstance(other, Cyclotomic):
            return None
        if self.ell == other.ell:
            return self, other
        if self.is_rational():
            return Cyclotomic.of(other.ell, self), other
        if other.is_rational():
            return self, Cyclotomic.of(self.ell, other)
        raise ValueError(
            f"mixed cyclotomic orders {self.ell} and {other.ell}"
        )

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        pair = self._unify(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.ell, _padd(a.coeffs, b.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.ell, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        pair = self._unify(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.ell, _psub(a.coeffs, b.coeffs))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        pair = self._unify(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.ell, _pmul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Field inverse, via the extended Euclidean algorithm mod Phi_ell."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        phi_poly = cyclotomic_polynomial(self.ell)
        r0, r1 = phi_poly, _trim(self.coeffs)
        s0, s1 = (), (_ONE,)  # invariant: s_i * self == r_i  (mod Phi_ell)
        while r1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if len(r0) != 1:
            raise AssertionError("element not invertible mod Phi_ell")
        scale = _ONE / r0[0]
        return Cyclotomic(self.ell, tuple(c * scale for c in s0))

    def __truediv__(self, other):
        pair = self._unify(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic(self.ell, (_ONE,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation: zeta |-> zeta^(ell-1)."""
        raw = [_ZERO] * self.ell
        for k, c in enumerate(self.coeffs):
            raw[(self.ell - k) % self.ell] += c
        return Cyclotomic(self.ell, raw)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        try:
            pair = self._unify(other)
        except ValueError:
            return False
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self):
        # trailing zeros stripped so that equal rational values hash alike
        # regardless of the ambient order
        return hash(_trim(self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.ell}, {self.coeffs!r})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}z" if k == 1 else f"{mag}z^{k}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + term)
        return "".join(parts)


# ---------------------------------------------------------------------------
# dense helpers over Cyclotomic (division, gcd)


def _cdivmod(a: list, b: list, ell: int):
    """divmod of dense Cyclotomic coefficient lists (constant term first)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    if len(r) < len(b):
        return [], r
    q = [Cyclotomic.of(ell, 0)] * (len(r) - len(b) + 1)
    inv = b[-1].inverse()
    for shift in range(len(r) - len(b), -1, -1):
        c = r[shift + len(b) - 1] * inv
        if not c.is_zero():
            q[shift] = c
            for i, cb in enumerate(b):
                r[shift + i] = r[shift + i] - c * cb
    while r and r[-1].is_zero():
        r.pop()
    while q and q[-1].is_zero():
        q.pop()
    return q, r


class LaurentPoly:
    """Sparse Laurent polynomial in t with coefficients in Q(zeta_ell).

    Stored as a mapping exponent -> coefficient with no explicit zeros;
    instances are treated as immutable.
    """

    __slots__ = ("ell", "coeffs")

    def __init__(self, ell: int, coeffs=None):
        data = {}
        for e, c in (coeffs or {}).items():
            c = Cyclotomic.of(ell, c)
            if not c.is_zero():
                e = int(e)
                if e in data:
                    c = data[e] + c
                    if c.is_zero():
                        del data[e]
                        continue
                data[e] = c
        self.ell = ell
        self.coeffs = data

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero(ell: int) -> "LaurentPoly":
        return LaurentPoly(ell)

    @staticmethod
    def one(ell: int) -> "LaurentPoly":
        return LaurentPoly(ell, {0: 1})

    @staticmethod
    def t(ell: int, exponent: int = 1) -> "LaurentPoly":
        return LaurentPoly(ell, {exponent: 1})

    @staticmethod
    def term(ell: int, exponent: int, coeff) -> "LaurentPoly":
        return LaurentPoly(ell, {exponent: coeff})

    @staticmethod
    def one_minus_t(ell: int, exponent: int) -> "LaurentPoly":
        """1 - t^exponent."""
        return LaurentPoly(ell, {0: 1, exponent: -1})

    # -- predicates and views --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return list(self.coeffs.keys()) == [0] and self.coeffs[0].is_one()

    def is_rational_coeffs(self) -> bool:
        return all(c.is_rational() for c in self.coeffs.values())

    def coeff(self, exponent: int) -> Cyclotomic:
        return self.coeffs.get(exponent, Cyclotomic.of(self.ell, 0))

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self.coeffs)

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no valuation")
        return min(self.coeffs)

    def sorted_items(self, reverse: bool = True):
        return sorted(self.coeffs.items(), reverse=reverse)

    # -- arithmetic --------------------------------------------------------------

    def _unify(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = LaurentPoly.term(self.ell, 0, Cyclotomic.of(self.ell, other))
        elif not isinstance(other, LaurentPoly):
            return None
        if self.ell == other.ell:
            return self, other
        if self.is_rational_coeffs():
            return self._retag(other.ell), other
        if other.is_rational_coeffs():
            return self, other._retag(self.ell)
        raise ValueError(f"mixed cyclotomic orders {self.ell} and {other.ell}")

    def _retag(self, ell: int) -> "LaurentPoly":
        return LaurentPoly(ell, {e: Cyclotomic.of(ell, c) for e, c in self.coeffs.items()})

    def __add__(self, other):
        pair = self._unify(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        data = dict(a.coeffs)
        for e, c in b.coeffs.items():
            s = data.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                data.pop(e, None)
            else:
                data[e] = s
        out = LaurentPoly.__new__(LaurentPoly)
        out.ell = a.ell
        out.coeffs = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.ell = self.ell
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        pair = self._unify(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        pair = self._unify(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        data = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                p = c1 * c2
                s = data.get(e)
                s = p if s is None else s + p
                if s.is_zero():
                    data.pop(e, None)
                else:
                    data[e] = s
        out = LaurentPoly.__new__(LaurentPoly)
        out.ell = a.ell
        out.coeffs = data
        return out

    __rmul__ = __mul__

    def scale(self, scalar) -> "LaurentPoly":
        c = Cyclotomic.of(self.ell, scalar) if not isinstance(scalar, Cyclotomic) else scalar
        if c.ell != self.ell:
            c = Cyclotomic.of(self.ell, c)
        if c.is_zero():
            return LaurentPoly.zero(self.ell)
        return LaurentPoly(self.ell, {e: v * c for e, v in self.coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.ell = self.ell
        out.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return out

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers produce rational functions; use RatFunc")
        result = LaurentPoly.one(self.ell)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def subst_t_power(self, m: int) -> "LaurentPoly":
        """Substitute t -> t^m (m >= 1); coefficients are untouched."""
        if m < 1:
            raise ValueError("substitution exponent must be >= 1")
        return LaurentPoly(self.ell, {e * m: c for e, c in self.coeffs.items()})

    def conjugate_coeffs(self) -> "LaurentPoly":
        return LaurentPoly(self.ell, {e: c.conjugate() for e, c in self.coeffs.items()})

    def evaluate(self, value) -> Cyclotomic:
        """Evaluate at t = value (exact).

        Negative exponents require the value to be invertible.
        """
        v = Cyclotomic.of(self.ell, value)
        total = Cyclotomic.of(self.ell, 0)
        for e, c in self.coeffs.items():
            total = total + c * v**e
        return total

    # -- division ---------------------------------------------------------------

    def _dense(self):
        """Dense coefficient list of self / t^valuation (constant term first)."""
        v = self.valuation()
        top = self.degree()
        zero = Cyclotomic.of(self.ell, 0)
        out = [zero] * (top - v + 1)
        for e, c in self.coeffs.items():
            out[e - v] = c
        return out, v

    def divexact(self, other) -> "LaurentPoly":
        """Exact division; raises ValueError when the division is not exact."""
        pair = self._unify(other)
        if pair is None:
            raise TypeError(f"cannot divide by {other!r}")
        a, b = pair
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if a.is_zero():
            return LaurentPoly.zero(a.ell)
        da, va = a._dense()
        db, vb = b._dense()
        q, r = _cdivmod(da, db, a.ell)
        if r:
            raise ValueError("inexact polynomial division")
        return LaurentPoly(a.ell, {i + va - vb: c for i, c in enumerate(q)})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            inv = Cyclotomic.of(self.ell, other).inverse()
            return self.scale(inv)
        return RatFunc(self, other)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        try:
            pair = self._unify(other)
        except ValueError:
            return False
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"LaurentPoly({self.ell}, {{{', '.join(f'{e}: {c}' for e, c in self.sorted_items())}}})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.sorted_items():
            if c.is_rational():
                f = c.as_fraction()
                neg = f < 0
                mag = abs(f)
                body = "" if (mag == 1 and e != 0) else (
                    str(mag) if mag.denominator == 1 else f"({mag})"
                )
            else:
                neg = False
                body = f"({c})"
            if e == 1:
                body += "t"
            elif e != 0:
                body += f"t^{e}"
            sign = "-" if neg else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)


def _laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the polynomial parts (valuations discarded)."""
    if a.is_zero():
        base = b
    elif b.is_zero():
        base = a
    else:
        da, _ = a._dense()
        db, _ = b._dense()
        while db:
            _, r = _cdivmod(da, db, a.ell)
            da, db = db, r
        base = LaurentPoly(a.ell, dict(enumerate(da)))
    if base.is_zero():
        return base
    lead = base.coeff(base.degree())
    if not lead.is_one():
        base = base.scale(lead.inverse())
    return base.shift(-base.valuation())


class RatFunc:
    """A quotient of Laurent polynomials, kept in canonical form.

    Canonical form: the denominator is a monic polynomial with a nonzero
    constant term, sharing no factor with the numerator; the zero value is
    0/1.  Equality of values therefore reduces to equality of the stored
    pairs.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den=None):
        if den is None:
            den = LaurentPoly.one(num.ell)
        if not isinstance(num, LaurentPoly) or not isinstance(den, LaurentPoly):
            raise TypeError("RatFunc expects LaurentPoly numerator and denominator")
        pair = num._unify(den)
        num, den = pair
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = LaurentPoly.zero(num.ell)
            self.den = LaurentPoly.one(num.ell)
            return
        if not den.is_one():
            vn, vd = num.valuation(), den.valuation()
            num = num.shift(-vn)
            den = den.shift(-vd)
            g = _laurent_gcd(num, den)
            if not g.is_one():
                num = num.divexact(g)
                den = den.divexact(g)
            lead = den.coeff(0)  # nonzero: den has valuation 0
            if not lead.is_one():
                inv = lead.inverse()
                num = num.scale(inv)
                den = den.scale(inv)
            num = num.shift(vn - vd)
        self.num = num
        self.den = den

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero(ell: int) -> "RatFunc":
        return RatFunc(LaurentPoly.zero(ell))

    @staticmethod
    def one(ell: int) -> "RatFunc":
        return RatFunc(LaurentPoly.one(ell))

    @staticmethod
    def of(ell: int, value) -> "RatFunc":
        """Build a RatFunc from a scalar, LaurentPoly, or RatFunc."""
        if isinstance(value, RatFunc):
            return value if value.ell == ell else RatFunc(value.num._retag(ell), value.den._retag(ell))
        if isinstance(value, LaurentPoly):
            return RatFunc(value if value.ell == ell else value._retag(ell))
        return RatFunc(LaurentPoly.term(ell, 0, value))

    @property
    def ell(self) -> int:
        return self.num.ell

    # -- predicates and views ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def to_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def as_scalar(self) -> Cyclotomic:
        """The value as a constant; raises if t actually occurs."""
        p = self.to_laurent()
        if p.is_zero():
            return Cyclotomic.of(self.ell, 0)
        if p.degree() != 0:
            raise ValueError(f"{self} is not constant")
        return p.coeff(0)

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, Cyclotomic, LaurentPoly)):
            return RatFunc.of(self.ell, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num + o.num)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = RatFunc.one(self.ell)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, scalar) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        num = self.num.scale(scalar)
        if num.is_zero():
            return RatFunc.zero(self.ell)
        out.num = num
        out.den = self.den
        return out

    def subst_t_power(self, m: int) -> "RatFunc":
        """Substitute t -> t^m (m >= 1)."""
        return RatFunc(self.num.subst_t_power(m), self.den.subst_t_power(m))

    def specialize(self, value) -> Cyclotomic:
        """Exact evaluation at t = value; raises ZeroDivisionError at a pole."""
        d = self.den.evaluate(value)
        if d.is_zero():
            raise ZeroDivisionError(f"pole at t = {value}")
        return self.num.evaluate(value) / d

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"
