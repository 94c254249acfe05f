from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wreathmac.scalars import (
    Cyclotomic,
    LaurentPoly,
    RatFunc,
    cyclotomic_polynomial,
    euler_phi,
)


def lp(ell, coeffs):
    return LaurentPoly(ell, coeffs)


class TestCyclotomicPolynomial:
    def test_small_orders(self):
        as_ints = lambda ell: tuple(int(c) for c in cyclotomic_polynomial(ell))
        assert as_ints(1) == (-1, 1)
        assert as_ints(2) == (1, 1)
        assert as_ints(3) == (1, 1, 1)
        assert as_ints(4) == (1, 0, 1)
        assert as_ints(6) == (1, -1, 1)

    def test_phi(self):
        assert [euler_phi(k) for k in (1, 2, 3, 4, 5, 6)] == [1, 1, 2, 2, 4, 2]


class TestCyclotomic:
    def test_zeta2_squares_to_one(self):
        z = Cyclotomic.zeta(2)
        assert z * z == 1

    def test_modulus_one(self):
        z = Cyclotomic.zeta(4)
        assert z * z.conjugate() == 1

    def test_zeta3_sum(self):
        # reduce x + x^2 mod x^2 + x + 1
        z = Cyclotomic.zeta(3)
        assert z + z**2 == -1

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            Cyclotomic.of(3, 0).inverse()

    def test_conjugation_is_involutive(self):
        for ell in (1, 2, 3, 4, 5, 6):
            for k in range(ell):
                v = Cyclotomic.zeta(ell, k) + Fraction(1, 2)
                assert v.conjugate().conjugate() == v

    def test_conjugation_fixes_rationals(self):
        v = Cyclotomic.of(5, Fraction(-7, 3))
        assert v.conjugate() == v

    def test_rational_embedding_across_orders(self):
        assert Cyclotomic.of(3, 2) == Cyclotomic.of(1, 2)
        assert hash(Cyclotomic.of(3, 2)) == hash(Cyclotomic.of(1, 2))

    def test_mixed_irrational_orders_rejected(self):
        with pytest.raises(ValueError):
            Cyclotomic.zeta(3) + Cyclotomic.zeta(4)

    def test_power_negative(self):
        z = Cyclotomic.zeta(5)
        assert z**-1 == z**4


def cyclotomics(ell):
    coeff = st.fractions(
        min_value=-3, max_value=3, max_denominator=4
    )
    return st.lists(coeff, min_size=1, max_size=euler_phi(ell)).map(
        lambda cs: Cyclotomic(ell, cs)
    )


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([1, 2, 3, 4]).flatmap(
    lambda ell: st.tuples(cyclotomics(ell), cyclotomics(ell), cyclotomics(ell))
))
def test_cyclotomic_field_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1


class TestLaurentPoly:
    def test_str(self):
        assert str(lp(1, {3: 1, 1: 1})) == "t^3+t"
        assert str(lp(1, {0: 1, 2: 2, 4: 1})) == "t^4+2t^2+1"
        assert str(lp(1, {-1: 1, 0: -1})) == "t^-1-1"
        assert str(lp(1, {})) == "0"

    def test_arith(self):
        a = lp(1, {0: 1, 1: 1})
        assert a * a == lp(1, {0: 1, 1: 2, 2: 1})
        assert a - a == lp(1, {})
        assert a.shift(2) == lp(1, {2: 1, 3: 1})
        assert a.subst_t_power(3) == lp(1, {0: 1, 3: 1})

    def test_pow(self):
        a = lp(1, {0: 1, 1: -1})
        assert a**3 == lp(1, {0: 1, 1: -3, 2: 3, 3: -1})

    def test_divexact(self):
        num = lp(1, {0: 1, 4: -1})
        assert num.divexact(lp(1, {0: 1, 2: -1})) == lp(1, {0: 1, 2: 1})
        with pytest.raises(ValueError):
            num.divexact(lp(1, {0: 1, 3: -1}))

    def test_evaluate(self):
        p = lp(1, {3: 1, 1: 1})
        assert p.evaluate(0) == 0
        assert p.evaluate(1) == 2
        assert lp(1, {-2: 1}).evaluate(2) == Fraction(1, 4)
        with pytest.raises(ZeroDivisionError):
            lp(1, {-1: 1}).evaluate(0)

    def test_cyclotomic_coeffs(self):
        z = Cyclotomic.zeta(4)
        p = lp(4, {1: z})
        assert p * p == lp(4, {2: -1})


class TestRatFunc:
    def test_cancellation(self):
        f = RatFunc(lp(1, {0: 1, 4: -1}), lp(1, {0: 1, 2: -1}))
        assert f == RatFunc(lp(1, {0: 1, 2: 1}))
        assert f.is_polynomial()

    def test_zero(self):
        t = lp(1, {1: 1})
        assert RatFunc(t - t, lp(1, {0: 1})).is_zero()

    def test_telescoping(self):
        # ell*(1 - t^ell) * (1/ell) * t^k / (1 - t^ell) == t^k
        ell, k = 3, 5
        num = lp(1, {0: ell, ell: -ell}) * lp(1, {k: Fraction(1, ell)})
        assert RatFunc(num, lp(1, {0: 1, ell: -1})) == RatFunc(lp(1, {k: 1}))

    def test_specialize(self):
        one_plus_t2 = RatFunc(lp(1, {0: 1, 2: 1}))
        assert one_plus_t2.specialize(1) == 2
        assert RatFunc(lp(1, {1: 1, 3: 1})).specialize(0) == 0
        cancel = RatFunc(lp(1, {0: 1, 4: -1}), lp(1, {0: 1, 2: -1}))
        assert cancel.specialize(1) == 2

    def test_pole(self):
        f = RatFunc(lp(1, {0: 1}), lp(1, {0: 1, 1: -1}))
        with pytest.raises(ZeroDivisionError):
            f.specialize(1)

    def test_normalize_idempotent(self):
        f = RatFunc(lp(1, {1: 2, 3: 2}), lp(1, {0: 4, 1: -4}))
        again = RatFunc(f.num, f.den)
        assert again.num == f.num and again.den == f.den

    def test_cross_multiplication_agrees(self):
        a = RatFunc(lp(1, {1: 1}), lp(1, {0: 1, 1: -1}))
        b = RatFunc(lp(1, {1: 2}), lp(1, {0: 2, 1: -2}))
        assert a == b
        assert a.num * b.den == b.num * a.den

    def test_arith(self):
        t = RatFunc(lp(1, {1: 1}))
        geom = RatFunc(lp(1, {0: 1}), lp(1, {0: 1, 1: -1}))
        assert geom - t * geom == 1
        assert (geom * geom.inverse()) == 1
        assert geom.subst_t_power(2) == RatFunc(lp(1, {0: 1}), lp(1, {0: 1, 2: -1}))


def ratfuncs():
    poly = st.dictionaries(
        st.integers(min_value=-2, max_value=4),
        st.integers(min_value=-4, max_value=4),
        max_size=3,
    ).map(lambda d: lp(1, d))
    return st.tuples(poly, poly.filter(lambda p: not p.is_zero())).map(
        lambda pair: RatFunc(pair[0], pair[1])
    )


@settings(max_examples=40, deadline=None)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_ratfunc_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == 1
