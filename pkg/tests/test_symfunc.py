from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wreathmac.combinatorics import (
    centralizer_order,
    partitions_of,
    sn_dimension,
)
from wreathmac.scalars import LaurentPoly, RatFunc
from wreathmac.symfunc import (
    SymFunc,
    fake_degree,
    littlewood_richardson,
    macdonald_tt,
    multiply,
    plethysm,
    powersum_to_schur,
    scalar_product,
    schur_to_powersum,
    sn_character,
    sn_character_table,
)

import oracle


def rf(value) -> RatFunc:
    return RatFunc.of(1, value)


half = Fraction(1, 2)


class TestCharacters:
    def test_trivial_character(self):
        for mu in partitions_of(4):
            assert sn_character((4,), mu) == 1

    def test_sign_at_transposition(self):
        assert sn_character((1, 1), (2,)) == -1

    def test_standard_at_identity(self):
        assert sn_character((2, 1), (1, 1, 1)) == 2

    def test_s3_table(self):
        expected = {
            ((3,), (3,)): 1, ((3,), (2, 1)): 1, ((3,), (1, 1, 1)): 1,
            ((2, 1), (3,)): -1, ((2, 1), (2, 1)): 0, ((2, 1), (1, 1, 1)): 2,
            ((1, 1, 1), (3,)): 1, ((1, 1, 1), (2, 1)): -1, ((1, 1, 1), (1, 1, 1)): 1,
        }
        assert sn_character_table(3) == expected

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            sn_character((2, 1), (2,))

    def test_orthogonality(self):
        for n in range(1, 6):
            parts = partitions_of(n)
            table = sn_character_table(n)
            for lam in parts:
                for mu in parts:
                    total = sum(
                        Fraction(table[(lam, rho)] * table[(mu, rho)], centralizer_order(rho))
                        for rho in parts
                    )
                    assert total == (1 if lam == mu else 0)

    def test_dimension_column(self):
        for n in range(1, 6):
            for lam in partitions_of(n):
                assert sn_character(lam, (1,) * n) == sn_dimension(lam)


class TestBasisTransitions:
    def test_schur_one_box(self):
        assert schur_to_powersum((1,)) == SymFunc.powersum((1,))

    def test_schur_row_two(self):
        expected = SymFunc(1, "p", {(1, 1): rf(half), (2,): rf(half)})
        assert schur_to_powersum((2,)) == expected

    def test_schur_column_two(self):
        expected = SymFunc(1, "p", {(1, 1): rf(half), (2,): rf(-half)})
        assert schur_to_powersum((1, 1)) == expected

    def test_round_trip(self):
        for n in range(6):
            for lam in partitions_of(n):
                back = powersum_to_schur(schur_to_powersum(lam))
                assert back == SymFunc.schur(lam)

    def test_powersum_expansions(self):
        assert powersum_to_schur(SymFunc.powersum((1, 1))) == SymFunc(
            1, "s", {(2,): rf(1), (1, 1): rf(1)}
        )
        assert powersum_to_schur(SymFunc.powersum((2,))) == SymFunc(
            1, "s", {(2,): rf(1), (1, 1): rf(-1)}
        )


class TestMultiply:
    def test_power_sums_concatenate(self):
        assert multiply(SymFunc.powersum((2,)), SymFunc.powersum((1,))) == SymFunc.powersum((2, 1))

    def test_pieri_squares(self):
        prod = multiply(schur_to_powersum((1,)), schur_to_powersum((1,)))
        assert powersum_to_schur(prod) == SymFunc(1, "s", {(2,): rf(1), (1, 1): rf(1)})

    def test_pieri_row(self):
        prod = multiply(schur_to_powersum((1,)), schur_to_powersum((2,)))
        assert powersum_to_schur(prod) == SymFunc(1, "s", {(3,): rf(1), (2, 1): rf(1)})


class TestPlethysm:
    def test_power_sum_composition(self):
        assert plethysm(SymFunc.powersum((2,)), SymFunc.powersum((3,))) == SymFunc.powersum((6,))
        assert plethysm(SymFunc.powersum((3,)), SymFunc.powersum((2,))) == SymFunc.powersum((6,))

    def test_constants(self):
        p4 = SymFunc.powersum((4,))
        assert plethysm(p4, SymFunc.zero(1)) == SymFunc.zero(1)
        assert plethysm(p4, SymFunc.one(1)) == SymFunc.one(1)

    @pytest.mark.parametrize("r,s", [(2, 3), (3, 2)])
    def test_parameter_monomials(self, r, s):
        # p_r[c t^2 p_1 - (1/(1-t)) p_s] = c t^(2r) p_r - (1/(1-t^r)) p_(sr)
        c = Fraction(5, 7)
        geom = RatFunc(LaurentPoly.one(1), LaurentPoly.one_minus_t(1, 1))
        inner = SymFunc(1, "p", {(1,): rf(LaurentPoly.term(1, 2, c)), (s,): -geom})
        expected = SymFunc(
            1,
            "p",
            {
                (r,): rf(LaurentPoly.term(1, 2 * r, c)),
                (s * r,): -RatFunc(LaurentPoly.one(1), LaurentPoly.one_minus_t(1, r)),
            },
        )
        assert plethysm(SymFunc.powersum((r,)), inner) == expected

    def test_outer_coefficients_pass_through(self):
        outer = SymFunc(1, "p", {(1,): rf(LaurentPoly.t(1))})  # t * p_1
        inner = SymFunc.powersum((2,))
        assert plethysm(outer, inner) == SymFunc(1, "p", {(2,): rf(LaurentPoly.t(1))})

    def test_hook_content_identity(self):
        # s_lam at the alphabet 1/(1-t) equals t^b(lam) / hook_polynomial(lam)
        from wreathmac.combinatorics import b_invariant, hook_polynomial

        geom = SymFunc(1, "p", {(): RatFunc(LaurentPoly.one(1), LaurentPoly.one_minus_t(1, 1))})
        for n in range(7):
            for lam in partitions_of(n):
                value = plethysm(schur_to_powersum(lam), geom).coefficient(())
                expected = RatFunc(
                    LaurentPoly.t(1, b_invariant(lam)), hook_polynomial(lam, 1)
                )
                assert value == expected


def small_symfuncs():
    indices = st.sampled_from([(), (1,), (2,), (1, 1)])
    coeff = st.builds(
        lambda num, exp: rf(LaurentPoly.term(1, exp, num)),
        st.fractions(min_value=-2, max_value=2, max_denominator=3).filter(bool),
        st.integers(min_value=0, max_value=2),
    )
    return st.dictionaries(indices, coeff, min_size=1, max_size=2).map(
        lambda d: SymFunc(1, "p", d)
    )


@settings(max_examples=25, deadline=None)
@given(small_symfuncs(), small_symfuncs(), small_symfuncs())
def test_plethysm_associativity(f, g, h):
    assert plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h))


@settings(max_examples=25, deadline=None)
@given(small_symfuncs())
def test_plethysm_identity(f):
    p1 = SymFunc.powersum((1,))
    assert plethysm(p1, f) == f
    assert plethysm(f, p1) == f


class TestScalarProduct:
    def test_schur_orthonormal(self):
        for n in range(5):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    got = scalar_product(SymFunc.schur(lam), SymFunc.schur(mu))
                    assert got == (RatFunc.one(1) if lam == mu else RatFunc.zero(1))

    def test_power_sum_norms(self):
        p2 = SymFunc.powersum((2,))
        p11 = SymFunc.powersum((1, 1))
        assert scalar_product(p2, p2) == rf(2)
        assert scalar_product(p11, p2) == RatFunc.zero(1)

    def test_frobenius_isometry(self):
        # z-weighted character inner products match Schur orthonormality
        for n in range(1, 6):
            table = sn_character_table(n)
            parts = partitions_of(n)
            for lam in parts:
                ch_lam = SymFunc(
                    1,
                    "p",
                    {
                        mu: rf(Fraction(table[(lam, mu)], centralizer_order(mu)))
                        for mu in parts
                    },
                )
                for kappa in parts:
                    ch_kappa = SymFunc(
                        1,
                        "p",
                        {
                            mu: rf(Fraction(table[(kappa, mu)], centralizer_order(mu)))
                            for mu in parts
                        },
                    )
                    inner = sum(
                        Fraction(
                            table[(lam, mu)] * table[(kappa, mu)], centralizer_order(mu)
                        )
                        for mu in parts
                    )
                    assert scalar_product(ch_lam, ch_kappa) == rf(inner)


class TestLittlewoodRichardson:
    def test_pieri_cases(self):
        assert littlewood_richardson(((1,), (1,)), (2,)) == 1
        assert littlewood_richardson(((1,), (1,)), (1, 1)) == 1

    def test_row_times_box(self):
        assert littlewood_richardson(((2,), (1,)), (2, 1)) == 1

    def test_size_mismatch_vanishes(self):
        assert littlewood_richardson(((2,), (1,)), (2,)) == 0


class TestGradedCharacterSym:
    def test_single_box(self):
        assert macdonald_tt((1,)) == SymFunc.powersum((1,))

    def test_row_two_schur_expansion(self):
        got = powersum_to_schur(macdonald_tt((2,)))
        expected = SymFunc(1, "s", {(2,): rf(1), (1, 1): rf(LaurentPoly.t(1))})
        assert got == expected

    def test_matches_monomial_oracle(self):
        for n in (1, 2, 3):
            reference = oracle.kostka_tt_oracle(n)
            for lam in partitions_of(n):
                schur = powersum_to_schur(macdonald_tt(lam))
                for mu in partitions_of(n):
                    coeffs = schur.coefficient(mu).to_laurent()
                    dense = [0] * (max(coeffs.coeffs, default=0) + 1)
                    for e, c in coeffs.coeffs.items():
                        dense[e] = int(c.as_fraction())
                    assert dense == reference[(mu, lam)]

    def test_specializes_to_schur_at_zero(self):
        for n in range(5):
            for lam in partitions_of(n):
                schur = powersum_to_schur(macdonald_tt(lam))
                for mu in partitions_of(n):
                    value = schur.coefficient(mu).specialize(0)
                    assert value == (1 if mu == lam else 0)


class TestFakeDegrees:
    def test_trivial(self):
        assert fake_degree((4,)) == LaurentPoly.one(1)

    def test_column_two(self):
        assert fake_degree((1, 1)) == LaurentPoly.t(1)

    def test_dimension_at_one(self):
        for n in range(1, 6):
            for lam in partitions_of(n):
                assert fake_degree(lam).evaluate(1).as_int() == sn_dimension(lam)

    def test_graded_regular_representation(self):
        # sum of dim(lam) * fake_degree(lam) = prod (1 - t^i)/(1 - t)
        for n in range(1, 6):
            total = LaurentPoly.zero(1)
            for lam in partitions_of(n):
                total = total + fake_degree(lam).scale(sn_dimension(lam))
            expected = RatFunc.one(1)
            for i in range(1, n + 1):
                expected = expected * RatFunc(
                    LaurentPoly.one_minus_t(1, i), LaurentPoly.one_minus_t(1, 1)
                )
            assert total == expected.to_laurent()
