"""Exact arithmetic substrate: rationals, polynomials, rational functions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qid.algebra import (
    DivisionByZero,
    NonExactDivision,
    PoleAtEvaluation,
    Polynomial,
    Rational,
    RationalFunction,
    UndefinedGcd,
    balanced_sum,
    poly_gcd,
    ratfunc_normalize,
)

X = Polynomial.variable()
ONE = Polynomial((1,))

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=12
)


def poly_from(coeffs):
    return Polynomial(coeffs)


small_polys = st.lists(rationals, min_size=0, max_size=7).map(poly_from)
nonzero_polys = small_polys.filter(bool)


class TestRational:
    def test_textbook_arithmetic(self):
        assert Rational(1, 2) + Rational(1, 3) == Rational(5, 6)
        assert Rational(3, 4) - Rational(3, 4) == Rational(0, 1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Rational(2, 3) / Rational(0, 1)

    def test_canonical_form(self):
        r = Rational(6, -4)
        assert r.numerator == -3 and r.denominator == 2
        assert Rational(0, 7) == Rational(0, 1)

    @given(rationals, rationals, rationals)
    def test_field_laws_exact(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a


class TestPolynomial:
    def test_difference_of_squares(self):
        assert (1 - X) * (1 + X) == Polynomial([1, 0, -1])

    def test_divrem_exact(self):
        q, r = divmod(X ** 2 - 1, X - 1)
        assert q == X + 1 and not r

    def test_add_identity(self):
        p = Polynomial([3, 0, 2])
        assert Polynomial() + p == p

    def test_zero_polynomial_shape(self):
        z = Polynomial([0, 0, 0])
        assert z.coeffs == () and z.degree == -1 and not z

    def test_normalization_strips_trailing_zeros(self):
        p = Polynomial([1, 2, 0, 0])
        assert p.coeffs == (1, 2) and p.degree == 1

    def test_divrem_by_zero(self):
        with pytest.raises(DivisionByZero):
            divmod(X, Polynomial())

    def test_exact_div_remainder_guard(self):
        with pytest.raises(NonExactDivision):
            (X ** 2 + 1).exact_div(X - 1)

    def test_pow_and_monomial(self):
        assert Polynomial.monomial(3, 2) == Polynomial([0, 0, 0, 2])
        assert (1 + X) ** 2 == Polynomial([1, 2, 1])
        assert (X - 1) ** 0 == ONE

    def test_evaluate_horner(self):
        p = Polynomial([Fraction(1), Fraction(-2), Fraction(3)])
        t = Fraction(1, 2)
        assert p.evaluate(t) == 1 - 2 * t + 3 * t ** 2

    @given(small_polys, nonzero_polys)
    @settings(max_examples=60)
    def test_division_law(self, p, r):
        q, s = divmod(p, r)
        assert p == q * r + s
        assert s.degree < r.degree

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=60)
    def test_ring_laws(self, p, r, s):
        assert (p + r) + s == p + (r + s)
        assert p * (r + s) == p * r + p * s
        assert p * r == r * p


class TestPolyGcd:
    def test_shared_root(self):
        assert poly_gcd(X ** 2 - 1, X ** 2 - 2 * X + 1) == X - 1

    def test_gcd_with_zero_is_monic(self):
        p = Polynomial([2, 4])
        assert poly_gcd(p, Polynomial()) == Polynomial([Fraction(1, 2), 1])

    def test_euclidean_example(self):
        # oracle: q^3 - q = q(q-1)(q+1), q^2 + q = q(q+1); gcd = q(q+1)
        g = poly_gcd(X ** 3 - X, X ** 2 + X)
        assert g == X ** 2 + X
        assert (X ** 3 - X).exact_div(g) is not None
        assert (X ** 2 + X).exact_div(g) is not None

    def test_both_zero_undefined(self):
        with pytest.raises(UndefinedGcd):
            poly_gcd(Polynomial(), Polynomial())

    @given(nonzero_polys, nonzero_polys, nonzero_polys)
    @settings(max_examples=40)
    def test_gcd_divides_both(self, p, r, w):
        g = poly_gcd(p * w, r * w)
        assert (p * w) % g == Polynomial()
        assert (r * w) % g == Polynomial()
        # the common factor w must be absorbed
        assert g % w.monic() == Polynomial()

    def test_fraction_coefficients(self):
        p = Polynomial([Fraction(1, 2), Fraction(1)]) * Polynomial([1, 1])
        r = Polynomial([Fraction(1, 2), Fraction(1)]) * Polynomial([2, 1])
        g = poly_gcd(p, r)
        assert g == Polynomial([Fraction(1, 2), Fraction(1)]).monic()


class TestRationalFunction:
    def test_cancellation(self):
        f = ratfunc_normalize(X ** 2 - 1, X - 1)
        assert f.num == X + 1 and f.den == ONE

    def test_scalar_cancellation(self):
        f = ratfunc_normalize(Polynomial([0, 2]), Polynomial([2]))
        assert f.num == X and f.den == ONE

    def test_monic_denominator_normalization(self):
        # q/(1-q) canonicalizes to (-q)/(q-1); cross-multiplication oracle
        f = ratfunc_normalize(Polynomial([0, 1]), Polynomial([1, -1]))
        assert f.num == Polynomial([0, -1])
        assert f.den == Polynomial([-1, 1])
        assert f.num * Polynomial([1, -1]) == Polynomial([0, 1]) * f.den

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZero):
            ratfunc_normalize(X, Polynomial())

    def test_idempotent(self):
        f = ratfunc_normalize(Polynomial([0, 3, 3]), Polynomial([2, 2]))
        g = ratfunc_normalize(f.num, f.den)
        assert g.num == f.num and g.den == f.den

    def test_evaluate(self):
        f = RationalFunction(Polynomial([0, 1]), Polynomial([1, -1]))
        assert f.evaluate(Fraction(1, 2)) == 1

    def test_evaluate_pole(self):
        f = RationalFunction(Polynomial([0, 1]), Polynomial([1, -1]))
        with pytest.raises(PoleAtEvaluation):
            f.evaluate(Fraction(1))

    def test_cancellation_before_evaluation(self):
        a = RationalFunction(1 + X, 1 - X ** 2)
        b = RationalFunction(ONE, 1 - X)
        assert a == b
        assert a.evaluate(Fraction(1, 3)) == b.evaluate(Fraction(1, 3)) == Fraction(3, 2)

    def test_structural_equality_of_canonical_forms(self):
        a = RationalFunction(Polynomial([0, 2]), Polynomial([2, -2]))
        b = RationalFunction(Polynomial([0, 1]), Polynomial([1, -1]))
        assert a == b and hash(a) == hash(b)

    def test_power_and_reciprocal(self):
        f = RationalFunction(X, 1 - X)
        assert f ** 0 == RationalFunction(ONE)
        assert f ** 2 == f * f
        assert f ** -1 == RationalFunction(1 - X, X)
        with pytest.raises(DivisionByZero):
            RationalFunction(Polynomial()).reciprocal()

    @given(st.data())
    @settings(max_examples=50)
    def test_arithmetic_stays_canonical(self, data):
        def rf(draw):
            num = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=4))
            den = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=4))
            if not any(den):
                den[-1] = 1
            return RationalFunction(Polynomial(num), Polynomial(den))

        f = rf(data.draw)
        g = rf(data.draw)
        for h in (f + g, f - g, f * g):
            assert h.den.coeffs and h.den.coeffs[-1] == 1
            if h.num and h.num.degree > 0 and h.den.degree > 0:
                assert poly_gcd(h.num, h.den).degree == 0

    @given(st.data())
    @settings(max_examples=50)
    def test_evaluate_respects_arithmetic(self, data):
        def rf(draw):
            num = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=4))
            den = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=4))
            if not any(den):
                den[-1] = 1
            return RationalFunction(Polynomial(num), Polynomial(den))

        f = rf(data.draw)
        g = rf(data.draw)
        t = data.draw(rationals)
        try:
            ft, gt = f.evaluate(t), g.evaluate(t)
        except PoleAtEvaluation:
            return
        assert (f * g).evaluate(t) == ft * gt
        assert (f + g).evaluate(t) == ft + gt


class TestBalancedSum:
    def test_matches_sequential(self):
        terms = [RationalFunction(Polynomial.monomial(i), 1 - X ** i) for i in range(1, 9)]
        seq = terms[0]
        for t in terms[1:]:
            seq = seq + t
        assert balanced_sum(terms) == seq

    def test_empty_and_single(self):
        assert balanced_sum([], 0) == 0
        assert balanced_sum([Fraction(5)]) == 5
