"""Divided differences, Newton and Lagrange interpolation, remainder laws."""

import random
from fractions import Fraction

import pytest

from qid.algebra import Polynomial, RationalFunction, balanced_product
from qid.interpolation import (
    Alphabet,
    DuplicatePoint,
    divided_difference_apply,
    lagrange_interpolant,
    newton_interpolant,
    newton_remainder,
    newton_table,
    r_product,
    swap_divided_difference,
    top_divided_difference,
    verify_cauchy_kernel,
    verify_power_sum_h,
)
from qid.qseries import complete_homogeneous

F = Fraction
ONE = Polynomial((1,))


def random_rational(rng, height=20):
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return F(num, den)


def random_alphabet(rng, size, height=20):
    points = []
    while len(points) < size:
        x = random_rational(rng, height)
        if x not in points:
            points.append(x)
    return Alphabet(points)


def random_poly(rng, max_degree=10):
    deg = rng.randint(0, max_degree)
    coeffs = [random_rational(rng, 9) for _ in range(deg + 1)]
    if not coeffs[-1]:
        coeffs[-1] = F(1)
    return Polynomial(coeffs)


class TestAlphabet:
    def test_rejects_duplicates(self):
        with pytest.raises(DuplicatePoint):
            Alphabet([F(1), F(2), F(1)])

    def test_prefix_and_without(self):
        a = Alphabet([F(1), F(2), F(3)])
        assert a.prefix(0) == ()
        assert a.prefix(2) == (F(1), F(2))
        assert a.without(1) == (F(1), F(3))

    def test_extended_rejects_collision(self):
        a = Alphabet([F(1), F(2)])
        with pytest.raises(DuplicatePoint):
            a.extended(F(2))


class TestRProduct:
    def test_single_factor(self):
        assert r_product([F(7)], [F(4)]) == 3

    def test_empty_gives_one(self):
        assert r_product([], [F(1), F(2)]) == 1
        assert r_product([F(1)], []) == 1

    def test_hand_product(self):
        assert r_product([F(2), F(3)], [F(1)]) == 2


class TestDividedDifferenceApply:
    def test_square_gives_sum_symbolically(self):
        # over Q(x1)(x2): (x1^2 - x2^2)/(x1 - x2) = x1 + x2
        x1 = RationalFunction.variable()
        x2 = RationalFunction.variable(one=x1 ** 0)
        x1_up = RationalFunction(Polynomial((x1,)))
        alphabet = Alphabet([x1_up, x2])
        out = divided_difference_apply([x1_up ** 2, x2 ** 2], alphabet, 1)
        assert out == [x1_up + x2]

    def test_constant_gives_zero(self):
        alphabet = Alphabet([F(1), F(4)])
        assert divided_difference_apply([F(5), F(5)], alphabet, 1) == [0]

    def test_cube_hand_value(self):
        alphabet = Alphabet([F(1), F(2)])
        assert divided_difference_apply([F(1), F(8)], alphabet, 1) == [7]

    def test_bad_index(self):
        with pytest.raises(ValueError):
            divided_difference_apply([F(1), F(2)], Alphabet([F(1), F(2)]), 0)


class TestNewtonTable:
    def test_linear(self):
        t = newton_table([F(1), F(2)], Alphabet([F(1), F(2)]))
        assert t.coefficients == (1, 1)

    def test_square_coefficients(self):
        t = newton_table([F(0), F(1), F(4)], Alphabet([F(0), F(1), F(2)]))
        assert t.coefficients == (0, 1, 1)

    def test_degenerate_single_point(self):
        t = newton_table([F(9)], Alphabet([F(3)]))
        assert t.coefficients == (9,)
        assert t.top == 9

    def test_entry_recurrence(self):
        rng = random.Random(7)
        alphabet = random_alphabet(rng, 5)
        values = [random_rational(rng) for _ in range(5)]
        t = newton_table(values, alphabet)
        for k in range(1, 5):
            for i in range(1, 5 - k + 1):
                expected = (t.entry(i + 1, k - 1) - t.entry(i, k - 1)) / (
                    alphabet[i + k - 1] - alphabet[i - 1]
                )
                assert t.entry(i, k) == expected


class TestInterpolants:
    def test_constant(self):
        t = newton_table([F(3)], Alphabet([F(5)]))
        assert newton_interpolant(t).poly == Polynomial([3])
        assert lagrange_interpolant([F(3)], Alphabet([F(5)])).poly == Polynomial([3])

    def test_square_reconstruction(self):
        alphabet = Alphabet([F(0), F(1), F(2)])
        t = newton_table([F(0), F(1), F(4)], alphabet)
        assert newton_interpolant(t).poly == Polynomial([0, 0, 1])

    def test_linear_reproduction(self):
        alphabet = Alphabet([F(1), F(2)])
        assert lagrange_interpolant([F(1), F(2)], alphabet).poly == Polynomial([0, 1])

    def test_cube_interpolant_hand_solved(self):
        alphabet = Alphabet([F(0), F(1), F(2)])
        got = lagrange_interpolant([F(0), F(1), F(8)], alphabet)
        assert got.poly == Polynomial([0, -2, 3])
        for x in alphabet:
            assert got.poly.evaluate(x) == x ** 3

    def test_rational_kernel_over_qy(self):
        # f = 1/(y-x) with rational alphabet: interpolant over Q(y)
        y = RationalFunction.variable()
        alphabet = Alphabet([F(1), F(2), F(4)])
        values = [RationalFunction(ONE, Polynomial((-x, 1))) for x in alphabet]
        ni = newton_interpolant(newton_table(values, alphabet))
        li = lagrange_interpolant(values, alphabet)
        assert ni.poly == li.poly
        assert ni.poly.degree <= 2
        for x, v in zip(alphabet, values):
            assert ni.poly.evaluate(RationalFunction(Polynomial((x,)))) == v

    def test_newton_lagrange_agreement_randomized(self):
        rng = random.Random(20260810)
        for _ in range(40):
            size = rng.randint(1, 8)
            alphabet = random_alphabet(rng, size)
            f = random_poly(rng)
            values = [f.evaluate(x) for x in alphabet]
            ni = newton_interpolant(newton_table(values, alphabet))
            li = lagrange_interpolant(values, alphabet)
            assert ni.poly == li.poly
            if f.degree <= size - 1:
                assert ni.poly == f


class TestRemainder:
    def test_exact_reproduction_degree_below(self):
        alphabet = Alphabet([F(0), F(1), F(2)])
        # f = 2x + 1
        assert newton_remainder([F(1), F(3), F(5), F(15)], alphabet, F(7)) == 0

    def test_square_over_two_points(self):
        alphabet = Alphabet([F(0), F(1)])
        rem = newton_remainder([F(0), F(1), F(9)], alphabet, F(3))
        assert rem == 6
        # direct-subtraction oracle: interpolant of x^2 on {0,1} is x
        assert rem == 9 - 3

    def test_remainder_equals_direct_subtraction(self):
        rng = random.Random(99)
        for _ in range(25):
            size = rng.randint(1, 6)
            alphabet = random_alphabet(rng, size)
            f = random_poly(rng, 8)
            x = random_rational(rng)
            while any(x == p for p in alphabet):
                x = random_rational(rng)
            values = [f.evaluate(p) for p in alphabet] + [f.evaluate(x)]
            rem = newton_remainder(values, alphabet, x)
            interp = lagrange_interpolant(values[:-1], alphabet)
            assert rem == f.evaluate(x) - interp.poly.evaluate(x)

    def test_kernel_remainder_closed_form(self):
        # remainder of 1/(y-x) equals R(x, A_n) / (R(y, A_n) (y - x))
        y = RationalFunction.variable()
        alphabet = Alphabet([F(1), F(2), F(4)])
        x = F(3)
        values = [RationalFunction(ONE, Polynomial((-t, 1))) for t in list(alphabet) + [x]]
        rem = newton_remainder(values, alphabet, x)
        r_x = r_product([x], alphabet.points)
        r_y = RationalFunction(balanced_product([Polynomial((-t, 1)) for t in alphabet], ONE))
        assert rem == r_x / (r_y * RationalFunction(Polynomial((-x, 1))))

    def test_collision_rejected(self):
        alphabet = Alphabet([F(0), F(1)])
        with pytest.raises(DuplicatePoint):
            newton_remainder([F(0), F(1), F(1)], alphabet, F(1))


class TestOperatorAlgebra:
    def random_closure(self, rng, arity):
        terms = []
        for _ in range(rng.randint(1, 4)):
            coeff = random_rational(rng, 9)
            exps = tuple(rng.randint(0, 3) for _ in range(arity))
            terms.append((coeff, exps))

        def f(points):
            total = F(0)
            for coeff, exps in terms:
                prod = coeff
                for p, e in zip(points, exps):
                    prod *= p ** e
                total += prod
            return total

        return f

    def test_square_of_operator_vanishes(self):
        rng = random.Random(31337)
        for _ in range(50):
            arity = rng.randint(2, 6)
            pts = tuple(random_alphabet(rng, arity).points)
            f = self.random_closure(rng, arity)
            i = rng.randint(1, arity - 1)
            twice = swap_divided_difference(swap_divided_difference(f, i), i)
            assert twice(pts) == 0

    def test_braid_relation(self):
        rng = random.Random(24601)
        for _ in range(50):
            arity = rng.randint(3, 6)
            pts = tuple(random_alphabet(rng, arity).points)
            f = self.random_closure(rng, arity)
            i = rng.randint(1, arity - 2)
            left = swap_divided_difference(
                swap_divided_difference(swap_divided_difference(f, i), i + 1), i
            )
            right = swap_divided_difference(
                swap_divided_difference(swap_divided_difference(f, i + 1), i), i + 1
            )
            assert left(pts) == right(pts)

    def test_composed_prefix_word_equals_table_top(self):
        rng = random.Random(5)
        for _ in range(10):
            size = rng.randint(2, 6)
            alphabet = random_alphabet(rng, size)
            poly = random_poly(rng, 6)
            word = lambda t, p=poly: p.evaluate(t[0])
            for i in range(1, size):
                word = swap_divided_difference(word, i)
            values = [poly.evaluate(x) for x in alphabet]
            assert word(tuple(alphabet.points)) == top_divided_difference(values, alphabet)

    def test_degree_lowering_rows_vanish(self):
        # rows of the table beyond the polynomial degree are identically zero
        rng = random.Random(17)
        for _ in range(10):
            d = rng.randint(0, 5)
            size = d + 2
            alphabet = random_alphabet(rng, size)
            poly = random_poly(rng, 6)
            poly = Polynomial(poly.coeffs[: d + 1])
            if not poly:
                poly = Polynomial([F(1)])
            d = poly.degree
            values = [poly.evaluate(x) for x in alphabet]
            table = newton_table(values, alphabet)
            for k in range(d + 1, size):
                assert all(v == 0 for v in table.rows[k])

    def test_rows_match_complete_homogeneous(self):
        # order-k difference of x^d over any points equals h_(d-k) of them
        rng = random.Random(8)
        for _ in range(10):
            d = rng.randint(1, 6)
            size = rng.randint(2, d + 1)
            alphabet = random_alphabet(rng, size)
            values = [x ** d for x in alphabet]
            top = top_divided_difference(values, alphabet)
            assert top == complete_homogeneous(d - (size - 1), alphabet.points)


class TestCauchyKernel:
    def test_single_point(self):
        assert verify_cauchy_kernel(Alphabet([F(2)]), 1)

    def test_two_points_hand_checked(self):
        assert verify_cauchy_kernel(Alphabet([F(0), F(1)]), 2)

    def test_four_points(self):
        assert verify_cauchy_kernel(Alphabet([F(1), F(1, 2), F(-2), F(3)]), 4)


class TestPowerSum:
    def test_hand_case(self):
        assert verify_power_sum_h(Alphabet([F(1), F(2)]), 2)

    def test_vanishing_case(self):
        assert verify_power_sum_h(Alphabet([F(1), F(2), F(5)]), 0)

    def test_empty_product_case(self):
        assert verify_power_sum_h(Alphabet([F(1), F(2), F(5)]), 2)

    def test_sweep_small(self):
        rng = random.Random(4242)
        for size in range(1, 7):
            alphabet = random_alphabet(rng, size)
            for m in range(0, 11):
                assert verify_power_sum_h(alphabet, m), (size, m)
