"""Alphabets, difference products, divided differences, Newton and Lagrange forms.

Everything here is generic over the coefficient field: alphabets of rationals,
of elements of Q(q), or of any other exact field work identically.  Functions
are supplied as value tables over the alphabet; the adjacent-transposition
operators needed for the operator-algebra laws act on tuple closures instead,
since a value table cannot see argument swaps.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    Polynomial,
    RationalFunction,
    balanced_product,
    one_like,
    zero_like,
)
from .qseries import complete_homogeneous


class DuplicatePoint(ValueError):
    """Two interpolation points coincide."""


class Alphabet:
    """Ordered finite list of pairwise distinct field elements x_1, ..., x_n."""

    __slots__ = ("points",)

    def __init__(self, points):
        pts = tuple(points)
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if pts[i] == pts[j]:
                    raise DuplicatePoint(
                        f"points {i + 1} and {j + 1} coincide: {pts[i]!r}"
                    )
        self.points = pts

    def __len__(self):
        return len(self.points)

    def __getitem__(self, k):
        return self.points[k]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        if isinstance(other, Alphabet):
            return self.points == other.points
        return NotImplemented

    def __hash__(self):
        return hash(self.points)

    def prefix(self, i):
        """The first i points (the prefix alphabet; empty for i = 0)."""
        return self.points[:i]

    def without(self, i):
        """All points except the one at 0-based index i."""
        return self.points[:i] + self.points[i + 1 :]

    def extended(self, x):
        """A new alphabet with x appended; rejects collisions."""
        return Alphabet(self.points + (x,))

    def __repr__(self):
        return f"Alphabet({list(self.points)!r})"


def r_product(a_points, b_points):
    """The full difference product of two point lists: prod (a - b).

    Empty factor lists give 1, matching the empty-product convention for the
    zero-length prefix alphabet.
    """
    factors = [a - b for a in a_points for b in b_points]
    return balanced_product(factors)


def divided_difference_apply(values, alphabet, i):
    """One layer of the divided-difference table.

    ``values`` holds the current order-(i-1) differences over consecutive
    point windows; entry j of the result is
    (values[j+1] - values[j]) / (x_{j+i} - x_j), the order-i difference.
    Applying this with i = 1, 2, ... starting from raw function values walks
    the composed operators: first slot of layer k is f after k adjacent
    operators.
    """
    n = len(values)
    if i < 1:
        raise ValueError("operator index must be >= 1")
    if n < 2:
        raise ValueError("need at least two values to difference")
    pts = alphabet.points
    if n + i - 1 > len(pts):
        raise ValueError("not enough alphabet points for this table layer")
    out = []
    for j in range(n - 1):
        dx = pts[j + i] - pts[j]
        if not dx:
            raise DuplicatePoint(f"points {j + 1} and {j + i + 1} coincide")
        out.append((values[j + 1] - values[j]) / dx)
    return out


class DividedDifferenceTable:
    """Triangular table of divided differences over an alphabet.

    ``entry(i, k)`` is the order-k difference over points x_i, ..., x_{i+k}
    (1-based i).  The top-left diagonal entry(1, k) for k = 0..n-1 gives the
    Newton coefficients.
    """

    __slots__ = ("rows", "alphabet")

    def __init__(self, rows, alphabet):
        self.rows = tuple(tuple(r) for r in rows)
        self.alphabet = alphabet

    def entry(self, i, k):
        return self.rows[k][i - 1]

    @property
    def coefficients(self):
        return tuple(row[0] for row in self.rows)

    @property
    def top(self):
        """The full-order difference over the whole alphabet."""
        return self.rows[-1][0]


def newton_table(f_values, alphabet):
    """Build the full divided-difference table for f over the alphabet."""
    values = list(f_values)
    if len(values) != len(alphabet):
        raise ValueError("need exactly one value per alphabet point")
    if not values:
        raise ValueError("empty alphabet")
    rows = [values]
    for k in range(1, len(values)):
        rows.append(divided_difference_apply(rows[-1], alphabet, k))
    return DividedDifferenceTable(rows, alphabet)


def top_divided_difference(f_values, alphabet):
    return newton_table(f_values, alphabet).top


class Interpolant:
    """A polynomial of degree <= n-1 matching f on the alphabet."""

    __slots__ = ("poly", "source")

    def __init__(self, poly, source):
        self.poly = poly
        self.source = source

    def __call__(self, x):
        return self.poly.evaluate(x)

    def __eq__(self, other):
        if isinstance(other, Interpolant):
            return self.poly == other.poly
        return NotImplemented

    def __repr__(self):
        return f"Interpolant({self.poly!r}, {self.source!r})"


def newton_interpolant(table, alphabet=None):
    """Expand the Newton development sum(coeff_k * prod_{j<=k} (X - x_j))."""
    if alphabet is None:
        alphabet = table.alphabet
    coeffs = table.coefficients
    one = one_like(coeffs[0]) if coeffs else Fraction(1)
    poly = Polynomial()
    basis = Polynomial((one,))
    for k, c in enumerate(coeffs):
        poly = poly + basis * c
        if k < len(coeffs) - 1:
            basis = basis * Polynomial((-alphabet[k], one))
    return Interpolant(poly, "newton")


def lagrange_interpolant(f_values, alphabet):
    """The cardinal-form interpolant sum f(x_i) R(X, A\\x_i) / R(x_i, A\\x_i)."""
    values = list(f_values)
    if len(values) != len(alphabet):
        raise ValueError("need exactly one value per alphabet point")
    if not values:
        raise ValueError("empty alphabet")
    one = one_like(alphabet[0])
    poly = Polynomial()
    for i, v in enumerate(values):
        others = alphabet.without(i)
        denom = r_product([alphabet[i]], others)
        numer = balanced_product(
            [Polynomial((-x, one)) for x in others], Polynomial((one,))
        )
        poly = poly + numer * (v / denom if others else v * one)
    return Interpolant(poly, "lagrange")


def newton_remainder(f_values_extended, alphabet, x):
    """f(x) minus the degree <= n-1 interpolant, via the remainder formula.

    ``f_values_extended`` is f on the alphabet followed by f(x).  The value is
    the top divided difference over the alphabet extended by x, times
    R(x, A_n).
    """
    values = list(f_values_extended)
    if len(values) != len(alphabet) + 1:
        raise ValueError("need one value per point plus the value at x")
    extended = alphabet.extended(x)
    top = top_divided_difference(values, extended)
    return top * r_product([x], alphabet.points)


def swap_divided_difference(func, i):
    """The adjacent-transposition difference operator on tuple functions.

    ``func`` maps a tuple of field elements to a field element; the result
    maps t to (func(t) - func(t with slots i, i+1 swapped)) / (t_i - t_{i+1}).
    Composing these transformers realizes arbitrary operator words, which the
    value-table representation cannot (a table never sees swapped arguments).
    """
    if i < 1:
        raise ValueError("operator index must be >= 1")

    def transformed(points):
        pts = tuple(points)
        if len(pts) < i + 1:
            raise ValueError(f"need at least {i + 1} points, got {len(pts)}")
        dx = pts[i - 1] - pts[i]
        if not dx:
            raise DuplicatePoint(f"slots {i} and {i + 1} hold equal points")
        swapped = pts[: i - 1] + (pts[i], pts[i - 1]) + pts[i + 1 :]
        return (func(pts) - func(swapped)) / dx

    return transformed


def verify_cauchy_kernel(alphabet, n):
    """Check the closed form of the top difference of x -> 1/(y - x).

    Runs over Q(y) with the first n alphabet points embedded as constants:
    the order-(n-1) divided difference must equal 1/prod_j (y - x_j).
    """
    if len(alphabet) < n or n < 1:
        raise ValueError("need at least n alphabet points")
    pts = alphabet.points[:n]
    y = RationalFunction.variable()
    one = Polynomial((1,))
    values = [RationalFunction(one, Polynomial((-x, 1))) for x in pts]
    top = top_divided_difference(values, Alphabet(pts))
    denom = balanced_product([Polynomial((-x, 1)) for x in pts], one)
    return top == RationalFunction(one, denom)


def verify_power_sum_h(alphabet, m):
    """Check sum x_i^m / prod_{j != i}(x_i - x_j) == h_{m-n+1}(x_1..x_n)."""
    if m < 0:
        raise ValueError("power must be nonnegative")
    n = len(alphabet)
    if n < 1:
        raise ValueError("empty alphabet")
    total = None
    for i in range(n):
        xi = alphabet[i]
        denom = r_product([xi], alphabet.without(i))
        term = xi ** m / denom if n > 1 else xi ** m * one_like(xi)
        total = term if total is None else total + term
    return total == complete_homogeneous(m - n + 1, alphabet.points)
