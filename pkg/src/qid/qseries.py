"""q-combinatorial primitives over exact fields.

Pochhammer products, Gaussian binomial coefficients and complete homogeneous
symmetric sums, the building blocks of every identity in this library.  All
results are exact objects: polynomials in q with integer coefficients, or
elements of whatever field the inputs live in.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .algebra import (
    NonExactDivision,
    Polynomial,
    RationalFunction,
    balanced_product,
    balanced_sum,
    one_like,
    zero_like,
)

_Q_POLY = Polynomial.variable()
_Q = RationalFunction.variable()


def q_var():
    """The generator q of the field Q(q)."""
    return _Q


def q_power(e):
    """q**e as an element of Q(q); negative exponents are fine."""
    if e >= 0:
        return RationalFunction._make(Polynomial.monomial(e), Polynomial((1,)))
    return RationalFunction._make(Polynomial((1,)), Polynomial.monomial(-e))


@lru_cache(maxsize=None)
def _qq_poly(n):
    """(q;q)_n as a Polynomial with integer coefficients."""
    if n == 0:
        return Polynomial((1,))
    return _qq_poly(n - 1) * (1 - Polynomial.monomial(n))


def pochhammer(z, n, q=None):
    """The product (1 - z)(1 - z*q)...(1 - z*q**(n-1)); 1 when n = 0.

    ``z`` and ``q`` may live in any exact field (Polynomial over Q, element of
    Q(q), element of Q(y), ...).  When ``q`` is omitted it defaults to the
    canonical generator matching z's type: the polynomial q for Polynomial
    arguments, the Q(q) generator otherwise.
    """
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    if q is None:
        q = _Q_POLY if isinstance(z, Polynomial) else _Q
    if n == 0:
        return one_like(q)
    factors = []
    zq = z
    for _ in range(n):
        factors.append(1 - zq)
        zq = zq * q
    return balanced_product(factors)


@lru_cache(maxsize=None)
def gauss_binomial(n, i):
    """The Gaussian binomial coefficient as a Polynomial in q.

    Computed as the quotient of Pochhammer products with the remainder
    asserted to vanish, so any internal inconsistency surfaces immediately
    as NonExactDivision.  Out-of-range i gives the zero polynomial.
    """
    if n < 0:
        raise ValueError("gauss_binomial requires n >= 0")
    if i < 0 or i > n:
        return Polynomial()
    if i > n - i:
        i = n - i
    num = _qq_poly(n)
    den = _qq_poly(i) * _qq_poly(n - i)
    try:
        return num.exact_div(den)
    except NonExactDivision as exc:  # pragma: no cover - would be a bug
        raise NonExactDivision(
            f"Gauss binomial ({n},{i}) division left a remainder"
        ) from exc


def complete_homogeneous(k, xs):
    """Complete homogeneous symmetric sum h_k of the given field elements.

    Enumerates every weakly increasing index tuple of length k and sums the
    corresponding products; h_0 = 1 and h_k = 0 for k < 0.  The enumeration is
    deliberate: verifiers compare against multiset sums written out term by
    term.
    """
    xs = list(xs)
    if k < 0:
        return zero_like(xs[0]) if xs else 0
    if k == 0:
        return one_like(xs[0]) if xs else 1
    if not xs:
        return 0
    terms = [
        balanced_product([xs[j] for j in combo])
        for combo in combinations_with_replacement(range(len(xs)), k)
    ]
    return balanced_sum(terms)


def complete_homogeneous_recurrence(k, xs):
    """h_k via the recurrence h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j*h_{k-1}(x_1..x_j).

    Same value as :func:`complete_homogeneous` in O(k*n) field operations;
    used where the literal enumeration would dominate the runtime.
    """
    xs = list(xs)
    if k < 0:
        return zero_like(xs[0]) if xs else 0
    if k == 0:
        return one_like(xs[0]) if xs else 1
    if not xs:
        return 0
    one = one_like(xs[0])
    prev = [one] * (len(xs) + 1)
    for _ in range(k):
        row = [zero_like(xs[0])] * (len(xs) + 1)
        for j in range(1, len(xs) + 1):
            row[j] = row[j - 1] + xs[j - 1] * prev[j]
        prev = row
    return prev[len(xs)]
