"""Exact field arithmetic: rationals, dense univariate polynomials, rational functions.

All values are immutable and every operation is a pure function, so they can be
shared freely across concurrent verification sweeps.  Coefficients are
duck-typed field elements: ``Fraction`` for computations over Q, and
``RationalFunction`` itself when a nested field such as Q(q) or Q(y) is needed.
No floating point anywhere; division by an exact zero always raises.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Exact arbitrary-precision rational numbers.  fractions.Fraction already
# guarantees the canonical form (reduced, positive denominator, 0 == 0/1).
Rational = Fraction


class DivisionByZero(ZeroDivisionError):
    """Exact division by zero."""


class PoleAtEvaluation(DivisionByZero):
    """A rational function was evaluated at a zero of its denominator."""


class UndefinedGcd(ArithmeticError):
    """gcd(0, 0) has no monic representative."""


class NonExactDivision(ArithmeticError):
    """A division that must be exact left a remainder; signals an internal bug."""


def zero_like(x):
    """Additive identity of the field x lives in."""
    return x - x


def one_like(x):
    """Multiplicative identity of the field x lives in (x ** 0, exact)."""
    return x ** 0


def _inverted_lead(c):
    # int coefficients must promote to Fraction before a true division;
    # everything else (Fraction, RationalFunction) divides exactly already.
    if isinstance(c, int):
        return Fraction(1, c)
    return one_like(c) / c


class Polynomial:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies the k-th power.

    Trailing zeros are stripped on construction, so the zero polynomial is the
    empty tuple and ``degree`` is -1 for it.  The indeterminate is anonymous;
    display names (q, y, ...) are chosen at formatting time.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def variable(cls, one=1):
        """The monomial X over the field whose unit is ``one``.

        Plain ints stand in for rationals wherever possible: they are exact,
        compare and hash identically to equal Fractions, and are much faster.
        """
        return cls((zero_like(one), one))

    @classmethod
    def monomial(cls, k, c=1):
        if not c:
            return cls()
        return cls((zero_like(c),) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def valuation(self):
        """Index of the lowest nonzero coefficient; None for the zero polynomial."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if not other:
                return Polynomial()
            return Polynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        if len(a) == 1:
            return Polynomial(tuple(a[0] * c for c in b))
        if len(b) == 1:
            return Polynomial(tuple(c * b[0] for c in a))
        if len(a) * len(b) > 1024:
            ia = _int_coeffs(self)
            if ia is not None:
                ib = _int_coeffs(other)
                if ib is not None:
                    return Polynomial(_packed_int_mul(ia, ib))
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if not ci:
                continue
            for j, cj in enumerate(b):
                out[i + j] = out[i + j] + ci * cj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative polynomial power; use RationalFunction")
        if k == 0:
            if self.coeffs:
                return Polynomial((one_like(self.coeffs[-1]),))
            return Polynomial((1,))
        base, acc = self, None
        while k:
            if k & 1:
                acc = base if acc is None else acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        if not other:
            raise DivisionByZero("polynomial division by zero")
        if len(self.coeffs) < len(other.coeffs):
            return Polynomial(), self
        rlead = other.coeffs[-1]
        # Monic (or lead -1) divisors are the common case: canonical
        # denominators and gcds.  Avoiding the inversion keeps integer
        # coefficients integer, which is a large constant-factor win.
        inv = None if rlead == 1 else (-1 if rlead == -1 else _inverted_lead(rlead))
        rem = list(self.coeffs)
        dr = len(other.coeffs) - 1
        quot = [0] * (len(rem) - dr)
        for top in range(len(rem) - 1, dr - 1, -1):
            c = rem[top]
            if not c:
                continue
            factor = c if inv is None else c * inv
            quot[top - dr] = factor
            rem[top] = 0
            for k in range(dr):
                rem[top - dr + k] = rem[top - dr + k] - factor * other.coeffs[k]
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient of an exact division; raises NonExactDivision on remainder."""
        q, r = divmod(self, other)
        if r:
            raise NonExactDivision("polynomial division left a remainder")
        return q

    def monic(self):
        if not self.coeffs:
            raise ValueError("zero polynomial cannot be made monic")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        if lead == -1:
            return Polynomial(tuple(-c for c in self.coeffs))
        inv = _inverted_lead(lead)
        return Polynomial(tuple(c * inv for c in self.coeffs))

    def shift(self, k):
        """Multiply by X**k."""
        if not self.coeffs or k == 0:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def evaluate(self, point):
        acc = zero_like(point)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def pretty(self, var="q"):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                term = str(c)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = f"-{mono}"
                else:
                    term = f"{c}*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def _int_coeffs(p):
    """Coefficients as a plain int list, or None if any is not an integer."""
    out = []
    for c in p.coeffs:
        if type(c) is int:
            out.append(c)
        elif isinstance(c, Fraction) and c.denominator == 1:
            out.append(c.numerator)
        else:
            return None
    return out


def _packed_int_mul(a, b):
    """Multiply integer coefficient lists via Kronecker substitution.

    Coefficients are packed into byte-aligned slots of one huge integer so the
    convolution happens inside CPython's bigint multiply instead of a Python
    loop.  Signed coefficients are handled by splitting into positive and
    negative parts, which keeps the packing trivially correct.
    """
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    width = (bound.bit_length() // 8) + 1  # slot size in bytes, strict bound
    nout = len(a) + len(b) - 1

    def split_pack(coeffs):
        pos = 0
        neg = 0
        shift = 0
        step = 8 * width
        for c in coeffs:
            if c > 0:
                pos |= c << shift
            elif c < 0:
                neg |= (-c) << shift
            shift += step
        return pos, neg

    ap, an = split_pack(a)
    bp, bn = split_pack(b)
    plus = ap * bp + an * bn
    minus = ap * bn + an * bp
    nbytes = nout * width
    pb = plus.to_bytes(nbytes + width, "little")
    mb = minus.to_bytes(nbytes + width, "little")
    out = []
    for k in range(nout):
        lo, hi = k * width, (k + 1) * width
        out.append(
            int.from_bytes(pb[lo:hi], "little") - int.from_bytes(mb[lo:hi], "little")
        )
    return out


def _int_pseudo_rem(a, b):
    """Integer pseudo-remainder of coefficient lists (scaled a mod b)."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    for top in range(len(r) - 1, db - 1, -1):
        c = r[top]
        r[top] = 0
        if not c:
            continue
        shift = top - db
        for k in range(top):
            r[k] *= lb
        for k in range(db):
            r[k + shift] -= c * b[k]
    del r[db:]
    while r and not r[-1]:
        r.pop()
    return r


def _int_euclid(a, b):
    """Primitive Euclidean remainder sequence over the integers.

    Stripping the integer content after each pseudo-remainder keeps
    coefficients near the size of the final answer instead of exploding.
    Returns the gcd as a primitive int list with positive lead.
    """
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        r = _int_pseudo_rem(a, b)
        a, b = b, r
        if b:
            cont = 0
            for c in b:
                cont = math.gcd(cont, c)
                if cont == 1:
                    break
            if cont > 1:
                b = [c // cont for c in b]
    cont = 0
    for c in a:
        cont = math.gcd(cont, c)
        if cont == 1:
            break
    if cont > 1:
        a = [c // cont for c in a]
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def poly_gcd(p, r):
    """Monic greatest common divisor via the Euclidean algorithm.

    Integer-coefficient inputs run a primitive (content-stripped) remainder
    sequence in plain int arithmetic; everything else uses the classic
    monic-per-step Euclid over the coefficient field.
    """
    if not isinstance(p, Polynomial):
        p = Polynomial((p,))
    if not isinstance(r, Polynomial):
        r = Polynomial((r,))
    if not p and not r:
        raise UndefinedGcd("gcd(0, 0) is undefined")
    if not p:
        return r.monic()
    if not r:
        return p.monic()
    if p.degree == 0 or r.degree == 0:
        return Polynomial((one_like(p.coeffs[-1]),))
    # Common power of the indeterminate factors out exactly.
    vp, vr = p.valuation, r.valuation
    v = min(vp, vr)
    if vp == p.degree or vr == r.degree:
        # One side is a monomial: gcd is the shared power alone.
        g = Polynomial((one_like(p.coeffs[-1]),))
        return g.shift(v) if v else g
    if v:
        p = Polynomial(p.coeffs[v:])
        r = Polynomial(r.coeffs[v:])
    pa, ra = _int_coeffs(p), _int_coeffs(r)
    if pa is not None and ra is not None:
        g = Polynomial(_int_euclid(pa, ra)).monic()
    else:
        while r:
            p, r = r, p % r
            if r:
                r = r.monic()
        g = p.monic()
    return g.shift(v) if v else g


class RationalFunction:
    """Reduced quotient of two polynomials with a monic denominator.

    The canonical form (gcd(num, den) = 1, den monic) makes equality of
    rational functions a structural comparison, which is what every identity
    verifier ultimately relies on.  Construction always canonicalizes;
    arithmetic preserves canonical form with the minimal gcds required.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial((num,))
        if den is None:
            den = Polynomial((one_like(num.coeffs[-1]),)) if num else Polynomial((1,))
        elif not isinstance(den, Polynomial):
            den = Polynomial((den,))
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            self.num = num
            self.den = Polynomial((one_like(den.coeffs[-1]),))
            return
        if den.degree > 0 and num.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.coeffs[-1]
        if lead != 1:
            if lead == -1:
                num, den = -num, -den
            else:
                inv = _inverted_lead(lead)
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @staticmethod
    def _make(num, den):
        # Trusted constructor: num/den already canonical.
        rf = object.__new__(RationalFunction)
        rf.num = num
        rf.den = den
        return rf

    @classmethod
    def variable(cls, one=1):
        """The generator of the rational-function field over ``one``'s field."""
        zero = zero_like(one)
        return cls._make(Polynomial((zero, one)), Polynomial((one,)))

    @classmethod
    def constant(cls, c):
        return cls(Polynomial((c,)))

    @property
    def is_polynomial(self):
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Polynomial((other,))) if other else RationalFunction(Polynomial())
        if isinstance(other, Polynomial):
            # Embed a plain polynomial; polynomials whose coefficients are
            # themselves rational functions belong one level up and are not
            # coerced here.
            if other.coeffs and isinstance(other.coeffs[-1], RationalFunction):
                return None
            return RationalFunction(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction._make(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.num, self.den
        c, d = other.num, other.den
        if not a:
            return other
        if not c:
            return self
        if b == d:
            return RationalFunction(a + c, b)
        if b.degree == 0 or d.degree == 0:
            return RationalFunction(a * d + c * b, b * d)
        g = poly_gcd(b, d)
        if g.degree == 0:
            num = a * d + c * b
            if not num:
                return RationalFunction(Polynomial())
            return RationalFunction._make(num, b * d)
        b1 = b.exact_div(g)
        d1 = d.exact_div(g)
        t = a * d1 + c * b1
        if not t:
            return RationalFunction(Polynomial())
        h = poly_gcd(t, g)
        if h.degree > 0:
            t = t.exact_div(h)
            g = g.exact_div(h)
        return RationalFunction._make(t, b1 * d1 * g)

    __radd__ = __add__

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
        a, b = self.num, self.den
        c, d = other.num, other.den
        if not a or not c:
            return RationalFunction(Polynomial())
        if a.degree > 0 and d.degree > 0:
            g1 = poly_gcd(a, d)
            if g1.degree > 0:
                a = a.exact_div(g1)
                d = d.exact_div(g1)
        if c.degree > 0 and b.degree > 0:
            g2 = poly_gcd(c, b)
            if g2.degree > 0:
                c = c.exact_div(g2)
                b = b.exact_div(g2)
        return RationalFunction._make(a * c, b * d)

    __rmul__ = __mul__

    def reciprocal(self):
        if not self.num:
            raise DivisionByZero("reciprocal of the zero rational function")
        lead = self.num.coeffs[-1]
        if lead == 1:
            return RationalFunction._make(self.den, self.num)
        if lead == -1:
            return RationalFunction._make(-self.den, -self.num)
        inv = _inverted_lead(lead)
        return RationalFunction._make(self.den * inv, self.num * inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, k):
        if k == 0:
            one = one_like(self.den.coeffs[-1])
            return RationalFunction._make(Polynomial((one,)), Polynomial((one,)))
        if k < 0:
            return self.reciprocal() ** (-k)
        # Powers of a canonical form stay canonical: no gcds needed.
        return RationalFunction._make(self.num ** k, self.den ** k)

    def evaluate(self, point):
        dval = self.den.evaluate(point)
        if not dval:
            raise PoleAtEvaluation(f"denominator vanishes at {point!r}")
        nval = self.num.evaluate(point)
        if isinstance(dval, int):
            dval = Fraction(dval)
        return nval / dval

    def pretty(self, var="q"):
        num = self.num.pretty(var)
        if self.den.degree == 0 and self.den.coeffs[0] == 1:
            return num
        return f"({num})/({self.den.pretty(var)})"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def ratfunc_normalize(num, den):
    """Canonical rational function from an arbitrary numerator/denominator pair."""
    return RationalFunction(num, den)


def balanced_sum(terms, zero=None):
    """Sum field elements pairwise (tree order).

    Summing rational functions left to right drags the full accumulated
    denominator through every addition; the balanced tree keeps most gcds on
    small operands, which matters once thousands of terms are involved.
    """
    items = list(terms)
    if not items:
        return zero if zero is not None else 0
    while len(items) > 1:
        nxt = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) & 1:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def balanced_product(factors, one=None):
    """Product of field elements in pairwise tree order."""
    items = list(factors)
    if not items:
        return one if one is not None else 1
    while len(items) > 1:
        nxt = [items[i] * items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) & 1:
            nxt.append(items[-1])
        items = nxt
    return items[0]
