"""Exact scalar arithmetic shared by the algebra and K-theory layers.

Rationals travel as ``fractions.Fraction`` and serialize as "a/b" strings.
When the deformation matrix has rational entries with common denominator d,
every cocycle phase is a d-th root of unity, so products of coefficients stay
inside the cyclotomic field Q(zeta_d).  ``Cyclotomic`` stores such values
reduced modulo the d-th cyclotomic polynomial, which makes equality and zero
tests exact coefficient comparisons.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import lcm
from numbers import Rational


def parse_scalar(value):
    """Parse a JSON scalar: "a/b" strings and ints are exact, floats stay floats."""
    if isinstance(value, bool):
        raise ValueError(f"not a numeric scalar: {value!r}")
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, Fraction):
        return value
    raise ValueError(f"not a numeric scalar: {value!r}")


def format_scalar(value):
    """Inverse of parse_scalar: Fractions become "a/b" strings, floats stay."""
    if isinstance(value, Rational):
        return str(Fraction(value))
    return float(value)


def _exact_polydiv(num, den):
    # den is monic with integer coefficients; division is exact in Z[x]
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in reversed(range(len(quot))):
        c = num[i + dn]
        if c:
            quot[i] = c
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Integer coefficients of the d-th cyclotomic polynomial, ascending degree.

    Computed by exact division of x^d - 1 by Phi_e over the proper divisors e.
    """
    if d < 1:
        raise ValueError("cyclotomic order must be >= 1")
    poly = [0] * (d + 1)
    poly[0] = -1
    poly[d] = 1
    for e in range(1, d):
        if d % e == 0:
            poly = _exact_polydiv(poly, cyclotomic_polynomial(e))
    return tuple(poly)


def _reduce(coeffs, d):
    """Reduce a coefficient list (powers of zeta_d) mod x^d - 1, then mod Phi_d."""
    buf = [Fraction(0)] * d
    for i, c in enumerate(coeffs):
        if c:
            buf[i % d] += c
    phi = cyclotomic_polynomial(d)
    deg = len(phi) - 1
    for i in reversed(range(deg, d)):
        c = buf[i]
        if c:
            for j in range(deg + 1):
                buf[i - deg + j] -= c * phi[j]
    return tuple(buf[:deg])


class Cyclotomic:
    """An element of Q(zeta_d) with zeta_d = exp(2*pi*i/d), in reduced form."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d, coeffs):
        self.d = int(d)
        self.coeffs = _reduce([Fraction(c) for c in coeffs], self.d)

    @classmethod
    def root_of_unity(cls, d, k):
        """zeta_d^k as an exact value."""
        k = k % d
        return cls(d, [0] * k + [1])

    @classmethod
    def from_rational(cls, x, d=1):
        return cls(d, [Fraction(x)])

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def simplify(self):
        """Collapse to a plain Fraction when the value is rational."""
        return self.coeffs[0] if self.is_rational else self

    def conjugate(self):
        buf = [Fraction(0)] * self.d
        for j, c in enumerate(self.coeffs):
            buf[(-j) % self.d] += c
        return Cyclotomic(self.d, buf)

    def real_imag_exact(self):
        """(re, im) as Fractions when both are rational, else None."""
        re2 = self + self.conjugate()
        im2 = (self - self.conjugate()) * Cyclotomic.root_of_unity(4, 3)
        if isinstance(re2, Cyclotomic):
            re2 = re2.simplify()
        if isinstance(im2, Cyclotomic):
            im2 = im2.simplify()
        if isinstance(re2, Rational) and isinstance(im2, Rational):
            return Fraction(re2) / 2, Fraction(im2) / 2
        return None

    # -- arithmetic --------------------------------------------------------

    def _embed(self, d):
        step = d // self.d
        buf = [Fraction(0)] * d
        for j, c in enumerate(self.coeffs):
            buf[j * step] += c
        return Cyclotomic(d, buf)

    def _promote(self, other):
        if self.d == other.d:
            return self, other
        d = lcm(self.d, other.d)
        return self._embed(d), other._embed(d)

    def __add__(self, other):
        if isinstance(other, Cyclotomic):
            a, b = self._promote(other)
            return Cyclotomic(a.d, [x + y for x, y in zip(a.coeffs, b.coeffs)])
        if isinstance(other, Rational):
            buf = list(self.coeffs)
            buf[0] += Fraction(other)
            return Cyclotomic(self.d, buf)
        if isinstance(other, (float, complex)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.d, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (Cyclotomic, Rational)):
            return self.__add__(-other)
        if isinstance(other, (float, complex)):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Cyclotomic):
            a, b = self._promote(other)
            conv = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
            for i, x in enumerate(a.coeffs):
                if x:
                    for j, y in enumerate(b.coeffs):
                        if y:
                            conv[i + j] += x * y
            return Cyclotomic(a.d, conv)
        if isinstance(other, Rational):
            q = Fraction(other)
            return Cyclotomic(self.d, [c * q for c in self.coeffs])
        if isinstance(other, (float, complex)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    # -- comparisons and conversions ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            a, b = self._promote(other)
            return a.coeffs == b.coeffs
        if isinstance(other, Rational):
            return self.is_rational and self.coeffs[0] == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __bool__(self):
        return any(self.coeffs)

    def __complex__(self):
        total = 0j
        for j, c in enumerate(self.coeffs):
            if c:
                total += float(c) * cmath.exp(2j * math.pi * j / self.d)
        return total

    def __abs__(self):
        return abs(complex(self))

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if j == 0 else f"{c}*z{j}" if c != 1 else f"z{j}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyclotomic(d={self.d}: {body})"


def conj(value):
    """Complex conjugate across the scalar types used in the algebra."""
    if isinstance(value, Cyclotomic):
        return value.conjugate()
    if isinstance(value, Rational):
        return value
    return complex(value).conjugate()
