"""Twisted group algebra of Z^p: the noncommutative torus at the level of
finitely supported coefficient maps.

A p x p skew-symmetric matrix Theta defines the U(1)-valued group 2-cocycle

    sigma(gamma, gamma') = exp(2*pi*i * sum_{j<k} Theta[j][k] * gamma_j * gamma'_k),

which twists the convolution product on maps Z^p -> C.  The monomial U^gamma
is the element supported on a single lattice point; the generators satisfy
U_j U_k = exp(2*pi*i*Theta[j][k]) U_k U_j.  The module also provides the
canonical trace (the coefficient at 0), the *-derivations delta_j scaling the
coefficient at gamma by 2*pi*i*gamma_j, the cyclic 2-cocycle pairing built
from the trace and the derivations, and the finite clock-and-shift matrix
pair used as a testing oracle at p = 2 with rational angle.

When Theta is rational, cocycle values are exact roots of unity
(``exact.Cyclotomic``), so products of exact elements stay exact.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Rational

import numpy as np

from .exact import Cyclotomic, conj, parse_scalar

SKEW_TOL = 1e-12
PRUNE_TOL = 1e-15


class SkewMatrix:
    """Real skew-symmetric deformation matrix with exact or floating entries.

    Entries may be ints, Fractions, "a/b" strings (all exact) or floats.
    The diagonal must be exactly zero; off-diagonal pairs must satisfy
    entries[j][k] == -entries[k][j] exactly when both are exact, and within
    SKEW_TOL otherwise.
    """

    __slots__ = ("p", "rows")

    def __init__(self, entries):
        rows = [tuple(parse_scalar(e) for e in row) for row in entries]
        p = len(rows)
        if any(len(row) != p for row in rows):
            raise ValueError("skew matrix must be square")
        for j in range(p):
            if rows[j][j] != 0:
                raise ValueError(f"diagonal entry [{j}][{j}] must be zero")
            for k in range(j + 1, p):
                a, b = rows[j][k], rows[k][j]
                if isinstance(a, Rational) and isinstance(b, Rational):
                    if a != -b:
                        raise ValueError(f"not skew-symmetric at [{j}][{k}]")
                elif abs(a + b) > SKEW_TOL:
                    raise ValueError(f"not skew-symmetric at [{j}][{k}]")
        self.p = p
        self.rows = tuple(rows)

    @property
    def is_rational(self):
        return all(isinstance(e, Rational) for row in self.rows for e in row)

    @property
    def denominator(self):
        """Common denominator of all entries (rational mode only)."""
        d = 1
        for row in self.rows:
            for e in row:
                d = math.lcm(d, Fraction(e).denominator)
        return d

    def entry(self, j, k):
        return self.rows[j][k]

    def submatrix(self, indices):
        """Principal submatrix over 1-based indices, kept in order."""
        idx = [i - 1 for i in indices]
        if any(i < 0 or i >= self.p for i in idx):
            raise ValueError("submatrix index out of range")
        return SkewMatrix([[self.rows[i][j] for j in idx] for i in idx])

    def to_json(self):
        def fmt(e):
            return str(Fraction(e)) if isinstance(e, Rational) else float(e)

        return {"p": self.p, "entries": [[fmt(e) for e in row] for row in self.rows]}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "entries" not in obj:
            raise ValueError("skew matrix JSON needs an 'entries' field")
        m = cls(obj["entries"])
        if "p" in obj and obj["p"] != m.p:
            raise ValueError("skew matrix JSON 'p' does not match entries")
        return m

    def __eq__(self, other):
        return isinstance(other, SkewMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"SkewMatrix(p={self.p})"


def _check_vector(theta, gamma):
    if len(gamma) != theta.p:
        raise ValueError(f"lattice vector of length {len(gamma)} does not match p={theta.p}")


def sigma_phase(theta, gamma, gamma_prime):
    """Phase t (in turns) with sigma = exp(2*pi*i*t); exact Fraction when Theta is rational."""
    _check_vector(theta, gamma)
    _check_vector(theta, gamma_prime)
    total = 0
    for j in range(theta.p):
        gj = gamma[j]
        if not gj:
            continue
        row = theta.rows[j]
        for k in range(j + 1, theta.p):
            t = row[k]
            if t and gamma_prime[k]:
                total += t * (gj * gamma_prime[k])
    return total


def sigma(theta, gamma, gamma_prime):
    """The group 2-cocycle value, a unit-modulus complex number."""
    phase = sigma_phase(theta, gamma, gamma_prime)
    if isinstance(phase, Rational):
        phase = float(Fraction(phase) % 1)
    return cmath.exp(2j * math.pi * phase)


def _sigma_exact(theta, gamma, gamma_prime, d):
    # phase * d is an integer because every entry denominator divides d
    phase = Fraction(sigma_phase(theta, gamma, gamma_prime))
    k = phase * d
    if k.denominator != 1:
        raise ArithmeticError("cocycle phase not a multiple of 1/d")
    return Cyclotomic.root_of_unity(d, k.numerator)


def _is_exact_coeff(c):
    return isinstance(c, (Rational, Cyclotomic))


def _coeff_is_zero(c):
    if _is_exact_coeff(c):
        return c == 0
    return abs(c) <= PRUNE_TOL


class NCTElement:
    """Finitely supported coefficient map Z^p -> C.

    Zero coefficients are never stored: exact zeros are dropped exactly and
    floating coefficients are pruned below PRUNE_TOL.
    """

    __slots__ = ("p", "terms")

    def __init__(self, p, terms=None):
        p = int(p)
        if p < 1:
            raise ValueError("rank p must be >= 1")
        clean = {}
        for n, c in (terms or {}).items():
            key = tuple(int(x) for x in n)
            if len(key) != p:
                raise ValueError(f"support vector {key} does not have length p={p}")
            if isinstance(c, Cyclotomic):
                c = c.simplify()
            if not _coeff_is_zero(c):
                clean[key] = c
        self.p = p
        self.terms = clean

    @property
    def support(self):
        return tuple(sorted(self.terms))

    @property
    def is_exact(self):
        return all(_is_exact_coeff(c) for c in self.terms.values())

    def coeff(self, n):
        return self.terms.get(tuple(n), 0)

    def max_abs(self):
        """Largest coefficient magnitude; 0 for the zero element."""
        return max((abs(complex(c)) for c in self.terms.values()), default=0.0)

    def __add__(self, other):
        if not isinstance(other, NCTElement):
            return NotImplemented
        if other.p != self.p:
            raise ValueError("rank mismatch")
        out = dict(self.terms)
        for n, c in other.terms.items():
            out[n] = out.get(n, 0) + c
        return NCTElement(self.p, out)

    def __sub__(self, other):
        if not isinstance(other, NCTElement):
            return NotImplemented
        if other.p != self.p:
            raise ValueError("rank mismatch")
        out = dict(self.terms)
        for n, c in other.terms.items():
            out[n] = out.get(n, 0) - c
        return NCTElement(self.p, out)

    def __mul__(self, scalar):
        return NCTElement(self.p, {n: c * scalar for n, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, NCTElement) and self.p == other.p and self.terms == other.terms

    def __repr__(self):
        body = ", ".join(f"{n}: {c}" for n, c in sorted(self.terms.items()))
        return f"NCTElement(p={self.p}, {{{body}}})"

    def to_json(self):
        out = []
        for n in sorted(self.terms):
            c = self.terms[n]
            re = im = None
            if isinstance(c, Rational):
                re, im = Fraction(c), Fraction(0)
            elif isinstance(c, Cyclotomic):
                pair = c.real_imag_exact()
                if pair is not None:
                    re, im = pair
            if re is None:
                z = complex(c)
                entry = {"n": list(n), "re": z.real, "im": z.imag}
            else:
                entry = {"n": list(n), "re": str(re), "im": str(im)}
            out.append(entry)
        return {"p": self.p, "terms": out}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "p" not in obj or "terms" not in obj:
            raise ValueError("element JSON needs 'p' and 'terms' fields")
        terms = {}
        for item in obj["terms"]:
            n = tuple(int(x) for x in item["n"])
            re = parse_scalar(item["re"])
            im = parse_scalar(item["im"])
            if isinstance(re, Rational) and isinstance(im, Rational):
                c = Fraction(re) if im == 0 else Cyclotomic.from_rational(re, 4) + Cyclotomic(
                    4, [0, Fraction(im)]
                )
            else:
                c = complex(float(re), float(im))
            terms[n] = terms.get(n, 0) + c
        return cls(obj["p"], terms)


def monomial(p, n, c=1):
    """The element c * U^n supported on the single lattice point n."""
    n = tuple(int(x) for x in n)
    if len(n) != p:
        raise ValueError(f"exponent vector {n} does not have length p={p}")
    return NCTElement(p, {n: c})


def unit(p):
    """The algebra unit U^0."""
    return monomial(p, (0,) * p)


def star_product(f, g, theta):
    """Twisted convolution: (f * g)(gamma) = sum f(g1) g(g2) sigma(g1, g2) over g1+g2=gamma."""
    if f.p != g.p or f.p != theta.p:
        raise ValueError("rank mismatch between elements and deformation matrix")
    exact = theta.is_rational and f.is_exact and g.is_exact
    d = theta.denominator if exact else 0
    out = {}
    for n1, c1 in f.terms.items():
        for n2, c2 in g.terms.items():
            n = tuple(a + b for a, b in zip(n1, n2))
            s = _sigma_exact(theta, n1, n2, d) if exact else sigma(theta, n1, n2)
            out[n] = out.get(n, 0) + c1 * c2 * s
    return NCTElement(f.p, out)


def adjoint(f, theta):
    """Involution f*(gamma) = conj(f(-gamma)) * conj(sigma(-gamma, gamma)).

    This is the unique phase choice making every monomial U^gamma unitary.
    """
    if f.p != theta.p:
        raise ValueError("rank mismatch between element and deformation matrix")
    exact = theta.is_rational and f.is_exact
    d = theta.denominator if exact else 0
    out = {}
    for n, c in f.terms.items():
        m = tuple(-x for x in n)
        s = _sigma_exact(theta, n, m, d) if exact else sigma(theta, n, m)
        out[m] = conj(c) * conj(s)
    return NCTElement(f.p, out)


def trace(f):
    """Canonical tracial state: the coefficient at the zero lattice vector."""
    return f.terms.get((0,) * f.p, 0)


def derivation(j, f):
    """The *-derivation delta_j: coefficient at gamma is scaled by 2*pi*i*gamma_j."""
    if not 1 <= j <= f.p:
        raise ValueError(f"derivation index {j} out of range 1..{f.p}")
    out = {}
    for n, c in f.terms.items():
        nj = n[j - 1]
        if nj:
            out[n] = c * complex(0.0, 2.0 * math.pi * nj)
    return NCTElement(f.p, out)


def cyclic_2cocycle(f0, f1, f2, theta, g=None):
    """Cyclic 2-cocycle pairing built from the trace and the derivations:

        sum_{i=1..g} trace(f0 * (delta_i f1 * delta_{i+g} f2 - delta_{i+g} f1 * delta_i f2))

    with all products twisted by sigma.  Requires p = 2g.
    """
    p = theta.p
    if f0.p != p or f1.p != p or f2.p != p:
        raise ValueError("rank mismatch between elements and deformation matrix")
    if p % 2:
        raise ValueError("cyclic 2-cocycle needs even rank p = 2g")
    if g is None:
        g = p // 2
    elif 2 * g != p:
        raise ValueError(f"half-rank g={g} does not match p={p}")
    total = 0j
    for i in range(1, g + 1):
        left = star_product(derivation(i, f1), derivation(i + g, f2), theta)
        right = star_product(derivation(i + g, f1), derivation(i, f2), theta)
        total += complex(trace(star_product(f0, left - right, theta)))
    return total


def clock_shift_rep(a, b):
    """Clock-and-shift pair (U, V) of b x b unitaries with U V = exp(2*pi*i*a/b) V U.

    Finite-dimensional oracle for the rank-2 commutation relation at the
    rational angle a/b; requires gcd(a, b) = 1.
    """
    if b == 0:
        raise ValueError("modulus b must be positive")
    if b < 0 or math.gcd(a, b) != 1:
        raise ValueError("clock-shift representation needs b >= 1 and gcd(a, b) = 1")
    omega = cmath.exp(2j * math.pi * a / b)
    u = np.diag(omega ** np.arange(b))
    v = np.roll(np.eye(b, dtype=complex), 1, axis=0)
    return u, v
