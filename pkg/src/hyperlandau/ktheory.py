"""Pfaffians of skew submatrices and the generator sets for the range of the
trace and the higher trace on K-theory of the noncommutative torus.

The trace range is generated by 1 together with Pf(Theta_I) over the even
subsets I of {1..p}; the higher trace range pairs each symplectic index pair
I_i = {i, i+g} with Pf(Theta_{I \\ I_i}) over the even subsets I containing
I_i.  Values are exact rationals whenever the matrix entries are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational

from .nct import SkewMatrix


@dataclass(frozen=True)
class SubsetGenerator:
    """One trace-range generator: the Pfaffian of the subset-indexed submatrix.

    ``subset`` is sorted and 1-based; ``value`` equals pfaffian of the
    corresponding submatrix; ``tag`` records the K-theory origin
    ("unit" | "partial" | "top" | "higher(i)").
    """

    subset: tuple[int, ...]
    value: Fraction | float
    tag: str


def _pf(rows, idx, memo):
    # recursive expansion along the first remaining row, memoized on the
    # index subset; exact when the entries are rational
    if not idx:
        return 1
    cached = memo.get(idx)
    if cached is not None:
        return cached
    i0 = idx[0]
    rest = idx[1:]
    total = 0
    for pos, j in enumerate(rest):
        a = rows[i0][j]
        if a:
            term = a * _pf(rows, rest[:pos] + rest[pos + 1 :], memo)
            total = total + term if pos % 2 == 0 else total - term
    memo[idx] = total
    return total


def _as_mode(value, rational):
    return Fraction(value) if rational else float(value)


def pfaffian(m: SkewMatrix):
    """Pfaffian of an even-dimensional skew-symmetric matrix; Pf of the empty
    matrix is 1, and Pf(m)^2 = det(m)."""
    if m.p % 2:
        raise ValueError("pfaffian needs an even-dimensional matrix")
    return _as_mode(_pf(m.rows, tuple(range(m.p)), {}), m.is_rational)


def even_subsets(p: int):
    """All subsets of {1..p} of even cardinality, by size then lexicographic."""
    if p < 0:
        raise ValueError("rank must be non-negative")
    out = []
    for k in range(0, p + 1, 2):
        out.extend(combinations(range(1, p + 1), k))
    return out


def trace_range_generators(theta: SkewMatrix):
    """One generator per even subset I: 1 for the empty set, Pf(Theta_I) for
    0 < |I| < p, Pf(Theta) for the full set."""
    p = theta.p
    if p % 2:
        raise ValueError("trace range needs even rank")
    rational = theta.is_rational
    memo = {}
    gens = []
    for subset in even_subsets(p):
        value = _pf(theta.rows, tuple(i - 1 for i in subset), memo)
        if not subset:
            tag = "unit"
        elif len(subset) == p:
            tag = "top"
        else:
            tag = "partial"
        gens.append(SubsetGenerator(subset, _as_mode(value, rational), tag))
    return gens


def higher_trace_range_generators(theta: SkewMatrix, g: int | None = None):
    """Generators Pf(Theta_{I \\ I_i}) over i = 1..g and even subsets I
    containing I_i = {i, i+g}; kept with multiplicity, tagged higher(i).

    The stored subset is I \\ I_i (the set whose Pfaffian is the value);
    I itself is subset | {i, i+g}.
    """
    p = theta.p
    if p % 2:
        raise ValueError("higher trace range needs even rank p = 2g")
    if g is None:
        g = p // 2
    elif 2 * g != p:
        raise ValueError(f"half-rank g={g} does not match p={p}")
    rational = theta.is_rational
    memo = {}
    gens = []
    for i in range(1, g + 1):
        pair = {i, i + g}
        for subset in even_subsets(p):
            if pair <= set(subset):
                rest = tuple(x for x in subset if x not in pair)
                value = _pf(theta.rows, tuple(x - 1 for x in rest), memo)
                gens.append(SubsetGenerator(rest, _as_mode(value, rational), f"higher({i})"))
    return gens


def generators_to_json(gens):
    def fmt(v):
        return str(Fraction(v)) if isinstance(v, Rational) else float(v)

    return {
        "generators": [
            {"subset": list(g.subset), "value": fmt(g.value), "tag": g.tag} for g in gens
        ]
    }
