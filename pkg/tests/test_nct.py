"""Twisted group algebra: cocycle, product, involution, trace, derivations,
cyclic 2-cocycle, and the clock-shift oracle."""

import cmath
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from hyperlandau.nct import (
    NCTElement,
    SkewMatrix,
    adjoint,
    clock_shift_rep,
    cyclic_2cocycle,
    derivation,
    monomial,
    sigma,
    sigma_phase,
    star_product,
    trace,
    unit,
)

THETA_HALF = SkewMatrix([["0", "1/2"], ["-1/2", "0"]])


def random_skew(rng, p, scale=1.0):
    rows = [[0.0] * p for _ in range(p)]
    for j in range(p):
        for k in range(j + 1, p):
            x = rng.uniform(-scale, scale)
            rows[j][k] = x
            rows[k][j] = -x
    return SkewMatrix(rows)


def random_element(rng, p, max_support=20, span=3):
    size = rng.randint(1, max_support)
    terms = {}
    for _ in range(size):
        n = tuple(rng.randint(-span, span) for _ in range(p))
        terms[n] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return NCTElement(p, terms)


# -- skew matrix ------------------------------------------------------------


def test_skew_matrix_validation():
    with pytest.raises(ValueError):
        SkewMatrix([[0, 1], [1, 0]])  # not skew
    with pytest.raises(ValueError):
        SkewMatrix([[1, 0], [0, 0]])  # nonzero diagonal
    with pytest.raises(ValueError):
        SkewMatrix([[0, 1, 2], [-1, 0, 3]])  # not square
    with pytest.raises(ValueError):
        SkewMatrix([[0, 1e-9], [0.0, 0]])  # deviation above tolerance
    m = SkewMatrix([[0, 0.5], [-0.5 + 1e-14, 0]])  # within tolerance
    assert not m.is_rational


def test_skew_matrix_json_round_trip_is_lossless():
    obj = THETA_HALF.to_json()
    assert obj == {"p": 2, "entries": [["0", "1/2"], ["-1/2", "0"]]}
    assert SkewMatrix.from_json(obj) == THETA_HALF
    mixed = SkewMatrix([[0, 0.125], [-0.125, 0]])
    assert SkewMatrix.from_json(mixed.to_json()) == mixed


# -- sigma ------------------------------------------------------------------


def test_sigma_spot_values():
    assert abs(sigma(THETA_HALF, (1, 0), (0, 1)) - (-1)) < 1e-12
    assert sigma(THETA_HALF, (0, 0), (5, -3)) == 1
    assert abs(sigma(THETA_HALF, (0, 1), (1, 0)) - 1) < 1e-12
    assert sigma_phase(THETA_HALF, (1, 0), (0, 1)) == Fraction(1, 2)


def test_sigma_unit_modulus_and_dimension_check():
    rng = random.Random(7)
    for _ in range(100):
        p = rng.choice((2, 4))
        theta = random_skew(rng, p)
        g1 = tuple(rng.randint(-5, 5) for _ in range(p))
        g2 = tuple(rng.randint(-5, 5) for _ in range(p))
        assert abs(abs(sigma(theta, g1, g2)) - 1) < 1e-12
    with pytest.raises(ValueError):
        sigma(THETA_HALF, (1, 0, 0), (0, 1))


def test_cocycle_condition_sample():
    rng = random.Random(11)
    worst = 0.0
    for _ in range(200):
        p = rng.choice((2, 4, 6))
        theta = random_skew(rng, p)
        g1, g2, g3 = (tuple(rng.randint(-5, 5) for _ in range(p)) for _ in range(3))
        g12 = tuple(a + b for a, b in zip(g1, g2))
        g23 = tuple(a + b for a, b in zip(g2, g3))
        lhs = sigma(theta, g1, g2) * sigma(theta, g12, g3)
        rhs = sigma(theta, g1, g23) * sigma(theta, g2, g3)
        worst = max(worst, abs(lhs - rhs))
    assert worst <= 1e-12


# -- monomials and products ---------------------------------------------------


def test_monomial_construction():
    u1 = monomial(2, (1, 0))
    assert u1.terms == {(1, 0): 1}
    assert unit(2).terms == {(0, 0): 1}
    assert monomial(2, (1, 1), 0).terms == {}
    with pytest.raises(ValueError):
        monomial(2, (1, 0, 0))


def test_star_product_spot_values():
    u1, u2 = monomial(2, (1, 0)), monomial(2, (0, 1))
    assert star_product(u1, u2, THETA_HALF) == monomial(2, (1, 1), -1)
    assert star_product(u2, u1, THETA_HALF) == monomial(2, (1, 1), 1)


def test_commutation_relation_u1u2():
    # U_1 U_2 = exp(2 pi i Theta_12) U_2 U_1
    rng = random.Random(3)
    for t in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)):
        theta = SkewMatrix([[0, t], [-t, 0]])
        u1, u2 = monomial(2, (1, 0)), monomial(2, (0, 1))
        lhs = star_product(u1, u2, theta)
        rhs = star_product(u2, u1, theta) * cmath.exp(2j * math.pi * float(t))
        assert (lhs - rhs).max_abs() < 1e-12
    theta = random_skew(rng, 2)
    u1, u2 = monomial(2, (1, 0)), monomial(2, (0, 1))
    lhs = star_product(u1, u2, theta)
    rhs = star_product(u2, u1, theta) * cmath.exp(2j * math.pi * theta.entry(0, 1))
    assert (lhs - rhs).max_abs() < 1e-12


def test_unit_is_neutral():
    rng = random.Random(5)
    for _ in range(20):
        theta = random_skew(rng, 2)
        f = random_element(rng, 2)
        assert (star_product(f, unit(2), theta) - f).max_abs() < 1e-14
        assert (star_product(unit(2), f, theta) - f).max_abs() < 1e-14


def test_projective_representation_law():
    rng = random.Random(13)
    for _ in range(100):
        p = rng.choice((2, 4))
        theta = random_skew(rng, p)
        g1 = tuple(rng.randint(-4, 4) for _ in range(p))
        g2 = tuple(rng.randint(-4, 4) for _ in range(p))
        lhs = star_product(monomial(p, g1), monomial(p, g2), theta)
        g12 = tuple(a + b for a, b in zip(g1, g2))
        rhs = monomial(p, g12, sigma(theta, g1, g2))
        assert (lhs - rhs).max_abs() <= 1e-12


def test_associativity_exact_in_rational_mode():
    rng = random.Random(17)
    theta = SkewMatrix([[0, Fraction(1, 3)], [Fraction(-1, 3), 0]])
    for _ in range(25):
        elems = []
        for _ in range(3):
            terms = {
                tuple(rng.randint(-2, 2) for _ in range(2)): Fraction(
                    rng.randint(-4, 4), rng.randint(1, 4)
                )
                for _ in range(rng.randint(1, 5))
            }
            elems.append(NCTElement(2, terms))
        f, g, h = elems
        left = star_product(star_product(f, g, theta), h, theta)
        right = star_product(f, star_product(g, h, theta), theta)
        assert left == right  # exact: coefficients are cyclotomic numbers


def test_associativity_floating():
    rng = random.Random(19)
    worst = 0.0
    for _ in range(50):
        p = rng.choice((2, 4))
        theta = random_skew(rng, p)
        f, g, h = (random_element(rng, p, max_support=10) for _ in range(3))
        left = star_product(star_product(f, g, theta), h, theta)
        right = star_product(f, star_product(g, h, theta), theta)
        worst = max(worst, (left - right).max_abs())
    assert worst <= 1e-10


def test_rank_mismatch_raises():
    f = random_element(random.Random(1), 2)
    g = random_element(random.Random(2), 4)
    theta4 = random_skew(random.Random(3), 4)
    with pytest.raises(ValueError):
        star_product(f, g, theta4)
    with pytest.raises(ValueError):
        adjoint(f, theta4)


# -- involution ----------------------------------------------------------------


def test_adjoint_spot_values():
    assert adjoint(unit(2), THETA_HALF) == unit(2)
    a = adjoint(monomial(2, (1, 1)), THETA_HALF)
    assert a == monomial(2, (-1, -1), -1)
    c = 2 + 3j
    a = adjoint(monomial(2, (4, 0), c), THETA_HALF)
    assert abs(a.coeff((-4, 0)) - c.conjugate()) < 1e-14


def test_monomial_unitarity():
    rng = random.Random(23)
    for _ in range(100):
        p = rng.choice((2, 4))
        theta = random_skew(rng, p)
        g = tuple(rng.randint(-4, 4) for _ in range(p))
        u = monomial(p, g)
        ustar = adjoint(u, theta)
        assert (star_product(u, ustar, theta) - unit(p)).max_abs() <= 1e-12
        assert (star_product(ustar, u, theta) - unit(p)).max_abs() <= 1e-12


def test_adjoint_is_involutive_and_antimultiplicative():
    rng = random.Random(29)
    for _ in range(30):
        p = rng.choice((2, 4))
        theta = random_skew(rng, p)
        f = random_element(rng, p, max_support=8)
        g = random_element(rng, p, max_support=8)
        assert (adjoint(adjoint(f, theta), theta) - f).max_abs() < 1e-12
        lhs = adjoint(star_product(f, g, theta), theta)
        rhs = star_product(adjoint(g, theta), adjoint(f, theta), theta)
        assert (lhs - rhs).max_abs() < 1e-10


# -- trace ----------------------------------------------------------------------


def test_trace_spot_values():
    assert trace(unit(2)) == 1
    assert trace(monomial(2, (1, 0))) == 0


def test_trace_inner_product():
    rng = random.Random(31)
    for _ in range(30):
        p = rng.choice((2, 4))
        theta = random_skew(rng, p)
        h = random_element(rng, p, max_support=10)
        norm2 = sum(abs(c) ** 2 for c in h.terms.values())
        got = trace(star_product(adjoint(h, theta), h, theta))
        assert abs(got - norm2) < 1e-10


def test_traciality():
    rng = random.Random(37)
    worst = 0.0
    for _ in range(50):
        p = rng.choice((2, 4))
        theta = random_skew(rng, p)
        f = random_element(rng, p, max_support=10)
        g = random_element(rng, p, max_support=10)
        worst = max(
            worst,
            abs(trace(star_product(f, g, theta)) - trace(star_product(g, f, theta))),
        )
    assert worst <= 1e-12


# -- derivations -------------------------------------------------------------------


def test_derivation_spot_values():
    u1 = monomial(2, (1, 0))
    d1 = derivation(1, u1)
    assert abs(d1.coeff((1, 0)) - 2j * math.pi) < 1e-15
    assert derivation(2, u1).terms == {}
    d = derivation(1, monomial(2, (3, -2)))
    assert abs(d.coeff((3, -2)) - 6j * math.pi) < 1e-14
    with pytest.raises(ValueError):
        derivation(3, u1)
    with pytest.raises(ValueError):
        derivation(0, u1)


def test_leibniz_rule():
    rng = random.Random(41)
    worst = 0.0
    for _ in range(40):
        p = rng.choice((2, 4))
        theta = random_skew(rng, p)
        f = random_element(rng, p, max_support=8)
        g = random_element(rng, p, max_support=8)
        j = rng.randint(1, p)
        lhs = derivation(j, star_product(f, g, theta))
        rhs = star_product(derivation(j, f), g, theta) + star_product(f, derivation(j, g), theta)
        worst = max(worst, (lhs - rhs).max_abs())
    assert worst <= 1e-10


def test_trace_kills_derivations_exactly():
    rng = random.Random(43)
    for _ in range(20):
        p = rng.choice((2, 4))
        f = random_element(rng, p, max_support=10)
        for j in range(1, p + 1):
            assert trace(derivation(j, f)) == 0


# -- cyclic 2-cocycle -----------------------------------------------------------------


def test_cyclic_2cocycle_spot_values():
    u1, u2 = monomial(2, (1, 0)), monomial(2, (0, 1))
    assert abs(cyclic_2cocycle(unit(2), u1, u2, THETA_HALF)) < 1e-12
    h = star_product(u1, u2, THETA_HALF)
    value = cyclic_2cocycle(adjoint(h, THETA_HALF), u1, u2, THETA_HALF)
    assert abs(value - (-4 * math.pi**2)) < 1e-9
    rng = random.Random(47)
    f0 = random_element(rng, 2, max_support=5)
    f2 = random_element(rng, 2, max_support=5)
    assert abs(cyclic_2cocycle(f0, unit(2), f2, THETA_HALF)) < 1e-12


def test_cyclic_2cocycle_is_cyclic():
    rng = random.Random(53)
    worst = 0.0
    for _ in range(30):
        p = rng.choice((2, 4))
        theta = random_skew(rng, p)
        f0, f1, f2 = (random_element(rng, p, max_support=6) for _ in range(3))
        a = cyclic_2cocycle(f0, f1, f2, theta)
        b = cyclic_2cocycle(f2, f0, f1, theta)
        worst = max(worst, abs(a - b))
    assert worst <= 1e-9


def test_cyclic_2cocycle_rejects_bad_rank():
    u1 = monomial(2, (1, 0))
    with pytest.raises(ValueError):
        cyclic_2cocycle(u1, u1, u1, THETA_HALF, g=2)
    theta3 = SkewMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    f = monomial(3, (1, 0, 0))
    with pytest.raises(ValueError):
        cyclic_2cocycle(f, f, f, theta3)


# -- clock shift ---------------------------------------------------------------------


def test_clock_shift_spot_cases():
    u, v = clock_shift_rep(1, 3)
    omega = cmath.exp(2j * math.pi / 3)
    assert np.max(np.abs(u @ v - omega * (v @ u))) <= 1e-12
    u, v = clock_shift_rep(0, 1)
    assert u.shape == (1, 1) and v.shape == (1, 1)
    assert np.allclose(u, 1) and np.allclose(v, 1)
    u, v = clock_shift_rep(1, 2)
    assert np.max(np.abs(u @ v + v @ u)) <= 1e-12


def test_clock_shift_matches_star_product_phase():
    for a, b in ((1, 3), (2, 5), (3, 7)):
        theta = SkewMatrix([[0, Fraction(a, b)], [Fraction(-a, b), 0]])
        u1, u2 = monomial(2, (1, 0)), monomial(2, (0, 1))
        c12 = complex(star_product(u1, u2, theta).coeff((1, 1)))
        c21 = complex(star_product(u2, u1, theta).coeff((1, 1)))
        u, v = clock_shift_rep(a, b)
        uv, vu = u @ v, v @ u
        k = np.argmax(np.abs(vu))
        matrix_phase = uv.flat[k] / vu.flat[k]
        assert abs(c12 / c21 - matrix_phase) <= 1e-12


def test_clock_shift_rejects_bad_input():
    with pytest.raises(ValueError):
        clock_shift_rep(1, 0)
    with pytest.raises(ValueError):
        clock_shift_rep(2, 4)


# -- element serialization --------------------------------------------------------------


def test_element_json_round_trip_rational_lossless():
    f = NCTElement(2, {(1, 0): Fraction(1, 3), (0, 2): Fraction(-2, 7)})
    obj = f.to_json()
    assert obj["terms"][0]["re"] == "-2/7"  # sorted support: (0,2) first
    back = NCTElement.from_json(obj)
    assert back == f


def test_element_json_round_trip_gaussian_rational():
    from hyperlandau.exact import Cyclotomic

    c = Cyclotomic.from_rational(Fraction(1, 2), 4) + Fraction(1, 3) * Cyclotomic.root_of_unity(4, 1)
    f = NCTElement(2, {(1, 1): c})
    obj = f.to_json()
    assert obj["terms"][0] == {"n": [1, 1], "re": "1/2", "im": "1/3"}
    assert NCTElement.from_json(obj) == f


def test_element_json_round_trip_float():
    f = NCTElement(2, {(1, 0): 0.5 + 0.25j, (-1, 3): -2.0})
    back = NCTElement.from_json(f.to_json())
    assert back.p == f.p
    assert (back - f).max_abs() < 1e-15


def test_element_prunes_zero_coefficients():
    f = NCTElement(2, {(1, 0): 0, (0, 1): 1e-16, (2, 2): 1.0})
    assert set(f.terms) == {(2, 2)}
    g = NCTElement(2, {(1, 0): Fraction(1, 2)}) - NCTElement(2, {(1, 0): Fraction(1, 2)})
    assert g.terms == {}
