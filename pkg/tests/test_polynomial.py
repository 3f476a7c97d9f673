import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from peakpoly.polynomial import (
    ClearPowerTooSmall,
    DivisionByZeroPoly,
    NonzeroRemainder,
    Poly,
    gcd_poly,
    primitive_part,
)

ONE_PLUS_X = Poly((1, 1))

fractions = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=50
)
small_polys = st.lists(fractions, max_size=6).map(Poly)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=20)


def test_construction_strips_trailing_zeros():
    assert Poly((1, 2, 0, 0)) == Poly((1, 2))
    assert Poly((0, 0)) == Poly.zero()
    assert Poly.zero().coeffs == ()


def test_degree_of_zero_is_minus_infinity():
    assert Poly.zero().degree == float("-inf")
    assert Poly.zero().degree < -1
    assert Poly.one().degree == 0
    assert Poly((0, 0, 3)).degree == 2


def test_coefficients_normalized_to_fractions():
    p = Poly((Fraction(2, 4), 1))
    assert p.coeffs == (Fraction(1, 2), Fraction(1))


def test_degree_of_product_adds():
    p = Poly((1, 4, 5, 2))
    q = Poly((0, 0, 7))
    assert (p * q).degree == p.degree + q.degree


def test_derivative_of_cubic():
    # termwise power rule on 1 + 4x + 5x^2 + 2x^3
    assert Poly((1, 4, 5, 2)).derivative() == Poly((4, 10, 6))


def test_derivative_of_constant_is_zero():
    assert Poly.one().derivative() == Poly.zero()


def test_derivative_of_binomial_power_at_one():
    # d/dx (1+x)^4 = 4(1+x)^3, which evaluates to 32 at x = 1
    assert (ONE_PLUS_X**4).derivative()(1) == 32


def test_exact_div_square():
    assert Poly((1, 2, 1)).exact_div(ONE_PLUS_X) == ONE_PLUS_X


def test_exact_div_known_factorization():
    # (1 + 8x + 18x^2 + 16x^3 + 5x^4) / (1+x)^3 = 1 + 5x
    assert Poly((1, 8, 18, 16, 5)).exact_div(ONE_PLUS_X**3) == Poly((1, 5))


def test_exact_div_nonzero_remainder():
    with pytest.raises(NonzeroRemainder):
        ONE_PLUS_X.exact_div(Poly((1, 2)))


def test_division_by_zero_poly():
    with pytest.raises(DivisionByZeroPoly):
        divmod(ONE_PLUS_X, Poly.zero())


def test_subst_cleared_peak_to_eulerian_shape():
    # hand expansion: 4(1+x)^2 + 2(4x) = 4 + 16x + 4x^2 = 4 (1 + 4x + x^2)
    p = Poly((4, 2))
    out = p.subst_cleared(Poly((0, 4)), ONE_PLUS_X**2, 1)
    assert out == Poly((4, 16, 4))
    assert out == 4 * Poly((1, 4, 1))


def test_subst_cleared_identity_cases():
    assert Poly.one().subst_cleared(Poly((0, 4)), ONE_PLUS_X, 0) == Poly.one()
    assert Poly.x().subst_cleared(Poly((0, 0, 1)), Poly.one(), 1) == Poly((0, 0, 1))


def test_subst_cleared_rejects_small_clear_power():
    with pytest.raises(ClearPowerTooSmall):
        Poly((1, 2, 3)).subst_cleared(Poly.x(), ONE_PLUS_X, 1)


def test_subst_cleared_zero_polynomial():
    assert Poly.zero().subst_cleared(Poly.x(), ONE_PLUS_X, 0) == Poly.zero()


@given(small_polys, small_polys, small_polys)
def test_ring_distributivity(p, q, r):
    assert (p + q) * r == p * r + q * r


@given(small_polys, small_polys)
def test_commutativity(p, q):
    assert p * q == q * p
    assert p + q == q + p


@given(small_polys, small_polys, rationals)
def test_evaluation_homomorphism(p, q, r):
    assert (p * q)(r) == p(r) * q(r)
    assert (p + q)(r) == p(r) + q(r)


@given(small_polys, st.integers(min_value=0, max_value=4))
def test_power_matches_repeated_product(p, k):
    expected = Poly.one()
    for _ in range(k):
        expected = expected * p
    assert p**k == expected


def test_exact_div_roundtrip_500_random_pairs():
    rng = random.Random(20250808)

    def rand_poly(max_deg):
        deg = rng.randint(0, max_deg)
        coeffs = [
            Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
            for _ in range(deg + 1)
        ]
        return Poly(coeffs)

    checked = 0
    while checked < 500:
        p = rand_poly(12)
        d = rand_poly(12)
        if d.is_zero():
            continue
        assert (p * d).exact_div(d) == p
        checked += 1


@given(small_polys, st.lists(fractions, min_size=1, max_size=4).map(Poly))
def test_subst_cleared_with_unit_denominator_is_composition(p, q):
    if p.is_zero():
        clear = 0
    else:
        clear = int(p.degree)
    assert p.subst_cleared(q, Poly.one(), clear) == p.compose(q)


def test_compose_example():
    # (1 + x^2) composed with 2x is 1 + 4x^2
    assert Poly((1, 0, 1)).compose(Poly((0, 2))) == Poly((1, 0, 4))


def test_primitive_part_scales_positively():
    p = Poly((Fraction(2, 3), Fraction(-4, 3)))
    pp = primitive_part(p)
    assert pp == Poly((1, -2))
    q = Poly((-6, 9))
    assert primitive_part(q) == Poly((-2, 3))


def test_gcd_poly():
    p = ONE_PLUS_X**2 * Poly((1, 5))
    q = ONE_PLUS_X * Poly((1, 2))
    assert gcd_poly(p, q) == ONE_PLUS_X
    assert gcd_poly(p, Poly((1, 2))) == Poly.one()
    assert gcd_poly(p, Poly.zero()) == ONE_PLUS_X**2 * Poly((1, 5)) * Fraction(1, 5)
