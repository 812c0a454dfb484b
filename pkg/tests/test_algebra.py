from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from changhee.algebra import (
    ONE,
    X,
    ZERO,
    Polynomial,
    binomial_general,
    factorial,
    falling_factorial_poly,
    falling_factorial_scalar,
    format_rational,
    parse_rational,
)
from changhee.sequences import stirling1


@pytest.mark.parametrize("n, expected", [(0, 1), (5, 120), (10, 3628800)])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize(
    "a, k, expected", [(-1, 0, 1), (5, 3, 60), (2, 3, 0), (-1, 2, 2)]
)
def test_falling_factorial_scalar(a, k, expected):
    assert falling_factorial_scalar(a, k) == expected


@pytest.mark.parametrize(
    "a, k, expected", [(-1, 0, 1), (2, 3, 0), (4, 2, 6), (-2, 3, -4)]
)
def test_binomial_general(a, k, expected):
    assert binomial_general(a, k) == expected


@pytest.mark.parametrize("a", range(-10, 11))
@pytest.mark.parametrize("k", range(11))
def test_binomial_times_factorial_is_falling_factorial(a, k):
    assert binomial_general(a, k) * factorial(k) == falling_factorial_scalar(a, k)


def test_binomial_vanishes_below_lower_argument():
    for a in range(0, 8):
        for k in range(a + 1, 10):
            assert binomial_general(a, k) == 0


# -- rationals -----------------------------------------------------------------

@pytest.mark.parametrize(
    "value, text",
    [(Fraction(1, 2), "1/2"), (Fraction(-3, 4), "-3/4"), (Fraction(6, 3), "2"), (0, "0")],
)
def test_rational_round_trip(value, text):
    assert format_rational(value) == text
    assert parse_rational(text) == value


def test_parse_rational_rejects_garbage():
    for bad in ["", "1/0", "x", "1/-2"]:
        with pytest.raises(ValueError):
            parse_rational(bad)


@given(st.fractions())
def test_normalisation_idempotent(q):
    once = Fraction(q.numerator, q.denominator)
    twice = Fraction(once.numerator, once.denominator)
    assert (once.numerator, once.denominator) == (twice.numerator, twice.denominator)
    assert once.denominator > 0


# -- polynomials -----------------------------------------------------------------

def test_zero_polynomial_has_no_degree():
    assert ZERO.coefficients == ()
    assert ZERO.degree is None
    assert Polynomial([0, 0, 0]) == ZERO
    assert str(ZERO) == "0"


def test_trailing_zeros_dropped():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coefficients == (1, 2)


def test_multiply_example():
    assert X * (X - 1) == Polynomial([0, -1, 1])


def test_evaluate_example():
    p = Polynomial(["1/2", -2, 1])
    assert p(0) == Fraction(1, 2)
    assert p(Fraction(1, 3)) == Fraction(1, 9) - Fraction(2, 3) + Fraction(1, 2)
    assert ZERO(5) == 0


def test_add_zero_identity():
    p = Polynomial([Fraction(1, 3), 0, -7])
    assert p + ZERO == p
    assert ZERO + p == p


def test_scalar_ops():
    p = Polynomial([2, 4])
    assert p / 2 == Polynomial([1, 2])
    assert p * Fraction(1, 4) == Polynomial(["1/2", 1])
    assert 3 - X == Polynomial([3, -1])
    with pytest.raises(ZeroDivisionError):
        p / 0


def test_rejects_float_coefficients():
    with pytest.raises(TypeError):
        Polynomial([0.5])


@pytest.mark.parametrize(
    "coeffs, text",
    [
        ([Fraction(1, 2), -2, 1], "x^2 - 2x + 1/2"),
        ([Fraction(1, 4), -1, Fraction(1, 2)], "1/2x^2 - x + 1/4"),
        ([Fraction(-1, 2), 1], "x - 1/2"),
        ([0, 3, -3], "-3x^2 + 3x"),
        ([-6], "-6"),
        ([0, -1], "-x"),
    ],
)
def test_string_form(coeffs, text):
    p = Polynomial(coeffs)
    assert str(p) == text
    assert Polynomial.parse(text) == p


def test_parse_unspaced_forms():
    assert Polynomial.parse("3x-3x^2") == Polynomial([0, 3, -3])
    assert Polynomial.parse("x^3-3x^2+2x") == falling_factorial_poly(3)
    with pytest.raises(ValueError):
        Polynomial.parse("3y")


def test_json_round_trip():
    p = Polynomial([Fraction(1, 2), -2, 1])
    assert p.to_json() == ["1/2", "-2", "1"]
    assert Polynomial.from_json(p.to_json()) == p


def test_latex_form():
    assert Polynomial([Fraction(1, 4), -1, Fraction(1, 2)]).latex() == r"\frac{1}{2}x^{2} - x + \frac{1}{4}"


@pytest.mark.parametrize(
    "n, coeffs", [(0, [1]), (1, [0, 1]), (3, [0, 2, -3, 1])]
)
def test_falling_factorial_poly(n, coeffs):
    assert falling_factorial_poly(n) == Polynomial(coeffs)


@pytest.mark.parametrize("n", range(21))
def test_falling_factorial_coefficients_are_stirling1(n):
    p = falling_factorial_poly(n)
    assert [p[k] for k in range(n + 1)] == [stirling1(n, k) for k in range(n + 1)]


rationals = st.fractions(max_denominator=20).filter(lambda q: abs(q) < 50)
polys = st.lists(rationals, max_size=5).map(Polynomial)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p + (-p) == ZERO
    assert p * ONE == p
    assert p * q == q * p


@given(polys, polys, rationals)
def test_evaluation_is_a_homomorphism(p, q, a):
    assert (p * q)(a) == p(a) * q(a)
    assert (p + q)(a) == p(a) + q(a)


@given(polys)
def test_representation_is_canonical(p):
    rebuilt = Polynomial(p.coefficients)
    assert rebuilt == p and hash(rebuilt) == hash(p)
    assert rebuilt.numerators == p.numerators and rebuilt.denominator == p.denominator
