import math
from fractions import Fraction

import pytest

from changhee.algebra import Polynomial
from changhee.sequences import (
    changhee_poly,
    changhee_via_stirling,
    euler_poly,
    euler_via_stirling,
    stirling1,
    stirling2,
)


def P(*coeffs):
    return Polynomial(coeffs)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def brute_stirling2(n, k):
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == k)


def brute_stirling1(n, k):
    # expand x (x-1) ... (x-n+1) coefficient by coefficient
    coeffs = [1]
    for j in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] += c
            nxt[d] -= j * c
        coeffs = nxt
    return coeffs[k] if k < len(coeffs) else 0


@pytest.mark.parametrize("n, k, expected", [(0, 0, 1), (3, 2, -3), (4, 2, 11), (2, 5, 0), (6, 3, -225), (8, 4, 6769)])
def test_stirling1_examples(n, k, expected):
    assert stirling1(n, k) == expected


@pytest.mark.parametrize("n, k, expected", [(0, 0, 1), (3, 2, 3), (4, 2, 7), (5, 3, 25), (6, 3, 90)])
def test_stirling2_examples(n, k, expected):
    assert stirling2(n, k) == expected


@pytest.mark.parametrize("n", range(9))
def test_stirling_against_brute_force(n):
    for k in range(n + 2):
        assert stirling2(n, k) == brute_stirling2(n, k)
        assert stirling1(n, k) == brute_stirling1(n, k)


def test_stirling_out_of_range():
    assert stirling1(-1, 0) == 0
    assert stirling2(3, -1) == 0


@pytest.mark.parametrize("n", range(21))
@pytest.mark.parametrize("m", range(21))
def test_stirling_orthogonality(n, m):
    assert sum(stirling1(n, k) * stirling2(k, m) for k in range(n + 1)) == int(n == m)


# Euler and Changhee polynomials, frozen from a series expansion in sympy
EULER = {
    0: [1],
    1: ["-1/2", 1],
    2: [0, -1, 1],
    3: ["1/4", 0, "-3/2", 1],
    4: [0, 1, 0, -2, 1],
    5: ["-1/2", 0, "5/2", 0, "-5/2", 1],
    6: [0, -3, 0, 5, 0, -3, 1],
}
CHANGHEE = {
    0: [1],
    1: ["-1/2", 1],
    2: ["1/2", -2, 1],
    3: ["-3/4", 5, "-9/2", 1],
    4: ["3/2", -16, 20, -8, 1],
    5: ["-15/4", 64, -100, 55, "-25/2", 1],
    6: ["45/4", -312, 574, -390, "245/2", -18, 1],
}


@pytest.mark.parametrize("n", sorted(EULER))
def test_euler_poly_frozen(n):
    assert euler_poly(n) == Polynomial(EULER[n])


@pytest.mark.parametrize("n", sorted(CHANGHEE))
def test_changhee_poly_frozen(n):
    assert changhee_poly(n) == Polynomial(CHANGHEE[n])


def test_changhee_number_three():
    assert changhee_poly(3)(0) == Fraction(-3, 4)


@pytest.mark.parametrize("n", range(21))
def test_changhee_numbers(n):
    assert changhee_poly(n)(0) == Fraction((-1) ** n * math.factorial(n), 2**n)


@pytest.mark.parametrize("n", range(21))
def test_changhee_monic_of_degree_n(n):
    p = changhee_poly(n)
    assert p.degree == n
    assert p.leading_coefficient() == 1


def test_stirling_route_small_cases():
    assert changhee_via_stirling(0) == P(1)
    assert changhee_via_stirling(2) == P(Fraction(1, 2), -2, 1)
    assert euler_via_stirling(0) == P(1)
    assert euler_via_stirling(2) == P(0, -1, 1)


@pytest.mark.parametrize("n", range(21))
def test_stirling_routes_agree(n):
    assert changhee_via_stirling(n) == changhee_poly(n)
    assert euler_via_stirling(n) == euler_poly(n)


def test_negative_index_rejected():
    for f in (euler_poly, changhee_poly, changhee_via_stirling, euler_via_stirling):
        with pytest.raises(ValueError):
            f(-1)
