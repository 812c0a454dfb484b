import json
import math

import pytest

from changhee.algebra import Polynomial, falling_factorial_poly, falling_factorial_scalar
from changhee.coeffs import (
    CoeffTable,
    closed_form_table,
    coeff_closed_form,
    coeff_table,
    nested_sum,
    nested_sum_enumerate,
)


def P(*coeffs):
    return Polynomial(coeffs)


# rows solved from d^N F / F with sympy, ascending coefficients in x
SOLVED_ROWS = {
    4: [[24], [0, -24], [0, -12, 12], [0, -8, 12, -4], [0, -6, 11, -6, 1]],
    5: [[-120], [0, 120], [0, 60, -60], [0, 40, -60, 20], [0, 30, -55, 30, -5], [0, 24, -50, 35, -10, 1]],
    6: [
        [720], [0, -720], [0, -360, 360], [0, -240, 360, -120], [0, -180, 330, -180, 30],
        [0, -144, 300, -210, 60, -6], [0, -120, 274, -225, 85, -15, 1],
    ],
}


def test_low_rows():
    t = coeff_table(3)
    assert t.row(0) == (P(1),)
    assert t.row(1) == (P(-1), P(0, 1))
    assert t.row(2) == (P(2), P(0, -2), P(0, -1, 1))
    assert t.row(3) == (P(-6), P(0, 6), P(0, 3, -3), P(0, 2, -3, 1))


@pytest.mark.parametrize("N", sorted(SOLVED_ROWS))
def test_rows_against_solved_identity(N):
    assert coeff_table(N).row(N) == tuple(Polynomial(c) for c in SOLVED_ROWS[N])


def test_entry_five_zero():
    assert coeff_table(5)[5, 0] == -120


@pytest.mark.parametrize("N", range(13))
def test_diagonal_and_first_column(N):
    t = coeff_table(N)
    assert t[N, 0] == (-1) ** N * math.factorial(N)
    assert t[N, N] == falling_factorial_poly(N)


@pytest.mark.parametrize("N", range(13))
def test_degrees_and_divisibility_by_x(N):
    t = coeff_table(N)
    for i in range(N + 1):
        assert t[N, i].degree == i
        if i >= 1:
            assert t[N, i][0] == 0


@pytest.mark.parametrize("N", range(13))
def test_leading_sign(N):
    t = coeff_table(N)
    for i in range(N + 1):
        assert (t[N, i].leading_coefficient() > 0) == ((N - i) % 2 == 0)


def test_table_indexing_bounds():
    t = coeff_table(2)
    with pytest.raises(IndexError):
        t[1, 2]
    with pytest.raises(IndexError):
        t[3, 0]
    with pytest.raises(ValueError):
        coeff_table(-1)


# -- nested sum ------------------------------------------------------------------

@pytest.mark.parametrize("j, N, expected", [(1, 7, 7), (2, 4, 6), (3, 5, 10), (4, 4, 1), (9, 9, 1)])
def test_nested_sum_examples(j, N, expected):
    assert nested_sum(j, N) == expected
    assert nested_sum_enumerate(j, N) == expected


@pytest.mark.parametrize("N", range(1, 16))
def test_nested_sum_routes_agree(N):
    for j in range(1, N + 1):
        assert nested_sum(j, N) == nested_sum_enumerate(j, N)


@pytest.mark.parametrize("j, N", [(0, 3), (4, 3), (-1, 2)])
def test_nested_sum_rejects_bad_args(j, N):
    with pytest.raises(ValueError):
        nested_sum(j, N)
    with pytest.raises(ValueError):
        nested_sum_enumerate(j, N)


# -- closed form -------------------------------------------------------------------

def test_closed_form_examples():
    assert coeff_closed_form(0, 4) == 24
    assert coeff_closed_form(1, 4) == P(0, -24)
    assert coeff_closed_form(2, 4) == P(0, -12, 12)
    for N in range(8):
        assert coeff_closed_form(N, N) == falling_factorial_poly(N)
    with pytest.raises(ValueError):
        coeff_closed_form(3, 2)


@pytest.mark.parametrize("N", range(13))
def test_closed_form_matches_recurrence(N):
    t = coeff_table(N)
    for j in range(N + 1):
        assert coeff_closed_form(j, N) == t[N, j]


def test_closed_form_table_matches():
    assert closed_form_table(12) == coeff_table(12)


# -- displayed special cases, written out literally ----------------------------------

@pytest.mark.parametrize("N", range(1, 11))
def test_specialisations(N):
    t = coeff_table(N + 1)
    x2, x3, x4 = (falling_factorial_poly(k) for k in (2, 3, 4))
    assert t[N + 1, 1] == P(0, (-1) ** N * math.factorial(N + 1))
    s2 = sum(N - i1 for i1 in range(N))
    assert t[N + 1, 2] == x2 * ((-1) ** (N - 1) * math.factorial(N - 1) * s2)
    if N >= 2:
        s3 = sum(N - i2 - i1 - 1 for i2 in range(N - 1) for i1 in range(N - 1 - i2))
        assert t[N + 1, 3] == x3 * ((-1) ** (N - 2) * math.factorial(N - 2) * s3)
    if N >= 3:
        s4 = sum(
            N - i3 - i2 - i1 - 2
            for i3 in range(N - 2)
            for i2 in range(N - 2 - i3)
            for i1 in range(N - 2 - i3 - i2)
        )
        assert t[N + 1, 4] == x4 * ((-1) ** (N - 3) * math.factorial(N - 3) * s4)


@pytest.mark.parametrize("N", range(1, 11))
def test_column_recursion(N):
    # a_j(N+1) = (x - j + 1) sum_i (-1)^i (N-j+1)_i a_{j-1}(N-i)
    t = coeff_table(N + 1)
    for j in range(1, N + 1):
        acc = Polynomial()
        for i in range(N - j + 2):
            acc = acc + t[N - i, j - 1] * ((-1) ** i * falling_factorial_scalar(N - j + 1, i))
        assert t[N + 1, j] == P(1 - j, 1) * acc


def test_json_round_trip():
    t = coeff_table(3)
    data = json.loads(json.dumps(t.to_json()))
    assert data["n_max"] == 3
    assert data["rows"][1] == [["-1"], ["0", "1"]]
    assert CoeffTable.from_json(data) == t


def test_latex_layout():
    assert coeff_table(1).latex() == "\\begin{pmatrix}\n1 & -1 \\\\\n0 & x\n\\end{pmatrix}"


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        CoeffTable(1, [[P(1)], [P(1)]])
