"""Coefficient functions a_i(N, x) of the derivatives of F = (1+t)^x / (2+t).

They are defined by

    d^N F / dt^N = sum_{i=0}^{N} a_i(N, x) (1+t)^(-i) (2+t)^(i-N) F

and built here two ways: the row-by-row recurrence (:func:`coeff_table`),
seeded only with a_0(0, x) = 1, and the nested-sum closed form
(:func:`coeff_closed_form`).
"""

from __future__ import annotations

import math
from functools import lru_cache

from changhee.algebra import (
    ONE,
    Polynomial,
    binomial_general,
    falling_factorial_poly,
)

__all__ = [
    "CoeffTable",
    "closed_form_table",
    "coeff_closed_form",
    "coeff_table",
    "nested_sum",
    "nested_sum_enumerate",
]


class CoeffTable:
    """Lower-triangular table with ``table[N, i] == a_i(N, x)``."""

    def __init__(self, n_max: int, rows):
        self.n_max = n_max
        self.rows = tuple(tuple(r) for r in rows)
        if len(self.rows) != n_max + 1 or any(len(r) != N + 1 for N, r in enumerate(self.rows)):
            raise ValueError("rows must form a triangle with N + 1 entries in row N")

    def __getitem__(self, key) -> Polynomial:
        N, i = key
        if not 0 <= i <= N <= self.n_max:
            raise IndexError(f"(N={N}, i={i}) outside 0 <= i <= N <= {self.n_max}")
        return self.rows[N][i]

    def row(self, N: int) -> tuple:
        return self.rows[N]

    def __eq__(self, other):
        if not isinstance(other, CoeffTable):
            return NotImplemented
        return self.n_max == other.n_max and self.rows == other.rows

    __hash__ = None

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "rows": [[p.to_json() for p in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "CoeffTable":
        rows = [[Polynomial.from_json(p) for p in r] for r in data["rows"]]
        return cls(data["n_max"], rows)

    def latex(self) -> str:
        """Upper-triangular matrix with entry (i, N) = a_i(N, x)."""
        n = self.n_max
        lines = [r"\begin{pmatrix}"]
        for i in range(n + 1):
            cells = [self.rows[N][i].latex() if i <= N else "0" for N in range(n + 1)]
            lines.append(" & ".join(cells) + (r" \\" if i < n else ""))
        lines.append(r"\end{pmatrix}")
        return "\n".join(lines)


def _x_plus(c: int) -> Polynomial:
    return Polynomial((c, 1))


@lru_cache(maxsize=None)
def _rows_upto(n_max: int) -> tuple:
    if n_max == 0:
        return ((ONE,),)
    prev_rows = _rows_upto(n_max - 1)
    prev = prev_rows[-1]
    N = n_max - 1
    row = [prev[0] * -(N + 1)]
    for i in range(1, N + 1):
        row.append(_x_plus(1 - i) * prev[i - 1] + prev[i] * (i - N - 1))
    row.append(_x_plus(-N) * prev[N])
    return prev_rows + (tuple(row),)


def coeff_table(n_max: int) -> CoeffTable:
    """a_i(N, x) for 0 <= i <= N <= n_max by the triangular recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return CoeffTable(n_max, _rows_upto(n_max))


def _check_nested_args(j: int, N: int) -> None:
    if j < 1 or j > N:
        raise ValueError(f"need 1 <= j <= N, got j={j}, N={N}")


def nested_sum_enumerate(j: int, N: int) -> int:
    """Nested sum by walking every index tuple (i_{j-1}, ..., i_1).

    The indices are non-negative with total at most N - j; each tuple
    contributes N - (i_1 + ... + i_{j-1}) - j + 1.  For j = 1 there are no
    indices and the single contribution is N.
    """
    _check_nested_args(j, N)
    total = 0
    for idx in _bounded_tuples(j - 1, N - j):
        total += N - sum(idx) - j + 1
    return total


def _bounded_tuples(length: int, bound: int):
    # non-negative tuples of the given length with sum <= bound
    if length == 0:
        yield ()
        return
    for first in range(bound + 1):
        for rest in _bounded_tuples(length - 1, bound - first):
            yield (first,) + rest


def nested_sum(j: int, N: int) -> int:
    """Nested sum collapsed by index total s: sum_s C(s+j-2, j-2) (N-j+1-s)."""
    _check_nested_args(j, N)
    if j == 1:
        return N
    return sum(
        binomial_general(s + j - 2, j - 2) * (N - j + 1 - s) for s in range(N - j + 1)
    )


def coeff_closed_form(j: int, N: int) -> Polynomial:
    """a_j(N, x) from the closed form; (-1)^N N! when j = 0."""
    if j < 0 or N < 0 or j > N:
        raise ValueError(f"need 0 <= j <= N, got j={j}, N={N}")
    if j == 0:
        return Polynomial.constant((-1) ** N * math.factorial(N))
    scale = (-1) ** (N - j) * math.factorial(N - j) * nested_sum(j, N)
    return falling_factorial_poly(j) * scale


def closed_form_table(n_max: int) -> CoeffTable:
    """Same layout as :func:`coeff_table`, filled from the closed form."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return CoeffTable(n_max, [[coeff_closed_form(j, N) for j in range(N + 1)] for N in range(n_max + 1)])
