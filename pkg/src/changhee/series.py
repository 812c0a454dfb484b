"""Truncated formal power series in t with polynomial-in-x coefficients.

A :class:`TruncatedSeries` of order ``T`` knows the coefficients of
t^0 .. t^T exactly and nothing beyond.  Binary operations return the
smaller of the two orders, differentiation drops one order, and equality
compares only the common known prefix.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from changhee import kernels
from changhee.algebra import (
    ONE,
    ZERO,
    Polynomial,
    binomial_general,
    falling_factorial_poly,
)

__all__ = [
    "TruncatedSeries",
    "ts_2F",
    "ts_F",
    "ts_add",
    "ts_binomial_x",
    "ts_compose",
    "ts_derivative",
    "ts_expm1",
    "ts_inverse",
    "ts_log1p",
    "ts_mul",
    "ts_shifted_pow",
]


def _to_poly(c) -> Polynomial:
    return c if isinstance(c, Polynomial) else Polynomial((c,))


class TruncatedSeries:
    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients: Iterable, order: int | None = None):
        coeffs = [_to_poly(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("a truncated series needs order >= 0")
        if len(coeffs) > order + 1:
            raise ValueError(f"{len(coeffs)} coefficients exceed order {order}")
        # unspecified slots below the order are genuine zeros
        coeffs.extend([ZERO] * (order + 1 - len(coeffs)))
        self.order = order
        self.coefficients: tuple = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((ONE,), order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        """The series t (order must be at least 1 for it to be visible)."""
        return cls((ZERO, ONE)[: order + 1], order)

    def __getitem__(self, k: int) -> Polynomial:
        if not 0 <= k <= self.order:
            raise IndexError(f"t^{k} is outside the known range 0..{self.order}")
        return self.coefficients[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coefficients[: order + 1], order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return ts_add(self, other)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coefficients], self.order)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return ts_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ts_mul(self, other)
        if isinstance(other, (int, Fraction, Polynomial)):
            return TruncatedSeries([c * other for c in self.coefficients], self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coefficients[: n + 1] == other.coefficients[: n + 1]

    __hash__ = None

    def first_difference(self, other: "TruncatedSeries") -> int | None:
        """Lowest t-power (within the common order) where the two differ."""
        n = min(self.order, other.order)
        for k in range(n + 1):
            if self.coefficients[k] != other.coefficients[k]:
                return k
        return None

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coefficients)
        return f"TruncatedSeries([{body}], order={self.order})"

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [c.to_json() for c in self.coefficients]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        return cls([Polynomial.from_json(c) for c in data["coefficients"]], data["order"])


def ts_add(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    n = min(A.order, B.order)
    return TruncatedSeries([A.coefficients[k] + B.coefficients[k] for k in range(n + 1)], n)


def _integer_rows(S: TruncatedSeries, order: int):
    # common denominator for every coefficient of S up to `order`
    den = 1
    for c in S.coefficients[: order + 1]:
        den = den * c.denominator // math.gcd(den, c.denominator)
    rows = []
    for c in S.coefficients[: order + 1]:
        f = den // c.denominator
        rows.append([n * f for n in c.numerators])
    return rows, den


def ts_mul(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to ``min(A.order, B.order)``."""
    n = min(A.order, B.order)
    ra, da = _integer_rows(A, n)
    rb, db = _integer_rows(B, n)
    rows = kernels.convolve2d(ra, rb, n)
    den = da * db
    return TruncatedSeries([Polynomial.from_integers(r, den) for r in rows], n)


def ts_derivative(A: TruncatedSeries) -> TruncatedSeries:
    if A.order < 1:
        raise ValueError("cannot differentiate an order-0 truncated series")
    return TruncatedSeries(
        [(k + 1) * A.coefficients[k + 1] for k in range(A.order)], A.order - 1
    )


def ts_inverse(A: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be a non-zero constant."""
    c0 = A.coefficients[0]
    if c0.degree != 0:
        raise ValueError("constant term is not an invertible constant")
    inv0 = 1 / c0[0]
    out = [Polynomial((inv0,))]
    for k in range(1, A.order + 1):
        acc = ZERO
        for j in range(1, k + 1):
            acc = acc + A.coefficients[j] * out[k - j]
        out.append(-acc * inv0)
    return TruncatedSeries(out, A.order)


@lru_cache(maxsize=None)
def ts_shifted_pow(c: int, e: int, T: int) -> TruncatedSeries:
    """(c + t)^e to order T, for c in {1, 2} and any integer e.

    The t^m coefficient is ``binomial_general(e, m) * c**(e - m)``.
    """
    if c not in (1, 2):
        raise ValueError(f"shift must be 1 or 2, got {c}")
    if T < 0:
        raise ValueError("order must be >= 0")
    return TruncatedSeries(
        [binomial_general(e, m) * Fraction(c) ** (e - m) for m in range(T + 1)], T
    )


@lru_cache(maxsize=None)
def ts_binomial_x(T: int) -> TruncatedSeries:
    """(1 + t)^x: the t^n coefficient is (x)_n / n!."""
    return TruncatedSeries(
        [falling_factorial_poly(n) / math.factorial(n) for n in range(T + 1)], T
    )


def ts_log1p(T: int) -> TruncatedSeries:
    return TruncatedSeries(
        [0] + [Fraction((-1) ** (n + 1), n) for n in range(1, T + 1)], T
    )


def ts_expm1(T: int) -> TruncatedSeries:
    return TruncatedSeries(
        [0] + [Fraction(1, math.factorial(n)) for n in range(1, T + 1)], T
    )


def ts_compose(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    """A(B(t)) by Horner's scheme; B must have zero constant term."""
    if B.coefficients[0]:
        raise ValueError("inner series must have zero constant term")
    if A.order != B.order:
        raise ValueError(f"orders differ: {A.order} vs {B.order}")
    n = A.order
    acc = TruncatedSeries((A.coefficients[n],), n)
    for k in range(n - 1, -1, -1):
        acc = ts_mul(acc, B)
        acc = TruncatedSeries((acc.coefficients[0] + A.coefficients[k],) + acc.coefficients[1:], n)
    return acc


@lru_cache(maxsize=None)
def ts_F(T: int) -> TruncatedSeries:
    """(2 + t)^-1 (1 + t)^x to order T."""
    return ts_mul(ts_shifted_pow(2, -1, T), ts_binomial_x(T))


@lru_cache(maxsize=None)
def ts_2F(T: int) -> TruncatedSeries:
    """2 (2 + t)^-1 (1 + t)^x; the t^n coefficient is Ch_n(x) / n!."""
    return ts_F(T) * 2


def series_from_sequence(polys: Sequence[Polynomial]) -> TruncatedSeries:
    """Exponential generating series sum p_n t^n / n! over the given terms."""
    return TruncatedSeries(
        [p / math.factorial(n) for n, p in enumerate(polys)], len(polys) - 1
    )
