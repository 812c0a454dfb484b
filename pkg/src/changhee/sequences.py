"""Stirling numbers, Euler polynomials and Changhee polynomials.

Each family comes from a triangular recurrence that does not touch the
power-series module, so the series constructions can be checked against
it.  Stirling numbers of the first kind are signed.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache

from changhee.algebra import ONE, X, Polynomial, falling_factorial_poly

__all__ = [
    "changhee_poly",
    "changhee_via_stirling",
    "euler_poly",
    "euler_via_stirling",
    "stirling1",
    "stirling1_row",
    "stirling2",
    "stirling2_row",
]


class _Triangle:
    """Row cache for a triangular integer recurrence.

    Readers either find a finished row or compute missing ones under the
    lock; a row is published only once complete.
    """

    def __init__(self, step):
        self._rows = [(1,)]
        self._step = step
        self._lock = threading.Lock()

    def clear(self) -> None:
        with self._lock:
            del self._rows[1:]

    def row(self, n: int) -> tuple:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows) - 1
                self._rows.append(self._step(m, self._rows[m]))
            return self._rows[n]


def _s1_step(n, prev):
    # S1(n+1, k) = S1(n, k-1) - n S1(n, k)
    row = []
    for k in range(n + 2):
        left = prev[k - 1] if k >= 1 else 0
        here = prev[k] if k <= n else 0
        row.append(left - n * here)
    return tuple(row)


def _s2_step(n, prev):
    # S2(n+1, k) = k S2(n, k) + S2(n, k-1)
    row = []
    for k in range(n + 2):
        left = prev[k - 1] if k >= 1 else 0
        here = prev[k] if k <= n else 0
        row.append(k * here + left)
    return tuple(row)


_S1 = _Triangle(_s1_step)
_S2 = _Triangle(_s2_step)


def stirling1_row(n: int) -> tuple:
    """(S1(n, 0), ..., S1(n, n))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _S1.row(n)


def stirling2_row(n: int) -> tuple:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _S2.row(n)


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind: [x^k] (x)_n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _S1.row(n)[k]


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k non-empty blocks."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _S2.row(n)[k]


@lru_cache(maxsize=None)
def euler_poly(n: int) -> Polynomial:
    """E_n(x) from E_n = x^n - 1/2 sum_{k<n} C(n,k) E_k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = X**n
    for k in range(n):
        acc = acc - euler_poly(k) * math.comb(n, k) / 2
    return acc


@lru_cache(maxsize=None)
def changhee_poly(n: int) -> Polynomial:
    """Ch_n(x) from Ch_n = (x)_n - (n/2) Ch_{n-1}, Ch_0 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ONE
    return falling_factorial_poly(n) - changhee_poly(n - 1) * n / 2


def changhee_via_stirling(m: int) -> Polynomial:
    """sum_n E_n(x) S1(m, n)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    acc = Polynomial()
    for n, s in enumerate(stirling1_row(m)):
        if s:
            acc = acc + euler_poly(n) * s
    return acc


def euler_via_stirling(n: int) -> Polynomial:
    """sum_m Ch_m(x) S2(n, m)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    acc = Polynomial()
    for m, s in enumerate(stirling2_row(n)):
        if s:
            acc = acc + changhee_poly(m) * s
    return acc
