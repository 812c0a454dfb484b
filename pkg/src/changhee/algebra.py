"""Exact scalar and dense univariate polynomial arithmetic over Q.

Scalars are :class:`fractions.Fraction`.  A :class:`Polynomial` keeps its
coefficients as integer numerators over one shared positive denominator,
reduced so the representation is unique; the integer vectors feed straight
into the convolution kernels.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

from changhee import kernels

__all__ = [
    "Polynomial",
    "X",
    "ONE",
    "ZERO",
    "binomial_general",
    "factorial",
    "falling_factorial_poly",
    "falling_factorial_scalar",
    "format_rational",
    "parse_rational",
]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


def falling_factorial_scalar(a: int, k: int) -> int:
    """a (a-1) ... (a-k+1); the empty product is 1.  ``a`` may be negative."""
    if k < 0:
        raise ValueError(f"falling factorial length must be >= 0, got {k}")
    out = 1
    for j in range(k):
        out *= a - j
    return out


def binomial_general(a: int, k: int) -> int:
    """Binomial coefficient with arbitrary integer upper argument.

    Defined as ``falling_factorial_scalar(a, k) / k!`` so that
    ``binomial_general(a, 0) == 1`` for every ``a`` (including -1) and the
    value vanishes for ``0 <= a < k``.
    """
    if k < 0:
        raise ValueError(f"binomial lower argument must be >= 0, got {k}")
    q, r = divmod(falling_factorial_scalar(a, k), math.factorial(k))
    assert r == 0
    return q


def format_rational(q) -> str:
    """Render as ``"p/q"`` with ``q > 0`` reduced, or ``"p"`` when ``q == 1``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(s: str) -> Fraction:
    m = _RATIONAL_RE.match(s)
    if m is None:
        raise ValueError(f"not a rational literal: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {s!r}")
    return Fraction(num, den)


def _as_fraction(c) -> Fraction:
    if isinstance(c, str):
        return parse_rational(c)
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, Rational):
        return Fraction(c.numerator, c.denominator)
    raise TypeError(f"exact rational expected, got {type(c).__name__}")


_TERM_RE = re.compile(r"^(\d+(?:/\d+)?)?(?:(x)(?:\^(\d+))?)?$")


class Polynomial:
    """Dense polynomial in x with exact rational coefficients.

    Immutable.  ``coefficients`` is ascending in degree with no trailing
    zeros, so the zero polynomial has no coefficients and ``degree`` None.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [_as_fraction(c) for c in coefficients]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        self._set([c.numerator * (den // c.denominator) for c in coeffs], den)

    def _set(self, num: list, den: int) -> None:
        while num and num[-1] == 0:
            num.pop()
        if not num:
            self._num, self._den = (), 1
        else:
            g = math.gcd(den, *num)
            if g != 1:
                num = [n // g for n in num]
                den //= g
            self._num, self._den = tuple(num), den
        self._hash = None

    @classmethod
    def from_integers(cls, num: Sequence[int], den: int = 1) -> "Polynomial":
        """Build from integer numerators over a shared denominator."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = [-n for n in num], -den
        p = cls.__new__(cls)
        p._set(list(num), den)
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    # -- inspection -----------------------------------------------------

    @property
    def coefficients(self) -> tuple:
        d = self._den
        return tuple(Fraction(n, d) for n in self._num)

    @property
    def numerators(self) -> tuple:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self._num) - 1 if self._num else None

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._num):
            return Fraction(self._num[k], self._den)
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self[len(self._num) - 1] if self._num else Fraction(0)

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self) -> bool:
        return bool(self._num)

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        den = self._den * other._den // math.gcd(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        a, b = self._num, other._num
        if len(a) < len(b):
            a, b, fa, fb = b, a, fb, fa
        num = [x * fa for x in a]
        for i, y in enumerate(b):
            num[i] += y * fb
        return Polynomial.from_integers(num, den)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial.from_integers([-n for n in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self._num or not other._num:
                return ZERO
            return Polynomial.from_integers(
                kernels.convolve(self._num, other._num), self._den * other._den
            )
        if isinstance(other, (int, Fraction, Rational)):
            c = _as_fraction(other)
            return Polynomial.from_integers(
                [n * c.numerator for n in self._num], self._den * c.denominator
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            c = _as_fraction(other)
            if c == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / c)
        return NotImplemented

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __call__(self, x) -> Fraction:
        """Exact evaluation at a rational point (Horner, integer arithmetic)."""
        x = _as_fraction(x)
        if not self._num:
            return Fraction(0)
        p, q = x.numerator, x.denominator
        acc = 0
        qpow = 1
        for n in reversed(self._num):
            acc = acc * p + n * qpow
            qpow *= q
        # acc / (q^deg * den); qpow overshot by one factor of q
        return Fraction(acc, (qpow // q) * self._den)

    evaluate = __call__

    def derivative(self) -> "Polynomial":
        return Polynomial.from_integers(
            [k * n for k, n in enumerate(self._num)][1:], self._den
        )

    # -- rendering --------------------------------------------------------

    def _terms(self):
        # (sign, |coef|, degree), descending degree, non-zero only
        for k in range(len(self._num) - 1, -1, -1):
            c = self[k]
            if c:
                yield (-1 if c < 0 else 1), abs(c), k

    def __str__(self) -> str:
        parts = []
        for sign, c, k in self._terms():
            if k == 0:
                body = format_rational(c)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if c == 1 else format_rational(c) + mono
            if not parts:
                parts.append(("-" if sign < 0 else "") + body)
            else:
                parts.append(("- " if sign < 0 else "+ ") + body)
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def latex(self) -> str:
        parts = []
        for sign, c, k in self._terms():
            if c.denominator == 1:
                cs = str(c.numerator)
            else:
                cs = rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
            if k == 0:
                body = cs
            else:
                mono = "x" if k == 1 else f"x^{{{k}}}"
                body = mono if c == 1 else cs + mono
            if not parts:
                parts.append(("-" if sign < 0 else "") + body)
            else:
                parts.append(("- " if sign < 0 else "+ ") + body)
        return " ".join(parts) if parts else "0"

    def to_json(self) -> list:
        """Ascending-degree list of rational strings."""
        return [format_rational(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Polynomial":
        return cls(parse_rational(s) for s in data)

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Inverse of ``str``; also accepts unspaced forms like ``3x-3x^2``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        if s[0] not in "+-":
            s = "+" + s
        coeffs: dict[int, Fraction] = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            m = _TERM_RE.match(body)
            if m is None or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            c = parse_rational(m.group(1)) if m.group(1) else Fraction(1)
            k = 0 if m.group(2) is None else int(m.group(3) or 1)
            coeffs[k] = coeffs.get(k, Fraction(0)) + (c if sign == "+" else -c)
        if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
            raise ValueError(f"cannot parse {text!r}")
        top = max(coeffs)
        return cls(coeffs.get(k, 0) for k in range(top + 1))


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


@lru_cache(maxsize=None)
def falling_factorial_poly(n: int) -> Polynomial:
    """(x)_n = x (x-1) ... (x-n+1), with (x)_0 = 1."""
    if n < 0:
        raise ValueError(f"falling factorial length must be >= 0, got {n}")
    if n == 0:
        return ONE
    return falling_factorial_poly(n - 1) * Polynomial((-(n - 1), 1))
