"""Exact verification of the Changhee/ODE identities.

Every check compares two independently computed exact objects
(polynomials or truncated series) and records pass/fail.  A failed check
carries a witness naming the first coefficient where the two sides differ.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from changhee.algebra import Polynomial, binomial_general, falling_factorial_scalar, format_rational
from changhee.coeffs import coeff_closed_form, coeff_table
from changhee.sequences import (
    changhee_poly,
    changhee_via_stirling,
    euler_poly,
    euler_via_stirling,
    stirling1_row,
    stirling2_row,
)
from changhee.series import (
    TruncatedSeries,
    series_from_sequence,
    ts_2F,
    ts_compose,
    ts_derivative,
    ts_expm1,
    ts_F,
    ts_log1p,
    ts_mul,
    ts_shifted_pow,
)

__all__ = [
    "Check",
    "VerificationReport",
    "SUITES",
    "run_suites",
    "theorem_2_2_rhs",
    "verify_derivative_shift",
    "verify_gf_composition",
    "verify_stirling",
    "verify_theorem_2_1",
    "verify_theorem_2_2",
]

VARIANTS = ("corrected", "as_printed")


@dataclass(frozen=True)
class Check:
    identity: str
    parameters: dict
    passed: bool
    witness: dict | None = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failed check must carry a witness")

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "parameters": dict(self.parameters),
            "status": "pass" if self.passed else "fail",
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def add(self, identity: str, parameters: dict, lhs, rhs) -> Check:
        witness = _witness(lhs, rhs)
        check = Check(identity, parameters, witness is None, witness)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    def summary(self) -> str:
        n_fail = len(self.failures)
        lines = [f"{len(self.checks)} checks, {len(self.checks) - n_fail} passed, {n_fail} failed"]
        lines.extend(self.notes)
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps([c.to_json() for c in self.checks], indent=2) + "\n"


def _poly_witness(lhs: Polynomial, rhs: Polynomial) -> dict | None:
    if lhs == rhs:
        return None
    top = max(len(lhs.numerators), len(rhs.numerators))
    for d in range(top):
        if lhs[d] != rhs[d]:
            return {
                "x_degree": d,
                "lhs_coefficient": format_rational(lhs[d]),
                "rhs_coefficient": format_rational(rhs[d]),
                "lhs": str(lhs),
                "rhs": str(rhs),
            }
    raise AssertionError("unequal polynomials with equal coefficients")


def _witness(lhs, rhs) -> dict | None:
    if isinstance(lhs, TruncatedSeries):
        k = lhs.first_difference(rhs)
        if k is None:
            return None
        return {"t_power": k, **_poly_witness(lhs[k], rhs[k])}
    if not isinstance(lhs, Polynomial):
        lhs = Polynomial((lhs,))
    if not isinstance(rhs, Polynomial):
        rhs = Polynomial((rhs,))
    return _poly_witness(lhs, rhs)


# -- derivative identity for F -------------------------------------------

def verify_theorem_2_1(n_max: int, T: int, coefficient: Callable = coeff_closed_form) -> VerificationReport:
    """N-fold derivative of F against sum_i a_i(N,x) (1+t)^-i (2+t)^(i-N) F.

    Both sides are compared as truncated series up to t^(T-N), each
    coefficient as a polynomial identity in x.
    """
    if T < n_max + 2:
        raise ValueError(f"order T={T} must be at least n_max + 2 = {n_max + 2}")
    report = VerificationReport()
    F = ts_F(T)
    lhs = F
    for N in range(n_max + 1):
        if N:
            lhs = ts_derivative(lhs)
        weights = TruncatedSeries.zero(T)
        for i in range(N + 1):
            term = ts_mul(ts_shifted_pow(1, -i, T), ts_shifted_pow(2, i - N, T))
            weights = weights + term * coefficient(i, N)
        rhs = ts_mul(weights, F).truncate(T - N)
        report.add("thm21", {"N": N, "order": T - N}, lhs, rhs)
    return report


def verify_derivative_shift(n_max: int, k_max: int) -> VerificationReport:
    """k! [t^k] 2 F^(N) == Ch_{N+k}(x)."""
    report = VerificationReport()
    D = ts_2F(n_max + k_max)
    for N in range(n_max + 1):
        if N:
            D = ts_derivative(D)
        for k in range(k_max + 1):
            report.add("shift", {"N": N, "k": k}, D[k] * math.factorial(k), changhee_poly(N + k))
    return report


# -- Changhee expansion via the coefficient functions ----------------------

def _rhs_weight(i: int, N: int, k: int, p: int, exp_shift: int) -> Fraction:
    # sum over l + m = k - p of (-1)^(l+m) 2^(i-N-m+shift) C(i+l-1,l) C(N+m-i-1,m) / p!
    acc = Fraction(0)
    for l in range(k - p + 1):
        m = k - p - l
        b = binomial_general(i + l - 1, l) * binomial_general(N + m - i - 1, m)
        if b:
            acc += (-1) ** (l + m) * b * Fraction(2) ** (i - N - m + exp_shift)
    return acc / math.factorial(p)


def _exp_shift(variant: str) -> int:
    if variant == "corrected":
        return 0
    if variant in ("as_printed", "printed"):
        return 1
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def theorem_2_2_rhs(k: int, N: int, variant: str = "corrected", coefficient: Callable | None = None) -> Polynomial:
    """k! sum_i a_i(N,x) sum_{l+m+p=k} (-1)^(l+m) 2^E / p! C(i+l-1,l) C(N+m-i-1,m) Ch_p(x).

    ``E = i - N - m`` for ``variant="corrected"`` and ``i - N - m + 1`` for
    ``"as_printed"``.  ``coefficient(i, N)`` supplies a_i(N, x) and defaults
    to the recurrence table.
    """
    if k < 0 or N < 0:
        raise ValueError("k and N must be >= 0")
    shift = _exp_shift(variant)
    if coefficient is None:
        table = coeff_table(N)
        coefficient = lambda i, n: table[n, i]  # noqa: E731
    total = Polynomial()
    for i in range(N + 1):
        inner = Polynomial()
        for p in range(k + 1):
            w = _rhs_weight(i, N, k, p, shift)
            if w:
                inner = inner + changhee_poly(p) * w
        total = total + coefficient(i, N) * inner
    return total * math.factorial(k)


def _theorem_2_2_rhs_multinomial(k: int, N: int, variant: str = "corrected") -> Polynomial:
    # second displayed form: multinomial(k; l,m,p) (i+l-1)_l (N+m-i-1)_m
    shift = _exp_shift(variant)
    table = coeff_table(N)
    total = Polynomial()
    for i in range(N + 1):
        for l in range(k + 1):
            for m in range(k - l + 1):
                p = k - l - m
                c = (
                    (-1) ** (l + m)
                    * Fraction(2) ** (i - N - m + shift)
                    * (math.factorial(k) // (math.factorial(l) * math.factorial(m) * math.factorial(p)))
                    * falling_factorial_scalar(i + l - 1, l)
                    * falling_factorial_scalar(N + m - i - 1, m)
                )
                if c:
                    total = total + table[N, i] * changhee_poly(p) * c
    return total


ERRATUM_NOTE = (
    "thm22: with the printed power 2^(i-N-m+1) the right-hand side is exactly "
    "2 * Ch_(k+N)(x); the power 2^(i-N-m) gives Ch_(k+N)(x)."
)


def verify_theorem_2_2(k_max: int, n_max: int, total_max: int | None = None, variant: str = "corrected") -> VerificationReport:
    """Check the Changhee expansion for every k <= k_max, N <= n_max.

    With ``variant="corrected"`` two identities are checked per pair:
    ``thm22-corrected`` (RHS with 2^(i-N-m) equals Ch_{k+N}) and
    ``thm22-printed-double`` (the printed RHS is exactly twice that).
    ``variant="as_printed"`` instead checks the printed RHS against
    Ch_{k+N} directly, which fails for every pair.  Pairs with
    ``k + N > total_max`` are skipped when ``total_max`` is given.
    """
    _exp_shift(variant)
    report = VerificationReport()
    for N in range(n_max + 1):
        for k in range(k_max + 1):
            if total_max is not None and k + N > total_max:
                continue
            params = {"k": k, "N": N}
            target = changhee_poly(k + N)
            if variant == "corrected":
                corrected = theorem_2_2_rhs(k, N, "corrected")
                printed = theorem_2_2_rhs(k, N, "as_printed")
                report.add("thm22-corrected", params, corrected, target)
                report.add("thm22-printed-double", params, printed, corrected * 2)
            else:
                report.add("thm22-printed", params, theorem_2_2_rhs(k, N, "as_printed"), target)
    if variant == "corrected" and report.ok:
        report.notes.append(ERRATUM_NOTE)
    return report


# -- Stirling transforms -----------------------------------------------------

def verify_stirling(n_max: int) -> VerificationReport:
    report = VerificationReport()
    for m in range(n_max + 1):
        report.add("changhee-via-stirling1", {"m": m}, changhee_via_stirling(m), changhee_poly(m))
    for n in range(n_max + 1):
        report.add("euler-via-stirling2", {"n": n}, euler_via_stirling(n), euler_poly(n))
    for n in range(n_max + 1):
        s1 = stirling1_row(n)
        for m in range(n_max + 1):
            dot = sum(s1[k] * (stirling2_row(k)[m] if m <= k else 0) for k in range(n + 1))
            report.add("stirling-orthogonality", {"n": n, "m": m}, dot, int(n == m))
    return report


def verify_gf_composition(T: int) -> VerificationReport:
    """Euler EGF o log(1+t) == Changhee EGF, and Changhee EGF o (e^t - 1) == Euler EGF."""
    if T < 2:
        raise ValueError("composition check needs order T >= 2")
    report = VerificationReport()
    euler_egf = series_from_sequence([euler_poly(n) for n in range(T + 1)])
    changhee_egf = series_from_sequence([changhee_poly(n) for n in range(T + 1)])
    report.add("euler-o-log1p", {"order": T}, ts_compose(euler_egf, ts_log1p(T)), changhee_egf)
    report.add("changhee-o-expm1", {"order": T}, ts_compose(changhee_egf, ts_expm1(T)), euler_egf)
    return report


# -- suite driver -------------------------------------------------------------

SUITES = ("thm21", "thm22", "stirling", "shift", "composition")


def run_suites(suites, n_max: int = 8, k_max: int = 8, order: int = 16, variant: str = "corrected") -> VerificationReport:
    """Run the named suites in canonical order and merge their reports."""
    suites = SUITES if "all" in suites else tuple(s for s in SUITES if s in suites)
    if "thm21" in suites and order < n_max + 2:
        raise ValueError(f"--order must be at least n_max + 2 = {n_max + 2} for thm21")
    if "composition" in suites and order < 2:
        raise ValueError("--order must be at least 2 for composition")
    report = VerificationReport()
    for suite in suites:
        if suite == "thm21":
            report.extend(verify_theorem_2_1(n_max, order))
        elif suite == "thm22":
            report.extend(verify_theorem_2_2(k_max, n_max, variant=variant))
        elif suite == "stirling":
            report.extend(verify_stirling(n_max))
        elif suite == "shift":
            report.extend(verify_derivative_shift(n_max, k_max))
        elif suite == "composition":
            report.extend(verify_gf_composition(order))
    return report
