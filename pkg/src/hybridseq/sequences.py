"""Scalar and hybrid-valued (p,q)-Fibonacci, Lucas and Horadam sequences.

All sequences obey X_n = p·X_{n−1} + q·X_{n−2} and are extended to
negative indices through the backward step X_{n−2} = (X_n − p·X_{n−1})/q,
which is exact in rationals (and is why q = 0 is rejected).  For |q| = 1
every negative-index value is still an integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactarith import roots
from .hybrid import HybridNumber

SEQ_KINDS = ("fib", "lucas", "horadam")


@dataclass(frozen=True, slots=True)
class HoradamParams:
    """Recurrence parameters (p, q) and seed values (a, b) = (X_0, X_1)."""

    p: int
    q: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.q == 0:
            raise ValueError("q must be nonzero (backward recurrence divides by q)")
        if self.discriminant == 0:
            raise ValueError("p²+4q must be nonzero (distinct characteristic roots)")

    @property
    def discriminant(self) -> int:
        return self.p * self.p + 4 * self.q


def fib_params(p: int, q: int) -> HoradamParams:
    return HoradamParams(p, q, 0, 1)


def lucas_params(p: int, q: int) -> HoradamParams:
    return HoradamParams(p, q, 2, p)


def resolve_params(params: HoradamParams, kind: str) -> HoradamParams:
    """Specialize the seed values for the requested sequence kind."""
    if kind == "fib":
        return fib_params(params.p, params.q)
    if kind == "lucas":
        return lucas_params(params.p, params.q)
    if kind == "horadam":
        return params
    raise ValueError(f"unknown sequence kind {kind!r}; expected one of {SEQ_KINDS}")


def horadam(params: HoradamParams, n: int) -> Fraction:
    """The n-th sequence value for any signed index, computed iteratively."""
    lo, hi = Fraction(params.a), Fraction(params.b)
    if n >= 0:
        if n == 0:
            return lo
        for _ in range(n - 1):
            lo, hi = hi, params.p * hi + params.q * lo
        return hi
    for _ in range(-n):
        lo, hi = (hi - params.p * lo) / params.q, lo
    return lo


def fib(p: int, q: int, n: int) -> Fraction:
    """(p,q)-Fibonacci number: seeds (0, 1)."""
    return horadam(fib_params(p, q), n)


def lucas(p: int, q: int, n: int) -> Fraction:
    """(p,q)-Lucas number: seeds (2, p)."""
    return horadam(lucas_params(p, q), n)


def _mat_mul(x, y):
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def _mat_pow(m, n: int):
    result = (1, 0, 0, 1)
    while n:
        if n & 1:
            result = _mat_mul(result, m)
        m = _mat_mul(m, m)
        n >>= 1
    return result


def horadam_fast(params: HoradamParams, n: int) -> Fraction:
    """Same value as :func:`horadam` via companion-matrix binary powering.

    [X_{n+1}, X_n] = [[p, q], [1, 0]]ⁿ · [X_1, X_0]; negative indices use
    the exact rational inverse of the companion matrix.
    """
    if n >= 0:
        m = _mat_pow((params.p, params.q, 1, 0), n)
    else:
        inverse = (
            Fraction(0),
            Fraction(1),
            Fraction(1, params.q),
            Fraction(-params.p, params.q),
        )
        m = _mat_pow(inverse, -n)
    return Fraction(m[2] * params.b + m[3] * params.a)


class SeqCache:
    """Memoized two-sided sequence evaluator.

    Values are filled contiguously outward from indices 0 and 1, so every
    cached entry satisfies the recurrence exactly.  Instances are mutable
    and single-owner; use one per task (or the pure :func:`horadam` path)
    when evaluating concurrently.
    """

    def __init__(self, params: HoradamParams) -> None:
        self.params = params
        self._memo: dict[int, Fraction] = {0: Fraction(params.a), 1: Fraction(params.b)}
        self._lo = 0
        self._hi = 1

    def value(self, n: int) -> Fraction:
        memo = self._memo
        p, q = self.params.p, self.params.q
        while self._hi < n:
            self._hi += 1
            memo[self._hi] = p * memo[self._hi - 1] + q * memo[self._hi - 2]
        while self._lo > n:
            self._lo -= 1
            memo[self._lo] = (memo[self._lo + 2] - p * memo[self._lo + 1]) / q
        return memo[n]


def hybrid_seq(params: HoradamParams, kind: str, n: int) -> HybridNumber:
    """Hybrid-valued sequence element (X_n, X_{n+1}, X_{n+2}, X_{n+3})."""
    resolved = resolve_params(params, kind)
    cache = SeqCache(resolved)
    return HybridNumber(*(cache.value(n + k) for k in range(4)))


@dataclass(frozen=True, slots=True)
class ScalarIdentityReport:
    ok: bool
    checked: int
    first_failure: str | None


def verify_scalar_identities(params: HoradamParams, rmax: int) -> ScalarIdentityReport:
    """Audit the scalar identities the closed-form machinery relies on.

    For r in [0, rmax] checks, exactly:
      * F_{2r} = F_r · L_r
      * (p²+4q) · F_r² = L_{2r} − 2(−q)^r
      * F_{−r} = −(−q)^{−r} · F_r
      * L_r = rational part of α^r + β^r
    """
    p, q = params.p, params.q
    alpha, beta = roots(p, q)
    disc = params.discriminant
    checked = 0
    for r in range(rmax + 1):
        fr, lr = fib(p, q, r), lucas(p, q, r)
        neg_q_r = Fraction(-q) ** r
        failures = []
        if fib(p, q, 2 * r) != fr * lr:
            failures.append(f"F_2r != F_r*L_r at r={r}")
        if disc * fr * fr != lucas(p, q, 2 * r) - 2 * neg_q_r:
            failures.append(f"(p²+4q)F_r² != L_2r - 2(-q)^r at r={r}")
        if fib(p, q, -r) != -(Fraction(-q) ** (-r)) * fr:
            failures.append(f"F_-r != -(-q)^-r F_r at r={r}")
        if (alpha**r + beta**r).rational_part() != lr:
            failures.append(f"L_r != rational_part(α^r+β^r) at r={r}")
        checked += 4
        if failures:
            return ScalarIdentityReport(False, checked, failures[0])
    return ScalarIdentityReport(True, checked, None)
