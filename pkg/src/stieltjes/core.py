"""Precision substrate: working-precision policy, compensated summation,
series-value container, bisection, and alternating-series acceleration.

All real arithmetic runs on mpmath ``mpf`` values.  Public entry points accept
a target tolerance and run at a working precision of at least twice the
requested number of digits, so results carry genuine (not optimistic) error
claims.  Every function here is a pure function of its arguments; repeated
calls with identical inputs and precision produce bit-identical results.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf, fadd, sqrt

GUARD_DIGITS = 8


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class ConvergenceError(ArithmeticError):
    """The requested tolerance cannot be met within the allowed budget."""


def default_tol() -> mpf:
    """Half the ambient precision, the safe default for series truncation."""
    return mpf(10) ** (-(mp.dps // 2))


def tol_digits(tol) -> int:
    """Decimal digits a tolerance of ``tol`` asks for (ceil of -log10)."""
    tol = mpf(tol)
    if not tol > 0:
        raise DomainError("tolerance must be positive")
    d = -mp.log10(tol)
    return max(1, int(mp.ceil(d)))


def working_dps(tol) -> int:
    """Working precision for a target tolerance: at least 2x the requested
    digits, never below the ambient setting, plus guard digits for internal
    cancellation."""
    return max(mp.dps, 2 * tol_digits(tol)) + GUARD_DIGITS


@dataclass(frozen=True)
class SeriesValue:
    """Result of a series evaluation.

    abs_err is a claimed bound on truncation plus tail error; mp.inf marks
    routes for which no effective bound exists (raw limit partial sums,
    conditionally convergent sums).
    """

    value: mpf
    abs_err: mpf
    terms_used: int
    method: str

    def __post_init__(self):
        if not (self.abs_err >= 0):
            raise DomainError("abs_err must be >= 0")
        if self.terms_used < 1:
            raise DomainError("terms_used must be >= 1")


def comp_sum(terms) -> mpf:
    """Kahan-Babuska-Neumaier compensated sum, in the given order.

    Each addition's rounding error is recovered exactly (round-to-nearest
    binary arithmetic) and accumulated; the final sum + compensation is
    combined without rounding, so the result can carry more bits than the
    working precision.  Empty input sums to 0.
    """
    s = mpf(0)
    c = mpf(0)
    for x in terms:
        x = mpf(x)
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
    if c == 0:
        return s
    return fadd(s, c, exact=True)


def harmonic(n: int) -> mpf:
    """H_n = sum_{k=1..n} 1/k by compensated summation in ascending order."""
    if n < 1:
        raise DomainError("harmonic: n must be >= 1")
    one = mpf(1)
    return comp_sum(one / k for k in range(1, n + 1))


def find_root_bisect(f, lo, hi, tol) -> mpf:
    """Deterministic bisection; returns the final midpoint.

    Requires a sign change: f(lo) * f(hi) < 0.
    """
    lo, hi, tol = mpf(lo), mpf(hi), mpf(tol)
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise DomainError("find_root_bisect: endpoints do not bracket a root")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def accelerate_alternating(a, K: int) -> SeriesValue:
    """Chebyshev-weighted estimate of sum_{k>=0} (-1)^k a_k (Cohen,
    Rodriguez Villegas, Zagier).

    ``a`` maps k to a_k >= 0; convergence at rate (3+sqrt 8)^-K presumes the
    terms are (close to) totally monotone, which is the caller's
    responsibility.  The abs_err is the heuristic 3*(3+sqrt 8)^-K times the
    absolute weighted sum.
    """
    if K < 4:
        raise DomainError("accelerate_alternating: need K >= 4")
    d = (3 + 2 * sqrt(2)) ** K
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    wsum = mpf(0)
    for k in range(K):
        c = b - c
        ak = mpf(a(k))
        s += c * ak
        wsum += abs(c * ak)
        b = (k + K) * (k - K) * b / ((k + mpf(1) / 2) * (k + 1))
    rate = (3 + 2 * sqrt(2)) ** (-K)
    return SeriesValue(value=s / d, abs_err=3 * rate * wsum / d,
                       terms_used=K, method="cvz")
