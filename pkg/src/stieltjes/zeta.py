"""Hurwitz and Riemann zeta values on the real line, their s-derivatives at
s = 0 expressed as differences against x = 1, and zeta'(s) for s > 1.

Two independent routes to zeta(s, x) are provided:

* hurwitz_em: truncated power sum plus integral and Bernoulli endpoint
  corrections,
      zeta(s,x) = sum_{k<N} (k+x)^-s + (N+x)^(1-s)/(s-1) + (N+x)^-s / 2
                  + sum_j B_2j/(2j)! (s)_(2j-1) (N+x)^(-s-2j+1) + R,
  valid for Re s > -(2J-1); the workhorse and in-package reference.

* hurwitz_hasse: the globally convergent double sum
      zeta(s,x) = 1/(s-1) sum_n 1/(n+1) sum_k C(n,k) (-1)^k (k+x)^(1-s).
  The inner alternating sums are forward differences computed by a streamed
  difference triangle; roundoff grows like 2^n, so the working precision is
  raised with the term budget.  Convergence is polynomial of order x, which
  makes small tolerances at small x genuinely unreachable; the routine raises
  rather than fabricate a bound.

The derivative differences zeta^(k+1)(0,x) - zeta^(k+1)(0) come from the
logarithmic series

    (-1)^(k+1) [zeta^(k+1)(0,x) - zeta^(k+1)(0)]
        = log^(k+1) x
          + sum_{n>=1} [log^(k+1)(n+x) - log^(k+1) n
                        - x (log^(k+1)(n+1) - log^(k+1) n)]

accelerated by Euler-Maclaurin corrections on the summand.
"""

from __future__ import annotations

from math import factorial

from mpmath import log, mp, mpf, pi, workdps

from .core import (ConvergenceError, DomainError, SeriesValue, comp_sum,
                   default_tol, working_dps)
from .logpoly import (LogPoly, ShiftedLogSum, bernoulli_mpf, em_tail_shifted,
                      logpow_antiderivative, pow_diff)

POLE_EXCLUSION = mpf("1e-6")


def _rounding_floor(value) -> mpf:
    return (abs(value) + 1) * mpf(2) ** (-mp.prec + 6)


def _validate_x(x) -> mpf:
    x = mpf(x)
    if not x > 0:
        raise DomainError("the shift x must be > 0")
    return x


def hurwitz_em(s, x, tol=None, J: int = 6) -> SeriesValue:
    """zeta(s, x) by power sum plus Euler-Maclaurin corrections."""
    s = mpf(s)
    x = _validate_x(x)
    if s == 1:
        raise DomainError("hurwitz_em: pole at s = 1")
    if s <= -(2 * J - 1):
        raise DomainError(f"hurwitz_em: needs s > -(2J-1) = {-(2 * J - 1)}")
    tol = default_tol() if tol is None else mpf(tol)
    with workdps(working_dps(tol)):
        N = max(8, int(abs(s)) + 2 * J + 2)
        while True:
            a = N + x
            err = _em_zeta_correction_err(s, a, J)
            if err < tol / 2 or N > 10 ** 7:
                break
            N *= 4
        if err > tol / 2:
            raise ConvergenceError("hurwitz_em: tolerance unreachable")
        terms = [(k + x) ** (-s) for k in range(N)]
        total = comp_sum(terms)
        boundary = a ** (1 - s) / (s - 1)
        total += boundary + a ** (-s) / 2
        for j in range(1, J + 1):
            rf = _rising(s, 2 * j - 1)
            total += bernoulli_mpf(2 * j) / factorial(2 * j) * rf * a ** (-s - 2 * j + 1)
        # for s < 0 the power sum dwarfs the result; dust scales with it
        scale = max(abs(terms[-1]), abs(boundary), abs(total)) + 1
        return SeriesValue(total, err + scale * mpf(2) ** (-mp.prec + 8), N, "em")


def _rising(s, m: int) -> mpf:
    out = mpf(1)
    for i in range(m):
        out *= s + i
    return out


def _em_zeta_correction_err(s, a, J: int) -> mpf:
    rf = _rising(s, 2 * J + 1)
    return abs(bernoulli_mpf(2 * J + 2) / factorial(2 * J + 2) * rf * a ** (-s - 2 * J - 1))


def hurwitz_hasse(s, x, tol=None, n_cap: int = 4000) -> SeriesValue:
    """zeta(s, x) by the globally convergent binomial double sum.

    Stops once five consecutive outer terms fall below tol/10 and the
    tail extrapolation (terms decay like n^-(x+1)) is within tol.
    """
    s = mpf(s)
    x = _validate_x(x)
    if abs(s - 1) <= POLE_EXCLUSION:
        raise DomainError("hurwitz_hasse: s within pole exclusion of 1")
    tol = default_tol() if tol is None else mpf(tol)
    base = working_dps(tol)
    budget = 64
    while True:
        # difference triangle roundoff grows like 2^n
        with workdps(base + int(0.302 * budget) + 10):
            result = _hasse_attempt(s, x, tol, budget)
        if result is not None:
            return result
        if budget >= n_cap:
            raise ConvergenceError(
                f"hurwitz_hasse: tol {tol} unreachable within {n_cap} outer terms "
                "(convergence is polynomial of order x; use hurwitz_em or loosen tol)")
        budget = min(2 * budget, n_cap)


def _hasse_attempt(s, x, tol, budget):
    prev: list[mpf] = []
    total = mpf(0)
    consec = 0
    scale = abs(s - 1)
    n = 0
    while n < budget:
        new = [(n + x) ** (1 - s)]
        for m in range(1, len(prev) + 1):
            new.append(prev[m - 1] - new[m - 1])
        term = new[-1] / (n + 1)
        total += term
        tail_est = 2 * abs(term) * max(mpf(n) / x, 1)
        if abs(term) < scale * tol / 10:
            consec += 1
            if consec >= 5 and tail_est <= scale * tol:
                value = total / (s - 1)
                return SeriesValue(value, tail_est / scale + _rounding_floor(value),
                                   n + 1, "hasse")
        else:
            consec = 0
        prev = new
        n += 1
    return None


def zeta_deriv0_diff(k: int, x, tol=None, J: int = 4) -> SeriesValue:
    """zeta^(k+1)(0, x) - zeta^(k+1)(0) from the logarithmic series."""
    if not 0 <= k <= 6:
        raise DomainError("zeta_deriv0_diff: need 0 <= k <= 6")
    x = _validate_x(x)
    tol = default_tol() if tol is None else mpf(tol)
    q = k + 1
    with workdps(working_dps(tol) + 8):
        gprime = LogPoly.single(q, q - 1, 1)
        vprime = ShiftedLogSum([(1, x, gprime), (x - 1, 0, gprime), (-x, 1, gprime)])
        K = 32
        while True:
            _, err = em_tail_shifted(vprime, 0, 0, K, J)
            if err < tol / 4 or K > 10 ** 6:
                break
            K *= 4
        if err > tol / 4:
            raise ConvergenceError("zeta_deriv0_diff: tolerance unreachable")
        lx = log(x)
        total = lx ** q + comp_sum(_deriv_summand(n, x, q) for n in range(1, K))
        v0 = _deriv_summand(K, x, q)
        integral = (-logpow_antiderivative(q, K + x)
                    + (1 - x) * logpow_antiderivative(q, mpf(K))
                    + x * logpow_antiderivative(q, mpf(K + 1)))
        tail, err = em_tail_shifted(vprime, v0, integral, K, J)
        total += tail
        value = (-1) ** (k + 1) * total
        # remainders can reach the first omitted correction; pad the claim
        return SeriesValue(value, 5 * err / 4 + _rounding_floor(value), K, "log_series")


def _deriv_summand(n: int, x, q: int) -> mpf:
    """log^q(n+x) - log^q n - x (log^q(n+1) - log^q n), cancellation-free."""
    ln = log(n)
    d1 = log(1 + x / n)
    d2 = log(1 + mpf(1) / n)
    return pow_diff(ln, ln + d1, d1, q) - x * pow_diff(ln, ln + d2, d2, q)


def zeta_deriv0_const(n: int, tol=None) -> SeriesValue:
    """zeta^(n)(0) for n <= 2.

    zeta(0) = -1/2; zeta'(0) = -log(2 pi)/2; zeta''(0) is assembled from the
    Stieltjes constants: gamma_1 + gamma^2/2 - pi^2/24 - log^2(2 pi)/2.
    """
    tol = default_tol() if tol is None else mpf(tol)
    if n == 0:
        return SeriesValue(mpf(-1) / 2, mpf(0), 1, "closed_form")
    if n == 1:
        value = -log(2 * pi) / 2
        return SeriesValue(value, _rounding_floor(value), 1, "closed_form")
    if n == 2:
        from .gamma import gamma_n  # lazy: gamma imports this module
        g0 = gamma_n(0, 1, tol=tol / 8)
        g1 = gamma_n(1, 1, tol=tol / 8)
        with workdps(working_dps(tol)):
            value = (g1.value + g0.value ** 2 / 2 - pi ** 2 / 24
                     - log(2 * pi) ** 2 / 2)
            err = g1.abs_err + abs(g0.value) * 2 * g0.abs_err + _rounding_floor(value)
        return SeriesValue(value, err, g0.terms_used + g1.terms_used, "closed_form")
    raise DomainError("zeta_deriv0_const: only n <= 2 has a provided constant")


def zeta_prime_int(s, tol=None, J: int = 4) -> SeriesValue:
    """zeta'(s) = -sum_{k>=2} log k / k^s for s > 1, tail-accelerated.

    Derivatives of log(t) t^-s follow (a log t + b) t^(-s-m) with
    a' = -(s+m) a, b' = a - (s+m) b, and the tail integral is
    K^(1-s) [log K/(s-1) + 1/(s-1)^2].
    """
    s = mpf(s)
    if not s > 1:
        raise DomainError("zeta_prime_int: needs s > 1")
    tol = default_tol() if tol is None else mpf(tol)
    with workdps(working_dps(tol)):
        K = 8
        while True:
            err = _zp_tail_err(s, K, J)
            if err < tol / 2 or K > 10 ** 6:
                break
            K *= 2
        if err > tol / 2:
            raise ConvergenceError("zeta_prime_int: tolerance unreachable")
        partial = comp_sum(log(k) * k ** (-s) for k in range(2, K))
        Km = mpf(K)
        tail = Km ** (1 - s) * (log(Km) / (s - 1) + (s - 1) ** (-2))
        tail += log(Km) * Km ** (-s) / 2
        a, b = mpf(1), mpf(0)
        m = 0
        for j in range(1, J + 1):
            while m < 2 * j - 1:
                a, b = -(s + m) * a, a - (s + m) * b
                m += 1
            tail -= bernoulli_mpf(2 * j) / factorial(2 * j) * (a * log(Km) + b) * Km ** (-s - m)
        value = -(partial + tail)
        return SeriesValue(value, 5 * err / 4 + _rounding_floor(value), K, "log_series")


def _zp_tail_err(s, K, J: int) -> mpf:
    a, b = mpf(1), mpf(0)
    for m in range(2 * J + 1):
        a, b = -(s + m) * a, a - (s + m) * b
    Km = mpf(K)
    return abs(bernoulli_mpf(2 * J + 2) / factorial(2 * J + 2)
               * (a * log(Km) + b) * Km ** (-s - 2 * J - 1))
