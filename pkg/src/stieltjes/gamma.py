"""Generalized Stieltjes constants gamma_n(x) via four representations, their
difference and recurrence laws, the closed form at rational arguments, and the
alternating series for gamma_1.

The two production series share the summand f(u) = log^n u / u:

  series_b (shift-telescoped):
      gamma_n(x) = -log^(n+1) x/(n+1)
                   + sum_{k>=0} [f(k+x)
                        - (log^(n+1)(k+1+x) - log^(n+1)(k+x))/(n+1)]

  series_c (x only in the leading term):
      gamma_n(x) = sum_{k>=0} [f(k+x)
                        - (log^(n+1)(k+2) - log^(n+1)(k+1))/(n+1)]

Both tails reduce exactly to the Euler-Maclaurin lattice sum of f at K+x;
series_c carries the extra boundary piece
(log^(n+1)(K+1) - log^(n+1)(K+x))/(n+1).

The trapezoid-defect representation ("coffey") rewrites each panel defect with
integer-order incomplete gamma functions, using log^n u/u = Gamma(n+1, log u)
- n Gamma(n, log u); its tail telescopes to the same lattice sum minus half
the first summand.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import factorial, gcd

from mpmath import cospi, log, mp, mpf, pi, sinpi, workdps

from .core import (DomainError, SeriesValue, accelerate_alternating, comp_sum,
                   default_tol, working_dps)
from .logpoly import LogPoly, em_start_for, em_tail, pow_diff
from .reporting import VerifyReport
from .zeta import zeta_deriv0_const, zeta_deriv0_diff, zeta_prime_int, hurwitz_em

MAX_ORDER = 8
SERIES_B_MIN_X = mpf("1e-6")

METHODS = ("limit", "series_b", "series_c", "coffey")


@dataclass(frozen=True)
class RationalArg:
    """Reduced proper fraction 0 < p/q < 1."""

    p: int
    q: int

    def __post_init__(self):
        if not (0 < self.p < self.q):
            raise DomainError("RationalArg: need 0 < p < q")
        if gcd(self.p, self.q) != 1:
            raise DomainError("RationalArg: fraction must be reduced")

    def as_mpf(self) -> mpf:
        return mpf(self.p) / self.q


def _rounding_floor(value) -> mpf:
    return (abs(value) + 1) * mpf(2) ** (-mp.prec + 6)


def _tail_claim(tail, value) -> mpf:
    # the remainder can reach the first omitted correction itself, so pad it
    return 5 * tail.abs_err / 4 + _rounding_floor(value)


def _validate(n: int, x) -> mpf:
    if not 0 <= n <= MAX_ORDER:
        raise DomainError(f"gamma_n: order must be 0..{MAX_ORDER}")
    x = mpf(x)
    if not x > 0:
        raise DomainError("gamma_n: x must be > 0")
    return x


def gamma_n(n: int, x, method: str = "series_b", tol=None,
            limit_N: int | None = None, coffey_m: int = 0) -> SeriesValue:
    """gamma_n(x) by the chosen representation.

    limit: raw partial sum at caller-supplied limit_N, abs_err = inf (oracle
    and debugging use only).  coffey at n = 0 delegates to series_b, since the
    order-0 incomplete gamma would be the exponential integral; coffey_m sets
    how many leading terms are taken plainly before the panel rewrite starts.
    """
    x = _validate(n, x)
    if method not in METHODS:
        raise DomainError(f"gamma_n: unknown method {method!r}")
    if method == "limit":
        return _gamma_limit(n, x, limit_N or 10000)
    tol = default_tol() if tol is None else mpf(tol)
    if method == "series_b":
        if x < SERIES_B_MIN_X:
            raise DomainError(
                "gamma_n: series_b rejects x < 1e-6 (log^(n+1) x cancellation); "
                "use series_c")
        return _gamma_series_b(n, x, tol)
    if method == "series_c":
        return _gamma_series_c(n, x, tol)
    if n == 0:
        return _gamma_series_b(n, x, tol)
    if coffey_m < 0:
        raise DomainError("gamma_n: coffey_m must be >= 0")
    return _gamma_coffey(n, x, tol, coffey_m)


def _gamma_limit(n: int, x, N: int) -> SeriesValue:
    with workdps(mp.dps + 8):
        f = LogPoly.single(1, n, 1)
        partial = comp_sum(f(k + x) for k in range(N + 1))
        value = partial - log(N + x) ** (n + 1) / (n + 1)
    return SeriesValue(value, mp.inf, N + 1, "limit")


def _logpow_delta(n_lo, x_lo, n_hi, x_hi, q: int) -> mpf:
    """log^q(n_hi + x_hi) - log^q(n_lo + x_lo) without large-minus-large loss."""
    la = log(n_lo + x_lo)
    ratio = (mpf(n_hi) + x_hi) / (n_lo + x_lo)
    delta = log(ratio)
    return pow_diff(la, la + delta, delta, q)


def _gamma_series_b(n: int, x, tol) -> SeriesValue:
    q = n + 1
    with workdps(working_dps(tol)):
        f = LogPoly.single(1, n, 1)
        K = em_start_for(f, x, tol, start_min=32)
        terms = (f(k + x) - _logpow_delta(k, x, k + 1, x, q) / q for k in range(K))
        partial = comp_sum(terms)
        tail = em_tail(f, K + x)
        value = -log(x) ** q / q + partial + tail.value
        return SeriesValue(value, _tail_claim(tail, value), K, "series_b")


def _gamma_series_c(n: int, x, tol) -> SeriesValue:
    q = n + 1
    with workdps(working_dps(tol)):
        f = LogPoly.single(1, n, 1)
        # ladder offset from series_b so that route agreement compares tail
        # corrections at distinct points, not just the partial-sum algebra
        K = em_start_for(f, x, tol, start_min=48)
        terms = (f(k + x) - _logpow_delta(k + 1, 0, k + 2, 0, q) / q for k in range(K))
        partial = comp_sum(terms)
        tail = em_tail(f, K + x)
        value = partial + tail.value + _logpow_delta(K, x, K + 1, 0, q) / q
        return SeriesValue(value, _tail_claim(tail, value), K, "series_c")


def incgamma_int(n: int, t) -> mpf:
    """Gamma(n, t) = (n-1)! e^-t sum_{m<n} t^m/m! for integer n >= 1, t >= 0."""
    if n < 1:
        raise DomainError("incgamma_int: order 0 would be the exponential integral")
    t = mpf(t)
    if t < 0:
        raise DomainError("incgamma_int: t must be >= 0")
    from mpmath import exp
    inner = comp_sum(t ** m / factorial(m) for m in range(n))
    return factorial(n - 1) * exp(-t) * inner


def _gamma_coffey(n: int, x, tol, m: int = 0) -> SeriesValue:
    """Trapezoid-defect form with the incomplete-gamma panel rewrite:

        gamma_n(x) = sum_{k<=m} f(k+x) - log^(n+1)(m+x)/(n+1) - f(m+x)/2
                     + sum_{j>=m} D_j

    Panel defect over [j, j+1], a = j+x, b = j+1+x:
        D_j = (log^n b - log^n a) - (log^(n+1) b - log^(n+1) a)/(n+1)
              - (a + 1/2) (n dGn - dGn1),
    dGq = Gamma(q, log a) - Gamma(q, log b).  Panels with a < 1 fall back to
    the algebraically identical direct defect (f(a)+f(b))/2 - integral, since
    the incomplete gammas would need negative second argument.
    """
    q = n + 1
    with workdps(working_dps(tol)):
        f = LogPoly.single(1, n, 1)
        K = max(em_start_for(f, x, tol, start_min=32), m + 4)
        head = comp_sum(f(k + x) for k in range(m + 1))
        partial = comp_sum(_coffey_panel(n, j, x, q) for j in range(m, K))
        tail = em_tail(f, K + x)
        value = (head - log(m + x) ** q / q - f(m + x) / 2
                 + partial + tail.value - f(K + x) / 2)
        return SeriesValue(value, _tail_claim(tail, value), K, "coffey")


def _coffey_panel(n: int, j: int, x, q: int) -> mpf:
    a = j + x
    b = j + 1 + x
    la, lb = log(a), log(b)
    dlog = _logpow_delta(j, x, j + 1, x, q) / q
    if a >= 1:
        dGn = incgamma_int(n, la) - incgamma_int(n, lb)
        dGn1 = incgamma_int(n + 1, la) - incgamma_int(n + 1, lb)
        return (lb ** n - la ** n) - dlog - (a + mpf(1) / 2) * (n * dGn - dGn1)
    return (la ** n / a + lb ** n / b) / 2 - dlog


def gamma_diff(n: int, x, y, tol=None) -> SeriesValue:
    """gamma_n(x) - gamma_n(y) = sum_{k>=0} [f(k+x) - f(k+y)].

    The difference decays one order faster than either series alone.
    """
    x = _validate(n, x)
    y = _validate(n, y)
    tol = default_tol() if tol is None else mpf(tol)
    if x == y:
        return SeriesValue(mpf(0), mpf(0), 1, "difference")
    q = n + 1
    with workdps(working_dps(tol)):
        f = LogPoly.single(1, n, 1)
        K = em_start_for(f, min(x, y), tol, start_min=32)
        partial = comp_sum(f(k + x) - f(k + y) for k in range(K))
        tx = em_tail(f, K + x)
        ty = em_tail(f, K + y)
        boundary = -_logpow_delta(K, y, K, x, q) / q
        value = partial + tx.value - ty.value + boundary
        err = (5 * (tx.abs_err + ty.abs_err)) / 4 + _rounding_floor(value)
        return SeriesValue(value, err, K, "difference")


def gamma_recurrence_check(n: int, x, tol=None) -> VerifyReport:
    """Residual of gamma_n(1+x) - gamma_n(x) = -log^n x / x, both sides from
    series_b."""
    x = _validate(n, x)
    tol = default_tol() if tol is None else mpf(tol)
    t0 = time.perf_counter()
    lhs_hi = gamma_n(n, 1 + x, "series_b", tol)
    lhs_lo = gamma_n(n, x, "series_b", tol)
    with workdps(working_dps(tol)):
        rhs = -log(x) ** n / x
        residual = abs((lhs_hi.value - lhs_lo.value) - rhs)
    tolerance = lhs_hi.abs_err + lhs_lo.abs_err + 2 * tol
    return VerifyReport.build(
        check_id="gamma_recurrence",
        inputs={"n": n, "x": str(x)},
        residual=residual,
        tolerance=tolerance,
        elapsed=time.perf_counter() - t0,
    )


def gamma1_rational(r: RationalArg, tol=None) -> SeriesValue:
    """gamma_1(p/q) in closed form:

        gamma_1 + [gamma + log(2 pi q)][gamma + psi(p/q)]
        + sum_{j<q} cos(2 pi j p/q) zeta''(0, j/q)
        + pi sum_{j<q} sin(2 pi j p/q) log Gamma(j/q)
        + log^2 q / 2 + log q log(2 pi)

    zeta''(0, j/q) routes through the s = 0 derivative series plus zeta''(0)
    to stay independent of gamma_1 values at rationals.
    """
    if not isinstance(r, RationalArg):
        r = RationalArg(*r)
    tol = default_tol() if tol is None else mpf(tol)
    from .related import digamma, log_gamma
    p, q = r.p, r.q
    part = tol / (6 * q)
    g0 = gamma_n(0, 1, "series_b", part)
    g1 = gamma_n(1, 1, "series_b", part)
    zpp0 = zeta_deriv0_const(2, part)
    psi_pq = digamma(r.as_mpf(), part)
    with workdps(working_dps(tol)):
        err = g1.abs_err
        value = g1.value
        coeff = g0.value + log(2 * pi * q)
        value += coeff * (g0.value + psi_pq.value)
        err += abs(coeff) * (g0.abs_err + psi_pq.abs_err) \
            + abs(g0.value + psi_pq.value) * g0.abs_err
        terms = g1.terms_used
        for j in range(1, q):
            c = cospi(mpf(2 * j * p) / q)
            s = sinpi(mpf(2 * j * p) / q)
            if c:
                zd = zeta_deriv0_diff(1, mpf(j) / q, part)
                value += c * (zd.value + zpp0.value)
                err += abs(c) * (zd.abs_err + zpp0.abs_err)
                terms += zd.terms_used
            if s:
                lg = log_gamma(mpf(j) / q, part)
                value += pi * s * lg.value
                err += pi * abs(s) * lg.abs_err
                terms += lg.terms_used
        value += log(q) ** 2 / 2 + log(q) * log(2 * pi)
        return SeriesValue(value, err + _rounding_floor(value), terms, "rational_closed_form")


def gamma1_alt(tol=None) -> SeriesValue:
    """gamma_1 = sum_{n>=1} (-1)^n/(n+1) [H_n zeta(n+1) + zeta'(n+1)],
    summed by alternating-series acceleration.

    The bracket is positive for every n >= 1; a sign failure would indicate a
    zeta' defect, so it aborts loudly.
    """
    tol = default_tol() if tol is None else mpf(tol)
    with workdps(working_dps(tol)):
        digits = -mp.log10(tol)
        K = int(mp.ceil(digits * mp.log(10) / mp.log(3 + 2 * mp.sqrt(2)))) + 6
        hcache = [mpf(0)]
        for m in range(1, K + 2):
            hcache.append(hcache[-1] + mpf(1) / m)
        inner_tol = tol / (1000 * K)

        def a(k: int) -> mpf:
            n = k + 1
            z = hurwitz_em(n + 1, 1, inner_tol)
            zp = zeta_prime_int(n + 1, inner_tol)
            val = (hcache[n] * z.value + zp.value) / (n + 1)
            if not val > 0:
                raise ArithmeticError(
                    f"gamma1_alt: bracket H_n zeta + zeta' not positive at n={n}; "
                    "this indicates a zeta' defect")
            return val

        acc = accelerate_alternating(a, K)
        value = -acc.value
        # the combination weights sum to K/sqrt(2); each bracket carries up to
        # (H_K + 2) * inner_tol of claimed error
        propagated = K * mp.sqrt(2) / 2 * (hcache[K + 1] + 2) * inner_tol
        return SeriesValue(value, acc.abs_err + propagated + _rounding_floor(value),
                           acc.terms_used, "alternating")


def stieltjes_integral(n: int, u, tol=None) -> SeriesValue:
    """int_1^u gamma_n(x) dx = (-1)^(n+1)/(n+1) [zeta^(n+1)(0,u) - zeta^(n+1)(0)]."""
    if not 0 <= n <= 6:
        raise DomainError("stieltjes_integral: need 0 <= n <= 6")
    u = mpf(u)
    if not u > 0:
        raise DomainError("stieltjes_integral: u must be > 0")
    tol = default_tol() if tol is None else mpf(tol)
    zd = zeta_deriv0_diff(n, u, tol)
    sign = mpf((-1) ** (n + 1)) / (n + 1)
    return SeriesValue(sign * zd.value, zd.abs_err / (n + 1), zd.terms_used,
                       "antiderivative")
