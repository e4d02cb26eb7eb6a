"""Constant families adjacent to the Stieltjes constants: digamma and
log-gamma from their product-form series, the Gauss-type closed form for
psi(p/q), the von Mangoldt function and the eta constants, the delta
constants, and the generalized gamma functions whose logarithmic structure
produces gamma_k the way log Gamma produces gamma.

Series used here and their tails:

  log Gamma(x+1) = sum_{k>=1} [x log(1+1/k) - log(1+x/k)]
  psi(1+x)       = log(1+x) - sum_{k>=1} [1/(k+x) - log(1+1/(k+x))]
  log Gamma_k(x+1) = -gamma_k x
        + sum_{j>=1} [x log^k j / j - (log^(k+1)(j+x) - log^(k+1) j)/(k+1)]

  eta_n (series) = (-1)^n/n! sum_k [Lambda(k) log^n k / k
                        - (log^(n+1)(k+1) - log^(n+1) k)/(n+1)]
  eta_n (from gamma) = -[w^n] d/dw log(1 + sum_j (-1)^j gamma_j w^(j+1)/j!)

  delta_n = lim_N [sum_{k<=N} log^n k - int_1^N log^n - log^n N / 2],
            evaluated at finite N with Bernoulli endpoint corrections.

All summand tails are Euler-Maclaurin lattice corrections with closed-form
integrals over [K, inf).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, isqrt

from mpmath import cospi, log, mp, mpf, pi, sinpi, workdps

from .core import (DomainError, SeriesValue, accelerate_alternating, comp_sum,
                   default_tol, working_dps)
from .gamma import RationalArg, gamma_n
from .logpoly import (LogPoly, ShiftedLogSum, em_tail_shifted,
                      logpow_antiderivative, pow_diff)
from .zeta import hurwitz_em, zeta_prime_int

ETA_MAX_ORDER = 6
ETA_SERIES_MAX_K = 10 ** 8


def _rounding_floor(value) -> mpf:
    return (abs(value) + 1) * mpf(2) ** (-mp.prec + 6)


def _cot_pi(frac) -> mpf:
    """cot(pi * frac), exact where cos or sin of pi*frac is exact."""
    return cospi(frac) / sinpi(frac)


# ---------------------------------------------------------------------------
# von Mangoldt
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VonMangoldtTable:
    """Lambda(k) for k <= limit, stored as {prime power k: (prime, exponent)}."""

    limit: int
    powers: dict[int, tuple[int, int]]

    def value(self, k: int) -> mpf:
        if not 1 <= k <= self.limit:
            raise DomainError(f"VonMangoldtTable covers 1..{self.limit}")
        entry = self.powers.get(k)
        return log(entry[0]) if entry else mpf(0)

    def iter_powers(self):
        """(k, p, m) for every prime power k = p^m <= limit, ascending in k."""
        for k in sorted(self.powers):
            p, m = self.powers[k]
            yield k, p, m

    def prime_exponents(self) -> dict[int, int]:
        """p -> largest m with p^m <= limit (the lcm(1..limit) factorization)."""
        out: dict[int, int] = {}
        for _, p, m in self.iter_powers():
            out[p] = max(out.get(p, 0), m)
        return out


def _sieve(N: int) -> bytearray:
    flags = bytearray([1]) * (N + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(N) + 1):
        if flags[p]:
            flags[p * p::p] = b"\x00" * len(range(p * p, N + 1, p))
    return flags


def von_mangoldt(N: int) -> VonMangoldtTable:
    """Sieve-built exact table of Lambda on 1..N."""
    if N < 2:
        raise DomainError("von_mangoldt: need N >= 2")
    flags = _sieve(N)
    powers: dict[int, tuple[int, int]] = {}
    for p in range(2, N + 1):
        if flags[p]:
            pk, m = p, 1
            while pk <= N:
                powers[pk] = (p, m)
                pk *= p
                m += 1
    return VonMangoldtTable(limit=N, powers=powers)


# ---------------------------------------------------------------------------
# eta constants
# ---------------------------------------------------------------------------

class PowerSeries:
    """Dense truncated power series; just enough ring structure for the
    log-derivative extraction (add/mul/div/derivative/integrate/log)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = [mpf(c) for c in coeffs]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def derivative(self) -> "PowerSeries":
        return PowerSeries([(i + 1) * c for i, c in enumerate(self.coeffs[1:])])

    def integrate(self) -> "PowerSeries":
        return PowerSeries([mpf(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def mul(self, other: "PowerSeries", order: int) -> "PowerSeries":
        out = [mpf(0)] * (order + 1)
        for i, a in enumerate(self.coeffs):
            if i > order:
                break
            for j, b in enumerate(other.coeffs):
                if i + j > order:
                    break
                out[i + j] += a * b
        return PowerSeries(out)

    def div(self, other: "PowerSeries", order: int) -> "PowerSeries":
        if other.coeffs[0] == 0:
            raise DomainError("PowerSeries.div: divisor has zero constant term")
        out = [mpf(0)] * (order + 1)
        for i in range(order + 1):
            acc = self.coeffs[i] if i < len(self.coeffs) else mpf(0)
            for j in range(1, i + 1):
                if j < len(other.coeffs):
                    acc -= other.coeffs[j] * out[i - j]
            out[i] = acc / other.coeffs[0]
        return PowerSeries(out)

    def log(self, order: int) -> "PowerSeries":
        """Formal log for series with constant term 1: integral of f'/f."""
        if self.coeffs[0] != 1:
            raise DomainError("PowerSeries.log: needs constant term 1")
        return self.derivative().div(self, order - 1).integrate()


def eta(n: int, route: str = "from_gamma", K: int | None = None, tol=None) -> SeriesValue:
    """eta_n, the coefficients of -d/ds log[(s-1) zeta(s)] about s = 1.

    from_gamma: formal log-derivative of 1 + sum (-1)^j gamma_j w^(j+1)/j!,
    error propagated by perturbing each gamma_j by its claimed bound.
    series: von Mangoldt partial sum with abs_err = inf (conditionally
    convergent at prime-counting rate; no effective desk-scale bound exists).
    """
    if not 0 <= n <= ETA_MAX_ORDER:
        raise DomainError(f"eta: order must be 0..{ETA_MAX_ORDER}")
    if route == "from_gamma":
        return _eta_from_gamma(n, default_tol() if tol is None else mpf(tol))
    if route == "series":
        if K is None:
            raise DomainError("eta series route needs a term budget K")
        if K > ETA_SERIES_MAX_K:
            raise DomainError(f"eta: budget exceeds {ETA_SERIES_MAX_K}")
        return _eta_series(n, K)
    raise DomainError(f"eta: unknown route {route!r}")


def _eta_coeff_from(gammas: list, n: int) -> mpf:
    order = n + 2
    coeffs = [mpf(1)] + [mpf(0)] * order
    for j, g in enumerate(gammas):
        coeffs[j + 1] = (-1) ** j * g / factorial(j)
    F = PowerSeries(coeffs)
    return -F.log(order).derivative().coeffs[n]


def _eta_from_gamma(n: int, tol) -> SeriesValue:
    part = tol / (4 * (n + 3))
    vals = [gamma_n(j, 1, "series_b", part) for j in range(n + 2)]
    with workdps(working_dps(tol)):
        gammas = [v.value for v in vals]
        value = _eta_coeff_from(gammas, n)
        err = mpf(0)
        for j in range(len(gammas)):
            bumped = list(gammas)
            bumped[j] += vals[j].abs_err
            err += abs(_eta_coeff_from(bumped, n) - value)
        terms = sum(v.terms_used for v in vals)
        return SeriesValue(value, err + _rounding_floor(value), terms, "from_gamma")


def _eta_series(n: int, K: int) -> SeriesValue:
    """Partial sum to K of the von Mangoldt series; the log-power part
    telescopes to log^(n+1)(K+1)/(n+1) exactly."""
    table = von_mangoldt(K)
    with workdps(mp.dps + 8):
        acc = comp_sum(log(p) * log(k) ** n / k for k, p, _ in table.iter_powers())
        value = (-1) ** n * (acc - log(K + 1) ** (n + 1) / (n + 1)) / factorial(n)
    return SeriesValue(value, mp.inf, K, "mangoldt_series")


def mangoldt_gap_sums(n: int, checkpoints) -> dict[int, mpf]:
    """Partial sums of sum_{k<=N} (Lambda(k) - 1) log^n k / k at each
    checkpoint, the trend quantity behind (-1)^n n! eta_n - gamma_n."""
    pending = sorted(set(int(c) for c in checkpoints))
    if pending[0] < 1:
        raise DomainError("mangoldt_gap_sums: checkpoints must be >= 1")
    N = pending[-1]
    table = von_mangoldt(N)
    out: dict[int, mpf] = {}
    with workdps(mp.dps + 8):
        s = mpf(0)
        c = mpf(0)
        powers = table.powers
        for k in range(1, N + 1):
            entry = powers.get(k)
            lam = log(entry[0]) if entry else mpf(0)
            weight = log(k) ** n / k if n else mpf(1) / k
            term = (lam - 1) * weight
            y = term - c
            t = s + y
            c = (t - s) - y
            s = t
            if k == pending[0]:
                out[k] = s + c
                pending.pop(0)
                if not pending:
                    break
    return out


# ---------------------------------------------------------------------------
# delta constants
# ---------------------------------------------------------------------------

def delta(n: int, N: int = 10000, J: int = 4) -> SeriesValue:
    """delta_n = (-1)^n [zeta^(n)(0) + n!], by the endpoint-corrected
    evaluation of sum_{k<=N} log^n k - int_1^N log^n x dx - log^n N / 2."""
    if not 0 <= n <= 2:
        raise DomainError("delta: order must be 0, 1 or 2")
    if N < 10:
        raise DomainError("delta: need N >= 10")
    with workdps(mp.dps + 8):
        if n == 0:
            # every term of the corrected form cancels identically
            return SeriesValue(mpf(1) / 2, mpf(0), N, "em_corrected")
        partial = comp_sum(log(k) ** n for k in range(2, N + 1))
        integral = logpow_antiderivative(n, mpf(N)) - logpow_antiderivative(n, mpf(1))
        value = partial - integral - log(N) ** n / 2
        gprime = ShiftedLogSum([(1, 0, LogPoly.single(1, n, 0).diff())])
        correction, err = em_tail_shifted(gprime, 0, 0, N, J)
        value += correction
        return SeriesValue(value, 5 * err / 4 + _rounding_floor(value), N, "em_corrected")


# ---------------------------------------------------------------------------
# digamma / log gamma
# ---------------------------------------------------------------------------

def _choose_K(vprime: ShiftedLogSum, tol, start: int = 16) -> int:
    K = start
    while True:
        _, err = em_tail_shifted(vprime, 0, 0, K)
        if err < tol / 4:
            return K
        if K > 10 ** 6:
            raise DomainError("tolerance unreachable for this summand")
        K *= 4


def digamma(x, tol=None) -> SeriesValue:
    """psi(x) from psi(1+x) = log(1+x) - sum_{k>=1} [1/(k+x) - log(1+1/(k+x))],
    shifted back by psi(x) = psi(1+x) - 1/x."""
    x = mpf(x)
    if not x > 0:
        raise DomainError("digamma: x must be > 0")
    tol = default_tol() if tol is None else mpf(tol)
    with workdps(working_dps(tol)):
        inv = LogPoly.single(1, 0, 1)
        hprime = ShiftedLogSum([(1, x, inv.diff()), (-1, 1 + x, inv), (1, x, inv)])
        K = _choose_K(hprime, tol)
        partial = comp_sum(
            mpf(1) / (k + x) - log(1 + 1 / (k + x)) for k in range(1, K))
        h0 = mpf(1) / (K + x) - log(1 + 1 / (K + x))
        integral = (-log(K + x) + logpow_antiderivative(1, K + 1 + x)
                    - logpow_antiderivative(1, K + x))
        tail, err = em_tail_shifted(hprime, h0, integral, K)
        value = log(1 + x) - (partial + tail) - 1 / x
        return SeriesValue(value, 5 * err / 4 + _rounding_floor(value), K, "log_series")


def log_gamma(x, tol=None) -> SeriesValue:
    """log Gamma(x) from log Gamma(x+1) = sum_{k>=1} [x log(1+1/k) - log(1+x/k)],
    shifted back by log Gamma(x) = log Gamma(x+1) - log x."""
    x = mpf(x)
    if not x > 0:
        raise DomainError("log_gamma: x must be > 0")
    tol = default_tol() if tol is None else mpf(tol)
    with workdps(working_dps(tol)):
        series, err, K = _log_gamma1p(x, tol)
        value = series - log(x)
        return SeriesValue(value, 5 * err / 4 + _rounding_floor(value), K, "log_series")


def _log_gamma1p(x, tol):
    """log Gamma(x+1) by the product-form series; returns (value, err, K)."""
    inv = LogPoly.single(1, 0, 1)
    hprime = ShiftedLogSum([(x, 1, inv), (1 - x, 0, inv), (-1, x, inv)])
    K = _choose_K(hprime, tol, start=max(16, int(2 * abs(x)) + 2))
    partial = comp_sum(
        x * log(1 + mpf(1) / k) - log(1 + x / k) for k in range(1, K))
    h0 = x * log(1 + mpf(1) / K) - log(1 + x / K)
    integral = (logpow_antiderivative(1, K + x)
                - (1 - x) * logpow_antiderivative(1, mpf(K))
                - x * logpow_antiderivative(1, mpf(K + 1)))
    tail, err = em_tail_shifted(hprime, h0, integral, K)
    return partial + tail, err, K


def digamma_rational(r: RationalArg, tol=None) -> SeriesValue:
    """psi(p/q) by the Gauss-type closed form

        -gamma - log(2 pi q) - (pi/2) cot(pi p/q)
        - 2 sum_{j<q} cos(2 pi j p / q) log Gamma(j/q)

    cross-checked against the series route; disagreement beyond the combined
    claimed error raises, since it would indict a claimed bound.
    """
    if not isinstance(r, RationalArg):
        r = RationalArg(*r)
    tol = default_tol() if tol is None else mpf(tol)
    p, q = r.p, r.q
    part = tol / (2 * q + 2)
    g0 = gamma_n(0, 1, "series_b", part)
    with workdps(working_dps(tol)):
        value = -g0.value - log(2 * pi * q) - pi / 2 * _cot_pi(mpf(p) / q)
        err = g0.abs_err
        terms = g0.terms_used
        for j in range(1, q):
            c = cospi(mpf(2 * j * p) / q)
            if c:
                lg = log_gamma(mpf(j) / q, part)
                value -= 2 * c * lg.value
                err += 2 * abs(c) * lg.abs_err
                terms += lg.terms_used
        err += _rounding_floor(value)
        direct = digamma(r.as_mpf(), tol)
        if abs(value - direct.value) > err + direct.abs_err:
            raise ArithmeticError(
                "digamma_rational: closed form and series route disagree beyond "
                f"claimed bounds at {p}/{q}: gap {abs(value - direct.value)}")
        return SeriesValue(value, err, terms, "gauss_closed_form")


# ---------------------------------------------------------------------------
# generalized gamma functions
# ---------------------------------------------------------------------------

def dilcher_log_gamma_k(k: int, x, tol=None) -> SeriesValue:
    """log Gamma_k(x+1), the order-k generalization whose recurrence is
    Gamma_k(x+1) = exp(log^(k+1) x / (k+1)) Gamma_k(x):

        log Gamma_k(x+1) = -gamma_k x
            + sum_{j>=1} [x log^k j / j - (log^(k+1)(j+x) - log^(k+1) j)/(k+1)]
    """
    if not 0 <= k <= 4:
        raise DomainError("dilcher_log_gamma_k: order must be 0..4")
    x = mpf(x)
    if not x > -1:
        raise DomainError("dilcher_log_gamma_k: x must be > -1")
    tol = default_tol() if tol is None else mpf(tol)
    q = k + 1
    gk = gamma_n(k, 1, "series_b", tol / 4)
    with workdps(working_dps(tol)):
        if x == 0:
            return SeriesValue(mpf(0), mpf(0), 1, "log_series")
        fk = LogPoly.single(1, k, 1)
        wprime = ShiftedLogSum([(x, 0, fk.diff()), (-1, x, fk), (1, 0, fk)])
        K = _choose_K(wprime, tol, start=max(16, int(2 * abs(x)) + 2))
        partial = comp_sum(
            x * fk(j) - _lgk_delta(j, x, q) / q for j in range(1, K))
        w0 = x * fk(K) - _lgk_delta(K, x, q) / q
        integral = (-x * log(K) ** q / q
                    + (logpow_antiderivative(q, K + x)
                       - logpow_antiderivative(q, mpf(K))) / q)
        tail, err = em_tail_shifted(wprime, w0, integral, K)
        value = -gk.value * x + partial + tail
        err = 5 * err / 4 + abs(x) * gk.abs_err + _rounding_floor(value)
        return SeriesValue(value, err, K, "log_series")


def _lgk_delta(j: int, x, q: int) -> mpf:
    """log^q(j+x) - log^q j without large-minus-large loss."""
    lj = log(j)
    d = log(1 + x / j)
    return pow_diff(lj, lj + d, d, q)


def dilcher_power_series(x, tol=None) -> SeriesValue:
    """log Gamma_1(x+1) + gamma_1 x as the power series

        sum_{n>=1} (-1)^n/(n+1) [H_n zeta(n+1) + zeta'(n+1)] x^(n+1)

    for |x| <= 1; the boundary x = 1 goes through alternating-series
    acceleration.  x = -1 is outside the domain (log Gamma_1(0) diverges).
    """
    x = mpf(x)
    if abs(x) > 1:
        raise DomainError("dilcher_power_series: needs |x| <= 1")
    if x == -1:
        raise DomainError("dilcher_power_series: diverges at x = -1")
    tol = default_tol() if tol is None else mpf(tol)
    if x == 0:
        return SeriesValue(mpf(0), mpf(0), 1, "power_series")
    with workdps(working_dps(tol)):
        hcache = [mpf(0)]
        K = _cvz_terms(tol)
        inner_tol = tol / (1000 * K)

        def bracket(n: int) -> mpf:
            while len(hcache) <= n:
                hcache.append(hcache[-1] + mpf(1) / len(hcache))
            z = hurwitz_em(n + 1, 1, inner_tol)
            zp = zeta_prime_int(n + 1, inner_tol)
            return (hcache[n] * z.value + zp.value) / (n + 1)

        if abs(x) == 1:
            acc = accelerate_alternating(lambda kk: bracket(kk + 1), K)
            value = -acc.value
            propagated = K * mp.sqrt(2) / 2 * (mp.log(K + 2) + 3) * inner_tol
            return SeriesValue(value, acc.abs_err + propagated + _rounding_floor(value),
                               acc.terms_used, "power_series")
        total = mpf(0)
        n = 1
        while True:
            term = (-1) ** n * bracket(n) * x ** (n + 1)
            total += term
            # the bracket decays like log n / n, so x^(n+1) rules the tail
            bound = abs(term) * abs(x) / (1 - abs(x))
            if abs(term) < tol / 8 and bound < tol / 2:
                return SeriesValue(total, bound + tol / 8 + _rounding_floor(total),
                                   n, "power_series")
            if n > 4000:
                raise DomainError("dilcher_power_series: slow convergence; |x| too close to 1")
            n += 1


def _cvz_terms(tol) -> int:
    digits = -mp.log10(mpf(tol))
    return int(mp.ceil(digits * mp.log(10) / mp.log(3 + 2 * mp.sqrt(2)))) + 6
