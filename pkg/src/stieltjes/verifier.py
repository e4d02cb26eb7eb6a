"""Executable identity suite: every structural identity the library's series
rest on becomes a residual check with an explicit tolerance.

Cross-representation checks use the sum of the claimed error bounds (plus any
stated slack) as their tolerance, so a failure indicts a claimed bound rather
than merely a value.
"""

from __future__ import annotations

import random
import time

from mpmath import log, mp, mpf, pi, workdps

from .core import DomainError, comp_sum, find_root_bisect
from .gamma import gamma_n
from .logpoly import (LogPoly, ShiftedLogSum, em_tail, em_tail_shifted,
                      logpow_antiderivative)
from .quadrature import quad_gl
from .related import digamma, log_gamma, _cot_pi
from .reporting import SubCheck, VerifyReport
from .zeta import zeta_deriv0_const, zeta_deriv0_diff

LEMMA_SEED = 20190201


class UnknownCheckError(KeyError):
    """Requested a check id that is not in the registry."""


def check_lemma31(n: int, x, N: int) -> VerifyReport:
    """Exact telescoping rewrite of log^(n+1)(N+x):

        log^(n+1)(N+x) = log^(n+1)(1+x)
            - (n+1) int_N^(N+1) log^n(x+t)/(x+t) dt
            + sum_{k=1..N} [log^(n+1)(k+1+x) - log^(n+1)(k+x)]

    with the integral in closed form [log^(n+1)(N+1+x) - log^(n+1)(N+x)]/(n+1).
    Purely algebraic, so the residual must sit at rounding level.
    """
    if N < 1:
        raise DomainError("check_lemma31: need N >= 1")
    x = mpf(x)
    if x < 0:
        raise DomainError("check_lemma31: need x >= 0")
    t0 = time.perf_counter()
    q = n + 1
    lhs = log(N + x) ** q
    integral = (log(N + 1 + x) ** q - log(N + x) ** q) / q
    telescoped = comp_sum(
        log(k + 1 + x) ** q - log(k + x) ** q for k in range(1, N + 1))
    rhs = log(1 + x) ** q - q * integral + telescoped
    residual = abs(lhs - rhs)
    return VerifyReport.build(
        check_id="lemma31",
        inputs={"n": n, "x": str(x), "N": N},
        residual=residual,
        tolerance=mpf("1e-28") * max(mpf(1), abs(lhs)),
        elapsed=time.perf_counter() - t0,
    )


def check_cotangent(x, tol=None) -> VerifyReport:
    """pi cot(pi x) against both the digamma reflection psi(1-x) - psi(x) and
    the partial-fraction sum 1/x + sum 2x/(x^2 - n^2).

    The partial-fraction tail pairs 1/(n+x) - 1/(n-x) into two lattice tails
    plus the boundary log((K-x)/(K+x)).
    """
    x = mpf(x)
    if not 0 < x < 1:
        raise DomainError("check_cotangent: need 0 < x < 1")
    tol = mpf("1e-12") if tol is None else mpf(tol)
    t0 = time.perf_counter()
    with workdps(mp.dps + 8):
        target = pi * _cot_pi(x)

        da = digamma(1 - x, tol)
        db = digamma(x, tol)
        res_psi = abs(target - (da.value - db.value))
        tol_psi = mpf("1e-10") + da.abs_err + db.abs_err

        inv = LogPoly.single(1, 0, 1)
        K = 64
        partial = 1 / x + comp_sum(2 * x / (x * x - n * n) for n in range(1, K))
        tp = em_tail(inv, K + x)
        tm = em_tail(inv, K - x)
        pf = partial + tp.value - tm.value + log((K - x) / (K + x))
        res_pf = abs(target - pf)
        tol_pf = mpf("1e-10") + tp.abs_err + tm.abs_err
    subs = [
        SubCheck("digamma_reflection", res_psi, tol_psi),
        SubCheck("partial_fractions", res_pf, tol_pf),
    ]
    return VerifyReport.from_subchecks(
        check_id="cotangent",
        inputs={"x": str(x)},
        subchecks=subs,
        elapsed=time.perf_counter() - t0,
        notes="both routes written with the pi and 2x factors the algebra forces",
    )


_UNIT_INTEGRAL_CACHE: dict[tuple[str, int], tuple[mpf, mpf]] = {}


def _unit_deriv_integral(order: int) -> tuple[mpf, mpf]:
    """int_0^1 zeta^(order)(0, x) dx with geometric grading toward 0."""
    key = ("unit", order, mp.prec)
    cached = _UNIT_INTEGRAL_CACHE.get(key)
    if cached is not None:
        return cached
    const = zeta_deriv0_const(order, mpf("1e-14"))
    tol = mpf("1e-12")

    def integrand(t):
        return zeta_deriv0_diff(order - 1, t, tol).value + const.value

    q = quad_gl(integrand, mpf(0), mpf(1), panels=18, nodes_per_panel=12,
                singular_left=True)
    result = (q.value, q.abs_err)
    _UNIT_INTEGRAL_CACHE[key] = result
    return result


def check_vanishing_integrals(n: int) -> VerifyReport:
    """Three integrals that must vanish: int_1^2 gamma_n, int_0^1 zeta'(0,x),
    int_0^1 zeta''(0,x)."""
    if not 0 <= n <= 3:
        raise DomainError("check_vanishing_integrals: need n <= 3")
    t0 = time.perf_counter()
    tol = mpf("1e-12")
    q = quad_gl(lambda t: gamma_n(n, t, "series_c", tol).value,
                mpf(1), mpf(2), panels=4, nodes_per_panel=20)
    subs = [SubCheck("gamma_over_unit_interval", abs(q.value), q.abs_err + mpf("1e-8"))]
    v1, e1 = _unit_deriv_integral(1)
    subs.append(SubCheck("zeta_prime0_over_unit", abs(v1), e1 + mpf("1e-8")))
    v2, e2 = _unit_deriv_integral(2)
    subs.append(SubCheck("zeta_second0_over_unit", abs(v2), e2 + mpf("1e-7")))
    return VerifyReport.from_subchecks(
        check_id="vanishing_integrals",
        inputs={"n": n},
        subchecks=subs,
        elapsed=time.perf_counter() - t0,
    )


ALPHA_DIGAMMA_ZERO = mpf("1.461632144968")


def check_zero_structure(n: int) -> VerifyReport:
    """Sign changes of gamma_n on [1, 2]: at least one for n = 0 (located and
    compared against the digamma zero), at least two for n >= 1."""
    if not 0 <= n <= 3:
        raise DomainError("check_zero_structure: need n <= 3")
    t0 = time.perf_counter()
    tol = mpf("1e-12")
    grid = 256

    def g(t):
        return gamma_n(n, t, "series_c", tol).value

    pts = [1 + mpf(i) / (grid - 1) for i in range(grid)]
    vals = [g(t) for t in pts]
    brackets = [(pts[i], pts[i + 1]) for i in range(grid - 1)
                if (vals[i] > 0) != (vals[i + 1] > 0)]
    roots = [find_root_bisect(g, lo, hi, mpf("1e-11")) for lo, hi in brackets]
    notes = "sign changes at ~" + ", ".join(mp.nstr(r, 12) for r in roots)
    if n == 0:
        residual = abs(roots[0] - ALPHA_DIGAMMA_ZERO) if roots else mpf(1)
        tolerance = mpf("1e-9")
    else:
        residual = mpf(max(0, 2 - len(brackets)))
        tolerance = mpf(0)
    return VerifyReport.build(
        check_id="zero_structure",
        inputs={"n": n},
        residual=residual,
        tolerance=tolerance,
        elapsed=time.perf_counter() - t0,
        notes=notes,
    )


def _g_series(q: int, x, tol) -> tuple[mpf, mpf]:
    """sum_{n>=0} [log^q(n+x) - log^q(n+1) - q(x-1) log^(q-1)(n+1)/(n+1)]
    with its lattice tail; the series route to the g functions."""
    f = LogPoly.single(1, q - 1, 1)
    hprime = ShiftedLogSum([(q, x, f), (-q, 1, f),
                            (-q * (x - 1), 1, f.diff())])
    K = 64
    G = lambda u: log(u) ** q
    partial = comp_sum(
        G(k + x) - G(k + 1) - q * (x - 1) * f(k + 1) for k in range(K))
    h0 = G(K + x) - G(K + 1) - q * (x - 1) * f(K + 1)
    integral = (-logpow_antiderivative(q, K + x)
                + logpow_antiderivative(q, mpf(K + 1))
                + (x - 1) * G(K + 1))
    tail, err = em_tail_shifted(hprime, h0, integral, K)
    return partial + tail, err


def check_g_functions(x, tol=None) -> VerifyReport:
    """The integrated zeta'(2, x) and zeta''(2, x) antiderivatives two ways:
    once from zeta-derivative closed forms, once from their direct series.

        g1 = [zeta''(0,x) - zeta''(0)]/2 - (x-1) gamma_1 - [log Gamma(x) + (x-1) gamma]
        g2 = -[zeta'''(0,x) - zeta'''(0)]/3 - (x-1) gamma_2 - 2 g1
    """
    x = mpf(x)
    if not x > 0:
        raise DomainError("check_g_functions: need x > 0")
    tol = mpf("1e-12") if tol is None else mpf(tol)
    t0 = time.perf_counter()
    with workdps(mp.dps + 8):
        g0 = gamma_n(0, 1, "series_b", tol)
        g1c = gamma_n(1, 1, "series_b", tol)
        g2c = gamma_n(2, 1, "series_b", tol)
        lg = log_gamma(x, tol)
        base = lg.value + (x - 1) * g0.value
        zd1 = zeta_deriv0_diff(1, x, tol)
        g1_closed = zd1.value / 2 - (x - 1) * g1c.value - base
        s1, e1 = _g_series(2, x, tol)
        g1_series = s1 / 2 - base
        res1 = abs(g1_closed - g1_series)
        tol1 = zd1.abs_err / 2 + abs(x - 1) * g1c.abs_err + e1 / 2 + mpf("1e-9")

        zd2 = zeta_deriv0_diff(2, x, tol)
        g2_closed = -zd2.value / 3 - (x - 1) * g2c.value - 2 * g1_closed
        s2, e2 = _g_series(3, x, tol)
        g2_series = s2 / 3 - 2 * g1_closed
        res2 = abs(g2_closed - g2_series)
        tol2 = zd2.abs_err / 3 + abs(x - 1) * g2c.abs_err + e2 / 3 + mpf("1e-9")
    subs = [SubCheck("g1_routes", res1, tol1), SubCheck("g2_routes", res2, tol2)]
    return VerifyReport.from_subchecks(
        check_id="g_functions",
        inputs={"x": str(x)},
        subchecks=subs,
        elapsed=time.perf_counter() - t0,
    )


def _lemma31_grid() -> list[VerifyReport]:
    rng = random.Random(LEMMA_SEED)
    reports = [
        check_lemma31(0, mpf(0), 1),
        check_lemma31(3, pi, 100),
        check_lemma31(1, mpf(0), 1000),
    ]
    for _ in range(50):
        n = rng.randint(0, 5)
        x = mpf(rng.uniform(0.0, 10.0))
        N = rng.randint(1, 1000)
        reports.append(check_lemma31(n, x, N))
    return reports


def _cotangent_grid() -> list[VerifyReport]:
    xs = [mpf(1) / 6, mpf(1) / 4, mpf(1) / 3, mpf(1) / 2, mpf(2) / 3]
    return [check_cotangent(x) for x in xs]


def _vanishing_grid() -> list[VerifyReport]:
    return [check_vanishing_integrals(n) for n in (1, 2, 3)]


def _zero_grid() -> list[VerifyReport]:
    return [check_zero_structure(n) for n in (0, 1, 2, 3)]


def _g_grid() -> list[VerifyReport]:
    return [check_g_functions(x) for x in (mpf(1) / 2, mpf(1), mpf(2))]


CHECKS = {
    "lemma31": _lemma31_grid,
    "cotangent": _cotangent_grid,
    "vanishing_integrals": _vanishing_grid,
    "zero_structure": _zero_grid,
    "g_functions": _g_grid,
}


def run_suite(selection, tol_policy: dict | None = None) -> list[VerifyReport]:
    """Run the selected checks over their default grids.

    selection is an iterable of check ids (or the string "all"); report order
    is canonical (sorted by check id, then inputs) regardless of execution
    order.  tol_policy optionally scales tolerances per check id.
    """
    if selection == "all":
        ids = sorted(CHECKS)
    else:
        ids = sorted(set(selection))
        unknown = [i for i in ids if i not in CHECKS]
        if unknown:
            raise UnknownCheckError(f"unknown check ids: {', '.join(unknown)}")
    reports: list[VerifyReport] = []
    for cid in ids:
        batch = CHECKS[cid]()
        scale = mpf((tol_policy or {}).get(cid, 1))
        if scale != 1:
            batch = [
                VerifyReport.build(r.check_id, r.inputs, r.residual,
                                   r.tolerance * scale, r.elapsed,
                                   subchecks=r.subchecks, notes=r.notes)
                for r in batch
            ]
        reports.extend(batch)
    reports.sort(key=lambda r: r.sort_key())
    return reports
