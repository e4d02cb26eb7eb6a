"""Log-polynomial calculus and the Euler-Maclaurin tail engine.

A LogPoly is a finite sum of terms c * log(t)^m / t^p with m, p >= 0.  The
family is closed under differentiation:

    d/dt [log^m t / t^p] = m log^(m-1) t / t^(p+1)  -  p log^m t / t^(p+1)

which is all that is needed to turn slowly convergent logarithmic series into
a short partial sum plus Bernoulli-weighted endpoint corrections:

    sum_{k>=0} f(a+k) - int_a^inf f(t) dt
        = f(a)/2 - sum_{j=1..J} B_2j/(2j)! f^(2j-1)(a) + R_J

with |R_J| estimated by the first omitted correction.  The same corrections
apply to summands built from log powers at several shifted arguments
(ShiftedLogSum below), where only the closed-form integral differs.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from mpmath import log, mpf

from .core import DomainError, SeriesValue

_BERNOULLI_CACHE: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def bernoulli(idx: int) -> Fraction:
    """Exact Bernoulli number B_idx (B_1 = -1/2 convention)."""
    if idx < 0:
        raise DomainError("bernoulli: index must be >= 0")
    while len(_BERNOULLI_CACHE) <= idx:
        m = len(_BERNOULLI_CACHE)
        s = Fraction(0)
        for j in range(m):
            s += comb(m + 1, j) * _BERNOULLI_CACHE[j]
        _BERNOULLI_CACHE.append(-s / (m + 1))
    return _BERNOULLI_CACHE[idx]


def bernoulli_mpf(idx: int) -> mpf:
    b = bernoulli(idx)
    return mpf(b.numerator) / b.denominator


class LogPoly:
    """Finite sum of c * log(t)^m / t^p terms, keyed by (m, p).

    log^0 t is 1 everywhere (including t = 1), so evaluation at 1 keeps the
    m = 0 terms and kills every m > 0 term.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        merged: dict[tuple[int, int], mpf] = {}
        for (m, p), c in (terms or {}).items():
            if m < 0 or p < 0:
                raise DomainError("LogPoly: powers must be >= 0")
            c = mpf(c)
            if c:
                merged[(m, p)] = merged.get((m, p), mpf(0)) + c
        self.terms = {k: v for k, v in merged.items() if v}

    @classmethod
    def single(cls, coeff, log_power: int, inv_power: int) -> "LogPoly":
        return cls({(log_power, inv_power): mpf(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_inv_power(self) -> int:
        return min((p for _, p in self.terms), default=0)

    def diff(self) -> "LogPoly":
        out: dict[tuple[int, int], mpf] = {}
        for (m, p), c in self.terms.items():
            if m:
                key = (m - 1, p + 1)
                out[key] = out.get(key, mpf(0)) + c * m
            if p:
                key = (m, p + 1)
                out[key] = out.get(key, mpf(0)) - c * p
        return LogPoly(out)

    def __call__(self, t) -> mpf:
        t = mpf(t)
        lt = log(t)
        total = mpf(0)
        for (m, p), c in self.terms.items():
            total += c * lt ** m / t ** p
        return total

    def __add__(self, other: "LogPoly") -> "LogPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, mpf(0)) + c
        return LogPoly(out)

    def scaled(self, factor) -> "LogPoly":
        factor = mpf(factor)
        return LogPoly({k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LogPoly) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "LogPoly(0)"
        bits = [f"{c}*log^{m}/t^{p}" for (m, p), c in sorted(self.terms.items())]
        return "LogPoly(" + " + ".join(bits) + ")"


def logpoly_diff(f: LogPoly) -> LogPoly:
    """Term-by-term derivative, canonicalized (like terms merged)."""
    return f.diff()


def logpow_antiderivative(q: int, u) -> mpf:
    """int log^q u du = u * sum_{j<=q} (-1)^(q-j) (q!/j!) log^j u."""
    u = mpf(u)
    lu = log(u)
    total = mpf(0)
    for j in range(q + 1):
        total += (-1) ** (q - j) * mpf(factorial(q)) / factorial(j) * lu ** j
    return u * total


def pow_diff(la, lb, delta, q: int) -> mpf:
    """lb^q - la^q evaluated as delta * sum_{i<q} lb^i la^(q-1-i).

    delta must equal lb - la; passing it separately lets callers supply it in
    a cancellation-free form such as log1p of a small ratio.
    """
    la, lb, delta = mpf(la), mpf(lb), mpf(delta)
    total = mpf(0)
    for i in range(q):
        total += lb ** i * la ** (q - 1 - i)
    return delta * total


def logpoly_integral_to_inf(f: LogPoly, a) -> mpf:
    """int_a^inf f(t) dt for a LogPoly whose terms all have inv_power >= 2.

    Per term: int_a^inf log^m t / t^p dt
        = m!/(p-1)^(m+1) * a^(1-p) * sum_{j<=m} ((p-1) log a)^j / j!
    """
    a = mpf(a)
    la = log(a)
    total = mpf(0)
    for (m, p), c in f.terms.items():
        if p < 2:
            raise DomainError("integral_to_inf: needs inv_power >= 2 on every term")
        y = (p - 1) * la
        inner = mpf(0)
        for j in range(m + 1):
            inner += y ** j / factorial(j)
        total += c * mpf(factorial(m)) / (p - 1) ** (m + 1) * a ** (1 - p) * inner
    return total


def em_tail(f: LogPoly, start, J: int = 4) -> SeriesValue:
    """sum_{k>=0} f(start + k) - int_start^inf f(t) dt by Euler-Maclaurin.

    Value = f(start)/2 - sum_{j<=J} B_2j/(2j)! f^(2j-1)(start); abs_err is the
    magnitude of the first omitted correction (alternating-envelope bound).
    start may be any real >= 2 (unit-step lattice starting there); every term
    of f must have inv_power >= 1 or the paired tail diverges.
    """
    if f.is_zero():
        return SeriesValue(mpf(0), mpf(0), 1, "euler_maclaurin")
    if f.min_inv_power < 1:
        raise DomainError("em_tail: term with inv_power = 0 has a divergent tail")
    if J > 8:
        raise DomainError("em_tail: correction order J must be <= 8")
    start = mpf(start)
    if start < 2:
        raise DomainError("em_tail: start must be >= 2")
    value = f(start) / 2
    d = f
    order = 0
    for j in range(1, J + 1):
        while order < 2 * j - 1:
            d = d.diff()
            order += 1
        value -= bernoulli_mpf(2 * j) / factorial(2 * j) * d(start)
    while order < 2 * J + 1:
        d = d.diff()
        order += 1
    err = abs(bernoulli_mpf(2 * J + 2) / factorial(2 * J + 2) * d(start))
    return SeriesValue(value, err, J, "euler_maclaurin")


class ShiftedLogSum:
    """Sum of coeff * poly(t + shift) parts; the summand shape of series whose
    terms mix log powers at several shifted arguments."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple((mpf(c), mpf(sh), poly) for c, sh, poly in parts)

    def diff(self) -> "ShiftedLogSum":
        return ShiftedLogSum((c, sh, poly.diff()) for c, sh, poly in self.parts)

    def __call__(self, t) -> mpf:
        t = mpf(t)
        total = mpf(0)
        for c, sh, poly in self.parts:
            total += c * poly(t + sh)
        return total


def em_tail_shifted(v_prime: ShiftedLogSum, v_at_start, integral, start,
                    J: int = 4) -> tuple[mpf, mpf]:
    """sum_{k>=0} v(start + k) where the caller supplies v(start), the
    closed-form int_start^inf v(t) dt, and v' as a ShiftedLogSum.

    Returns (value, err) with the same correction/err policy as em_tail.
    """
    start = mpf(start)
    value = mpf(integral) + mpf(v_at_start) / 2
    d = v_prime
    order = 1
    for j in range(1, J + 1):
        while order < 2 * j - 1:
            d = d.diff()
            order += 1
        value -= bernoulli_mpf(2 * j) / factorial(2 * j) * d(start)
    while order < 2 * J + 1:
        d = d.diff()
        order += 1
    err = abs(bernoulli_mpf(2 * J + 2) / factorial(2 * J + 2) * d(start))
    return value, err


def em_start_for(f: LogPoly, shift, tol, start_min: int = 16,
                 factor: int = 4, J: int = 4) -> int:
    """Smallest K in the geometric ladder start_min * factor^i such that the
    claimed em_tail error at K + shift is below tol/4."""
    shift = mpf(shift)
    tol = mpf(tol)
    K = start_min
    while True:
        probe = em_tail(f, K + shift, J)
        if probe.abs_err < tol / 4:
            return K
        if K > 10 ** 7:
            raise DomainError("em_start_for: tolerance unreachable; raise tol")
        K *= factor
