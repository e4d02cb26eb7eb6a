import math

import pytest
from mpmath import exp, log, mp, mpf, pi

import oracles
from stieltjes.core import DomainError
from stieltjes.gamma import RationalArg
from stieltjes.quadrature import quad_gl
from stieltjes.related import (PowerSeries, delta, digamma, digamma_rational,
                               dilcher_log_gamma_k, dilcher_power_series, eta,
                               log_gamma, mangoldt_gap_sums, von_mangoldt)
from stieltjes.zeta import zeta_deriv0_const, zeta_deriv0_diff

TOL = mpf("1e-14")


class TestVonMangoldt:
    def test_prime_power_values(self):
        t = von_mangoldt(20)
        assert t.value(9) == log(3)
        assert t.value(12) == 0
        assert t.value(2) + t.value(4) + t.value(8) == 3 * log(2)

    def test_lcm_invariant(self):
        N = 200
        t = von_mangoldt(N)
        lcm = math.lcm(*range(1, N + 1))
        rebuilt = 1
        for p, m in t.prime_exponents().items():
            rebuilt *= p**m
        assert rebuilt == lcm

    def test_domain(self):
        with pytest.raises(DomainError):
            von_mangoldt(1)


class TestPowerSeries:
    def test_div_round_trip(self):
        one_plus = PowerSeries([1, 1, 0, 0, 0])
        inv = PowerSeries([1, 0, 0, 0, 0]).div(one_plus, 4)
        back = inv.mul(one_plus, 4)
        assert back.coeffs[0] == 1
        assert all(c == 0 for c in back.coeffs[1:])

    def test_log_of_one_plus_w(self):
        s = PowerSeries([1, 1, 0, 0, 0, 0]).log(5)
        for i in range(1, 6):
            assert abs(s.coeffs[i] - mpf(-1) ** (i + 1) / i) < mpf("1e-30")

    def test_log_requires_unit_constant(self):
        with pytest.raises(DomainError):
            PowerSeries([2, 1]).log(1)


class TestEta:
    def test_order_zero_is_minus_gamma(self, gamma_ref):
        sv = eta(0, "from_gamma", tol=mpf("1e-13"))
        assert abs(sv.value + gamma_ref) < mpf("1e-12")

    def test_order_one_sign_and_closed_form(self, gamma_ref, gamma1_ref):
        sv = eta(1, "from_gamma", tol=mpf("1e-13"))
        assert sv.value > 0
        # exact algebra: eta_1 = gamma^2 + 2 gamma_1
        assert abs(sv.value - (gamma_ref**2 + 2 * gamma1_ref)) < mpf("1e-12")

    def test_alternating_signs(self):
        values = [eta(n, "from_gamma", tol=mpf("1e-10")).value for n in range(4)]
        assert values[0] < 0 and values[1] > 0 and values[2] < 0 and values[3] > 0

    def test_series_route_has_no_bound(self):
        sv = eta(0, "series", K=10**4)
        assert sv.abs_err == mp.inf
        assert sv.method == "mangoldt_series"

    def test_series_route_needs_budget(self):
        with pytest.raises(DomainError):
            eta(0, "series")

    def test_mangoldt_gap_trend_small_scale(self, gamma_ref):
        sums = mangoldt_gap_sums(0, [10**3, 10**4, 10**5])
        gaps = [sums[k] + 2 * gamma_ref for k in (10**3, 10**4, 10**5)]
        # approaches -2 gamma from one side, shrinking each decade
        assert abs(gaps[2]) < abs(gaps[1]) < abs(gaps[0])
        assert abs(gaps[2]) < mpf("0.05")


class TestDelta:
    def test_order_zero_exact(self):
        sv = delta(0)
        assert sv.value == mpf("0.5") and sv.abs_err == 0

    def test_order_one(self):
        sv = delta(1)
        assert abs(sv.value - (-1 + log(2 * pi) / 2)) < mpf("1e-8")

    def test_order_two_vs_constant_route(self):
        sv = delta(2)
        zpp = zeta_deriv0_const(2, mpf("1e-13"))
        assert abs(sv.value - (zpp.value + 2)) < mpf("1e-8")

    def test_apostol_normalized_derivatives_near_minus_one(self):
        # zeta^(n)(0)/n! stays in (-1.2, -0.8); reconstruct from delta
        zp0 = -delta(1).value - 1
        assert mpf("-1.2") < zp0 / 1 < mpf("-0.8")
        zpp0 = delta(2).value - 2
        assert mpf("-1.2") < zpp0 / 2 < mpf("-0.8")

    def test_caps(self):
        with pytest.raises(DomainError):
            delta(3)
        with pytest.raises(DomainError):
            delta(1, N=5)


class TestDigamma:
    def test_at_one(self, gamma_ref):
        sv = digamma(1, TOL)
        assert abs(sv.value + gamma_ref) < TOL

    def test_at_two(self, gamma_ref):
        sv = digamma(2, TOL)
        assert abs(sv.value - (1 - gamma_ref)) < TOL

    def test_at_half_vs_brute_oracle(self, gamma_ref):
        sv = digamma(mpf("0.5"), TOL)
        want = -gamma_ref - mpf(oracles.PSI_ONE_MINUS_PSI_HALF)
        assert abs(sv.value - want) < TOL

    def test_domain(self):
        with pytest.raises(DomainError):
            digamma(0)


class TestDigammaRational:
    def test_half(self, gamma_ref):
        sv = digamma_rational(RationalArg(1, 2), mpf("1e-12"))
        assert abs(sv.value - (-gamma_ref - 2 * log(2))) < mpf("1e-11")

    def test_quarter_closed_form(self, gamma_ref):
        sv = digamma_rational(RationalArg(1, 4), mpf("1e-12"))
        want = -gamma_ref - 3 * log(2) - pi / 2
        assert abs(sv.value - want) < mpf("1e-11")

    def test_agreement_up_to_q8(self):
        for q in range(2, 9):
            for p in range(1, q):
                if math.gcd(p, q) == 1:
                    closed = digamma_rational(RationalArg(p, q), mpf("1e-11"))
                    direct = digamma(mpf(p) / q, mpf("1e-11"))
                    assert abs(closed.value - direct.value) <= \
                        closed.abs_err + direct.abs_err


class TestLogGamma:
    def test_at_one_and_two(self):
        assert abs(log_gamma(1, TOL).value) < TOL
        two = log_gamma(2, TOL)
        assert abs(two.value) < TOL
        three = log_gamma(3, TOL)
        assert abs(three.value - (two.value + log(2))) < 2 * TOL

    def test_half_by_duplication(self):
        sv = log_gamma(mpf("0.5"), TOL)
        # Gamma(1/2)^2 = pi
        assert abs(exp(2 * sv.value) - pi) < mpf("1e-13")
        assert abs(sv.value - log(pi) / 2) < TOL

    def test_raabe_unit_integral(self):
        q = quad_gl(lambda t: log_gamma(t, mpf("1e-13")).value, 0, 1,
                    panels=30, nodes_per_panel=16, singular_left=True)
        assert abs(q.value - log(2 * pi) / 2) < mpf("1e-10")

    def test_recurrence_along_x(self):
        for xs in ("0.3", "1.3", "2.3"):
            x = mpf(xs)
            a = log_gamma(x + 1, TOL)
            b = log_gamma(x, TOL)
            assert abs(a.value - (b.value + log(x))) <= a.abs_err + b.abs_err + TOL


class TestDilcher:
    def test_order_zero_is_log_gamma(self):
        for xs in ("1.5", "0.3", "-0.5"):
            x = mpf(xs)
            a = dilcher_log_gamma_k(0, x, TOL)
            b = log_gamma(x + 1, TOL)
            assert abs(a.value - b.value) <= a.abs_err + b.abs_err + TOL

    def test_vanishes_at_zero_and_one(self):
        for k in range(5):
            assert dilcher_log_gamma_k(k, 0, TOL).value == 0
            one = dilcher_log_gamma_k(k, 1, TOL)
            assert abs(one.value) <= one.abs_err + TOL

    def test_series61_zero(self):
        assert dilcher_power_series(0).value == 0

    def test_series61_at_one_recovers_gamma1(self, gamma1_ref):
        sv = dilcher_power_series(1, mpf("1e-10"))
        assert abs(sv.value - gamma1_ref) < mpf("1e-8")

    def test_series61_matches_product_route_at_half(self, gamma1_ref):
        x = mpf("0.5")
        a = dilcher_power_series(x, mpf("1e-12"))
        b = dilcher_log_gamma_k(1, x, mpf("1e-12"))
        gap = abs(a.value - (b.value + gamma1_ref * x))
        assert gap <= a.abs_err + b.abs_err + mpf("1e-11")

    def test_series61_domain(self):
        with pytest.raises(DomainError):
            dilcher_power_series(mpf("1.5"))
        with pytest.raises(DomainError):
            dilcher_power_series(-1)

    @pytest.mark.parametrize("xs", ["0.25", "0.5", "0.75"])
    def test_second_derivative_consistency(self, xs, gamma1_ref):
        # zeta''(0,x) - zeta''(0) - 2 gamma_1 x = log^2 x - 2 * series(x)
        x = mpf(xs)
        zd = zeta_deriv0_diff(1, x, mpf("1e-13"))
        s = dilcher_power_series(x, mpf("1e-13"))
        lhs = zd.value - 2 * gamma1_ref * x
        rhs = log(x) ** 2 - 2 * s.value
        assert abs(lhs - rhs) <= zd.abs_err + 2 * s.abs_err + mpf("1e-11")
