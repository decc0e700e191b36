import pytest
from mpmath import exp, fabs, mp, mpc, mpf, pi, sqrt

from torusasym import (
    LineContour,
    NonDecayingIntegrand,
    Precision,
    RadiusTooLarge,
    TorusKnot,
    cauchy_derivatives,
    integrate_line,
    laurent_at_simple_pole,
    laurent_coefficients,
    tau,
)
from conftest import assert_close

P = Precision(30, 1e-12)
K23 = TorusKnot(2, 3)


def tau23(z):
    return tau(K23, z, P)


class TestIntegrateLine:
    def test_gaussian_real_line(self):
        val = integrate_line(lambda z: exp(-z * z), LineContour(0, 0.0, 8.0), P)
        assert_close(val, sqrt(pi), rel=mpf("1e-12"))

    def test_odd_integrand_vanishes(self):
        val = integrate_line(lambda z: z * exp(-z * z), LineContour(0, 0.0, 8.0), P)
        assert fabs(val) < mpf("1e-20")

    @pytest.mark.parametrize("c", [mpc(1), mpc(2, 1), mpc("0.5", "-0.3")])
    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    def test_gaussian_moments(self, c, m):
        # oracle: int e^{-c z^2} z^{2m} dz = sqrt(pi/c) (2m-1)!! / (2c)^m for Re c > 0
        val = integrate_line(lambda z: exp(-c * z * z) * z ** (2 * m), LineContour(0, 0.0, 14.0), P)
        expected = sqrt(pi / c) * mp.fac2(2 * m - 1) / (2 * c) ** m
        assert_close(val, expected, rel=P.rel_tol * 10)

    def test_tilted_line(self):
        # rotating the contour does not change an entire Gaussian integral
        val = integrate_line(lambda z: exp(-z * z), LineContour(0, 0.3, 9.0), P)
        assert_close(val, sqrt(pi), rel=mpf("1e-12"))

    def test_node_count_independence(self):
        f = lambda z: exp(-2 * z * z) * (1 + z * z)
        a = integrate_line(f, LineContour(0, 0.0, 8.0), P, min_panels=4)
        b = integrate_line(f, LineContour(0, 0.0, 8.0), P, min_panels=16)
        assert_close(a, b, rel=P.rel_tol * 4)

    def test_non_decaying_integrand(self):
        with pytest.raises(NonDecayingIntegrand):
            integrate_line(lambda z: 1 / (1 + z * z), LineContour(0, 0.0, 2.0), P)

    def test_deterministic(self):
        f = lambda z: exp(-z * z) * exp(mpc(0, 3) * z)
        a = integrate_line(f, LineContour(0, 0.1, 8.0), P)
        b = integrate_line(f, LineContour(0, 0.1, 8.0), P)
        assert a == b


class TestCauchyDerivatives:
    def test_exp_derivatives(self):
        vals = cauchy_derivatives(exp, 0, 1.0, [0, 1, 2], P)
        for v in vals:
            assert_close(v, 1)

    def test_tau_first_derivative_at_zero(self):
        # tau(z) = 2z + O(z^3), so tau'(0) = 2
        (d1,) = cauchy_derivatives(tau23, 0, 0.25, [1], P)
        assert_close(d1, 2)

    def test_tau_even_orders_vanish_at_zero(self):
        # all even derivatives of the odd kernel vanish at the origin
        d0, d2, d4 = cauchy_derivatives(tau23, 0, 0.25, [0, 2, 4], P)
        assert fabs(d0) < mpf("1e-25")
        assert fabs(d2) < mpf("1e-25")
        assert fabs(d4) < mpf("1e-22")

    @pytest.mark.parametrize("order", [1, 2])
    def test_against_central_finite_differences(self, order):
        f = lambda z: exp(z) * mp.cos(z)
        (val,) = cauchy_derivatives(f, mpf("0.3"), 0.5, [order], P)
        h = mpf("1e-4")
        x = mpf("0.3")
        if order == 1:
            fd = (f(x + h) - f(x - h)) / (2 * h)
        else:
            fd = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h)
        assert_close(val, fd, rel=mpf("1e-6"))

    def test_radius_too_large(self):
        with pytest.raises(RadiusTooLarge):
            cauchy_derivatives(
                lambda z: 1 / (1 - z), 0, 1.5, [0], P, singularities=[1]
            )


class TestLaurent:
    def test_simple_pole_plus_constant(self):
        res, const = laurent_at_simple_pole(lambda z: 1 / z + 5, 0, 0.5, P)
        assert_close(res, 1)
        assert_close(const, 5)

    def test_tau_residue_at_first_pole(self):
        # residue of tau at k pi i/(ab) is (-1)^(k+1) 2 sin(k pi/a) sin(k pi/b)/(ab):
        # sine in both factors, fixed numerically below by an independent limit
        z0 = pi * mpc(0, 1) / 6
        res, _ = laurent_at_simple_pole(tau23, z0, pi / 12, P)
        assert_close(res, sqrt(mpf(3)) / 6, rel=mpf("1e-15"))

    def test_tau_residue_at_k5(self):
        z0 = 5 * pi * mpc(0, 1) / 6
        res, _ = laurent_at_simple_pole(tau23, z0, pi / 12, P)
        assert_close(res, -sqrt(mpf(3)) / 6, rel=mpf("1e-15"))

    def test_residue_matches_richardson_limit(self):
        # lim (z - z0) tau(z), approached from 4 directions and extrapolated
        z0 = pi * mpc(0, 1) / 6
        res, _ = laurent_at_simple_pole(tau23, z0, pi / 12, P)
        with P.workdps():
            for h in (mpf("1e-6"), mpf("1e-7")):
                approaches = [
                    d * tau23(z0 + d) for d in (h, -h, mpc(0, 1) * h, -mpc(0, 1) * h)
                ]
                limit = sum(approaches) / 4
                assert fabs(limit - res) < mpf("1e-8")

    def test_general_orders_include_residue(self):
        vals = laurent_coefficients(lambda z: 2 / z + 3 + 7 * z, 0, 0.5, [-1, 0, 1], P)
        assert_close(vals[0], 2)
        assert_close(vals[1], 3)
        assert_close(vals[2], 7)
