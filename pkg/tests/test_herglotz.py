import cmath
import math

import numpy as np
import pytest

import hardyweight as hw
from hardyweight.backend import kernels
from hardyweight.errors import BranchCutError, DomainError, QuadratureConvergenceError
from hardyweight.herglotz import (
    BranchRoute,
    asymptotics_check,
    boundary_consistency_check,
    cut_distance,
    evaluate_many,
    representation_check,
    symmetry_check,
)

# frozen from the 60-digit oracle
F_2_AT_2 = -0.13629669484372685
F_2_AT_10I = 0.024922282556249796j
F_3_AT_1PI = complex(-0.11943712788308335, 0.16526826508397669)
F_35_AT_2 = -0.16906451880578483
BOUNDARY_2_HALF = complex(-0.13397459621556135, 0.5)


class TestEvaluate:
    def test_real_axis_golden(self):
        got = hw.evaluate(2, complex(2, 0))
        assert got.imag == 0.0
        assert got.real == pytest.approx(F_2_AT_2, abs=1e-15)
        # equivalently, 2[(sqrt(3/2) - 1) - (1 - sqrt(1/2))]
        expr = 2.0 * ((math.sqrt(1.5) - 1.0) - (1.0 - math.sqrt(0.5)))
        assert got.real == pytest.approx(expr, abs=1e-15)

    def test_imaginary_axis_golden(self):
        got = hw.evaluate(2, 10j)
        assert got.real == 0.0
        assert got == pytest.approx(F_2_AT_10I, abs=1e-15)

    def test_leading_asymptotic_term(self):
        # f(10i) is -m0/z up to an O(1e-3) relative correction
        got = hw.evaluate(2, 10j)
        assert abs(got - 0.025j) <= 1e-3 * abs(got) * 10  # m2/|z|^2 correction
        assert abs(got - 0.025j) == pytest.approx(7.8e-5, rel=0.05)

    def test_offaxis_golden(self):
        assert hw.evaluate(3, 1 + 1j) == pytest.approx(F_3_AT_1PI, abs=1e-14)

    def test_negative_real_axis_odd(self):
        assert hw.evaluate(2, complex(-2, 0)).real == pytest.approx(-F_2_AT_2, abs=1e-15)
        assert hw.evaluate(2, complex(-2, 0)).imag == 0.0

    def test_real_axis_value_is_exactly_real(self):
        for x in (1.5, 2.0, 17.0, -3.0):
            assert hw.evaluate(2.7, complex(x, 0)).imag == 0.0

    @pytest.mark.parametrize("z", [0.0j, complex(0.5, 0), complex(-1, 0),
                                   complex(1, 0), complex(0.3, 1e-13),
                                   complex(1 + 1e-13, 0)])
    def test_cut_rejection(self, z):
        with pytest.raises(BranchCutError):
            hw.evaluate(2, z)

    def test_nonfinite_rejection(self):
        with pytest.raises(DomainError):
            hw.evaluate(2, complex(math.inf, 1))

    def test_route_tags(self):
        assert hw.evaluate_detailed(2, 3j).branch_route is BranchRoute.PRODUCT_FORM
        assert hw.evaluate_detailed(2, 1.5j).branch_route is BranchRoute.DEFINITION_FORM
        assert hw.evaluate_detailed(2, complex(2, 0)).branch_route is BranchRoute.REAL_AXIS_LIMIT

    def test_cut_distance(self):
        assert cut_distance(0.5 + 0.25j) == 0.25
        assert cut_distance(complex(2, 0)) == 1.0
        assert cut_distance(-1 - 1j) == 1.0

    def test_evaluate_many_matches_scalar(self):
        # to the ulp: the vectorized fallback may round complex division
        # differently from the scalar path
        zs = np.array([2 + 0j, 1 + 1j, -0.5 - 2j, 10j, -3 + 0j])
        many = evaluate_many(2.7, zs)
        for z, v in zip(zs, many):
            s = hw.evaluate(2.7, complex(z))
            assert abs(v - s) <= 2e-16 * max(1.0, abs(s))


class TestRoutes:
    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 4.7])
    def test_product_and_definition_agree_on_overlap(self, p):
        # the two formulas are proven equal on C+; the overlap annulus
        # 1.5 < |z| < 3 is where the implementation switches between them
        rng = np.random.default_rng(11)
        for _ in range(200):
            r = rng.uniform(1.5, 3.0)
            th = rng.uniform(0.05, math.pi - 0.05)
            z = r * cmath.exp(1j * th)
            a = kernels.f_def_point(p, z)
            b = kernels.f_prod_point(p, z)
            assert abs(a - b) <= 1e-12 * abs(a)

    def test_cross_route_at_unit_scale_point(self):
        # the product form is valid on all of C+, including |z| < 1.5
        a = hw.product_form(3, 1 + 1j)
        b = kernels.f_def_point(3.0, 1 + 1j)
        assert abs(a - b) <= 1e-12 * abs(b)
        assert a == pytest.approx(F_3_AT_1PI, abs=1e-14)

    def test_product_form_valid_on_real_ray(self):
        assert hw.product_form(3.5, complex(2, 0)).real == pytest.approx(
            F_35_AT_2, abs=1e-15)

    @pytest.mark.parametrize("z", [complex(0.5, 0), -2j, complex(-3, 0)])
    def test_product_form_domain(self, z):
        with pytest.raises(DomainError):
            hw.product_form(2, z)

    def test_lower_half_plane_is_reflected_definition(self):
        # production route (reflection) agrees with the raw definition form
        # evaluated directly below the axis
        rng = np.random.default_rng(5)
        for p in (1.5, 2.0, 3.0):
            for _ in range(100):
                z = complex(rng.uniform(-3, 3), -rng.uniform(0.05, 3.0))
                direct = kernels.f_def_point(p, z)
                assert abs(hw.evaluate(p, z) - direct) <= 1e-12 * abs(direct)


class TestBoundary:
    def test_imag_is_pi_rho_golden(self):
        got = hw.boundary_value(2, 0.5)
        assert got == pytest.approx(BOUNDARY_2_HALF, abs=1e-15)
        assert got.imag == pytest.approx(0.5, abs=1e-15)

    def test_imag_at_09(self):
        assert hw.boundary_value(2, 0.9).imag == pytest.approx(0.3, abs=1e-15)

    def test_imag_at_x1_is_zero(self):
        for p in (1.5, 2.0, 7.0):
            assert hw.boundary_value(p, 1.0).imag == 0.0

    @pytest.mark.parametrize("p", [1.5, 2.0, 3.5, 6.0])
    def test_imag_equals_pi_rho_everywhere(self, p):
        xs = np.linspace(0.01, 1.0, 50)
        for x in xs:
            bv = hw.boundary_value(p, float(x))
            assert bv.imag == pytest.approx(math.pi * hw.density(p, float(x)),
                                            rel=1e-13, abs=1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            hw.boundary_value(2, 0.0)
        with pytest.raises(DomainError):
            hw.boundary_value(2, 1.5)

    def test_limit_from_above_matches_boundary_value(self):
        # two-point Richardson in eps extrapolates Im f(x + i eps) to the
        # explicit boundary formula
        for p, x in ((2.0, 0.5), (3.5, 0.25)):
            v1 = hw.evaluate(p, complex(x, 1e-6))
            v2 = hw.evaluate(p, complex(x, 1e-7))
            extrap = (1e-6 * v2 - 1e-7 * v1) / (1e-6 - 1e-7)
            assert extrap == pytest.approx(hw.boundary_value(p, x), abs=1e-10)

    def test_real_axis_continuity_beyond_cut(self):
        # limit from C+ at x = 2 matches the real formula to 1e-10
        for p in (1.5, 2.0, 3.5):
            v1 = hw.evaluate(p, complex(2, 1e-6))
            v2 = hw.evaluate(p, complex(2, 1e-7))
            extrap = (1e-6 * v2 - 1e-7 * v1) / (1e-6 - 1e-7)
            real_val = hw.evaluate(p, complex(2, 0))
            assert abs(extrap - real_val) <= 1e-10


class TestStieltjes:
    def test_matches_f_on_reference_points(self):
        assert hw.stieltjes_transform(2, 10j, 1e-9) == pytest.approx(
            hw.evaluate(2, 10j), abs=1e-8)
        assert hw.stieltjes_transform(3.5, complex(2, 0), 1e-9) == pytest.approx(
            hw.evaluate(3.5, complex(2, 0)), abs=1e-8)

    def test_conjugation_symmetry(self):
        z = 1.3 + 0.9j
        a = hw.stieltjes_transform(2, z, 1e-10)
        b = hw.stieltjes_transform(2, z.conjugate(), 1e-10)
        assert abs(a - b.conjugate()) <= 1e-9

    def test_cut_rejection(self):
        with pytest.raises(BranchCutError):
            hw.stieltjes_transform(2, complex(0.2, 0), 1e-8)

    def test_nonconvergence_raises_with_estimate(self):
        with pytest.raises(QuadratureConvergenceError) as exc:
            hw.stieltjes_transform(2, 1.5j, 1e-300, max_panels=8)
        assert exc.value.error_estimate is not None
        assert exc.value.error_estimate > 0.0
        assert abs(exc.value.value - hw.evaluate(2, 1.5j)) < 1e-3

    def test_bad_tol(self):
        with pytest.raises(DomainError):
            hw.stieltjes_transform(2, 2j, 0.0)


class TestChecks:
    @pytest.mark.parametrize("p", [1.2, 2.0, 9.0])
    def test_herglotz_scan_passes(self, p):
        rep = hw.herglotz_scan(p, 2500)
        assert rep.passed
        assert rep.metric >= -1e-12

    def test_scan_sample_count(self):
        rep = hw.herglotz_scan(2, 2500)
        assert rep.params["samples"] >= 2500

    def test_representation_check(self):
        rep = representation_check(2, tol=1e-8)
        assert rep.passed

    def test_symmetry_check(self):
        rep = symmetry_check(2, samples=300)
        assert rep.passed
        assert rep.metric <= 1e-12

    def test_symmetry_is_seeded(self):
        a = symmetry_check(2, samples=100, seed=3)
        b = symmetry_check(2, samples=100, seed=3)
        assert a.metric == b.metric

    @pytest.mark.parametrize("p", [1.5, 2.0, 4.7])
    def test_asymptotics_check(self, p):
        rep = asymptotics_check(p)
        assert rep.passed
        assert rep.details["non_increasing"]

    def test_boundary_consistency_check(self):
        rep = boundary_consistency_check(2, n_points=20)
        assert rep.passed
        assert rep.metric <= 1e-6
        assert "engineering" in rep.details["tolerance_basis"]


class TestExtendedPrecisionCrosscheck:
    def test_f_matches_mp_everywhere(self):
        # random exponents and points in both half-planes against the
        # 50-digit reference; the sharpest branch-correctness check we have
        import mpmath as mp

        from hardyweight.refprec import mp_f

        rng = np.random.default_rng(2)
        for _ in range(25):
            p = float(rng.uniform(1.05, 12.0))
            r = float(np.exp(rng.uniform(np.log(0.05), np.log(200.0))))
            th = float(rng.uniform(0.03, math.pi - 0.03))
            sign = 1.0 if rng.random() < 0.5 else -1.0
            z = complex(r * math.cos(th), sign * r * math.sin(th))
            got = hw.evaluate(p, z)
            with mp.workdps(50):
                want = complex(mp_f(p, z))
            assert abs(got - want) <= 1e-11 * abs(want)

    def test_near_cut_stieltjes_still_converges(self):
        # the transform kernel develops a near-pole as z approaches the cut;
        # the adaptive integrator must either deliver or raise, never drift
        for eps in (1e-3, 1e-6, 1e-9):
            z = complex(0.5, eps)
            v = hw.stieltjes_transform(2, z, 1e-8)
            assert abs(v - hw.evaluate(2, z)) <= 1e-7


class TestSeriesConsistency:
    def test_zero_limit_toward_origin_in_upper_plane(self):
        # both product-form summands vanish as z -> 0 in C+
        for p in (1.5, 2.0, 3.0):
            vals = [abs(hw.evaluate(p, r * 1j)) for r in (1e-2, 1e-4, 1e-6)]
            assert vals[0] > vals[1] > vals[2]
            assert vals[2] < 1e-2
