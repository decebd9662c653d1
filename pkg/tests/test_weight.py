import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardyweight import (
    HolderPair,
    classical_weight,
    improvement_margin,
    moment_closed_form,
    optimal_weight,
    optimal_weight_values,
    weight_samples,
)
from hardyweight.backend import kernels
from hardyweight.errors import DomainError
from hardyweight.weight import SERIES_THRESHOLD, series_tail_bound

# golden values frozen from a 60-digit direct evaluation of the defining
# expression (independent oracle, see refprec)
OMEGA_2_2 = 0.06814834742186343       # 2 - sqrt(1/2) - sqrt(3/2)
OMEGA_3_1 = 0.6549600041466526        # 1 - (2^(2/3) - 1)^2
OMEGA_15_7 = 0.01045385769247409


class TestClassicalWeight:
    def test_p2_n1(self):
        assert classical_weight(2, 1) == 0.25

    def test_p2_n2(self):
        assert classical_weight(2, 2) == 0.0625

    def test_p3_n1(self):
        assert classical_weight(3, 1) == pytest.approx(8.0 / 27.0, rel=1e-15)

    def test_rejects_small_n(self):
        with pytest.raises(DomainError):
            classical_weight(2, 0)


class TestOptimalWeight:
    def test_p2_n1_exact_form(self):
        assert optimal_weight(2, 1) == pytest.approx(2.0 - math.sqrt(2.0), abs=1e-15)

    def test_p2_n2(self):
        got = optimal_weight(2, 2)
        assert got == pytest.approx(OMEGA_2_2, abs=1e-16)
        assert got == pytest.approx(2.0 - math.sqrt(0.5) - math.sqrt(1.5), abs=1e-15)

    def test_p3_n1(self):
        assert optimal_weight(3, 1) == pytest.approx(OMEGA_3_1, abs=5e-16)
        assert optimal_weight(3, 1) == pytest.approx(1.0 - (2.0 ** (2.0 / 3.0) - 1.0) ** 2,
                                                     abs=1e-15)

    def test_fractional_p(self):
        assert optimal_weight(1.5, 7) == pytest.approx(OMEGA_15_7, abs=1e-17)

    def test_rejects_small_n(self):
        with pytest.raises(DomainError):
            optimal_weight(2, 0.5)

    def test_real_n_accepted(self):
        # the weight extends naturally to real n >= 1
        assert optimal_weight(2, 2.5) > 0.0

    def test_vectorized_matches_scalar(self):
        ns = np.array([1.0, 2.0, 7.0, 100.0, 9999.0])
        vals = optimal_weight_values(2, ns)
        for n, v in zip(ns, vals):
            assert v == optimal_weight(2, n)


class TestSeriesSwitch:
    def test_continuity_across_threshold(self):
        # direct evaluation just below the switch agrees with the series
        # evaluation just above to far better than the direct-route noise
        for p in (1.5, 2.0, 3.0, 4.7):
            below = optimal_weight(p, SERIES_THRESHOLD)
            above = optimal_weight(p, SERIES_THRESHOLD + 1.0)
            ratio = below / above
            # omega is smooth and slowly varying: neighboring indices differ
            # by a factor 1 + O(p/n)
            assert abs(ratio - 1.0) < 3.0 * p / SERIES_THRESHOLD

    def test_series_agrees_with_direct_at_threshold(self):
        for p in (1.5, 2.0, 3.0):
            direct = kernels.omega_point(p, SERIES_THRESHOLD)
            series = optimal_weight(p, SERIES_THRESHOLD, series_threshold=1.0)
            assert series == pytest.approx(direct, rel=1e-10)

    def test_tail_bound_is_tiny_beyond_threshold(self):
        assert series_tail_bound(2, 1e4) < 1e-80

    def test_large_n_limit(self):
        # n^p omega(n) -> m0, correction m2/n^2
        for p in (1.5, 2.0, 5.0):
            m0 = moment_closed_form(p, 0)
            m2 = moment_closed_form(p, 1)
            n = 1.0e6
            scaled = optimal_weight(p, n) * n ** p
            assert scaled == pytest.approx(m0 + m2 / n ** 2, rel=1e-13)
            assert abs(scaled - m0) / m0 < 1e-5

    def test_p2_megapoint_golden(self):
        # frozen from the 60-digit oracle: omega_2(10^6) * 10^12
        assert optimal_weight(2, 1e6) * 1e12 == pytest.approx(0.250000000000078125,
                                                              rel=1e-15)


class TestImprovement:
    def test_margin_p2_n1(self):
        rep = improvement_margin(2, 1)
        assert rep.passed
        assert rep.metric == pytest.approx(2.0 - math.sqrt(2.0) - 0.25, abs=1e-15)

    def test_margin_p2_wide(self):
        rep = improvement_margin(2, 10_000)
        assert rep.passed
        assert rep.metric > 0.0

    def test_margin_p15(self):
        assert improvement_margin(1.5, 1000).passed

    @given(p=st.floats(1.05, 9.0), n=st.integers(1, 500))
    @settings(max_examples=200, deadline=None)
    def test_pointwise_improvement(self, p, n):
        assert optimal_weight(p, n) > classical_weight(p, n)

    def test_report_records_argmin(self):
        rep = improvement_margin(2, 100)
        assert rep.details["argmin_n"] == 100  # margin shrinks like n^{-p-2}


class TestSamplesAndConsistency:
    def test_weight_samples_rows(self):
        rows = weight_samples(2, [1, 2])
        assert rows[0].n == 1
        assert rows[0].omega_opt == pytest.approx(2.0 - math.sqrt(2.0), abs=1e-15)
        assert rows[0].omega_classical == 0.25
        assert rows[0].ratio == pytest.approx(rows[0].omega_opt / 0.25, rel=1e-15)

    def test_sample_invariant_opt_above_classical(self):
        for s in weight_samples(4.7, range(1, 200)):
            assert s.omega_opt > s.omega_classical > 0.0

    def test_matches_herglotz_real_axis(self):
        # omega(n) = -f(n)/n^{p-1} on the real axis beyond the cut
        from hardyweight import evaluate

        for p in (1.5, 2.0, 3.0, 4.7):
            pair = HolderPair(p)
            for n in (2.0, 5.0, 10.0, 100.0, 5000.0):
                lhs = optimal_weight(pair, n)
                rhs = -evaluate(pair, complex(n, 0.0)).real / n ** (p - 1.0)
                assert rhs == pytest.approx(lhs, rel=1e-12)
