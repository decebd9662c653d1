import math

import numpy as np
import pytest

from hardyweight.errors import DomainError
from hardyweight.quadrature import integrate

# (integrand, a, b, hint, exact): the built-in oracle set
ORACLES = [
    (lambda t: t * t, -1.0, 1.0, None, 2.0 / 3.0),
    (lambda t: np.sqrt(t * (1.0 - t)) / np.pi, 0.0, 1.0, (0.5, 0.5), 0.125),
    (lambda t: 1.0 / np.sqrt(t), 0.0, 1.0, (-0.5, None), 2.0),
    (lambda t: np.exp(t) * np.cos(3 * t), 0.0, 2.0, None,
     (math.exp(2) * (math.cos(6) + 3 * math.sin(6)) - 1.0) / 10.0),
]


def test_polynomial_exactness():
    # the embedded Gauss rule is exact through degree 13
    for d in range(14):
        exact = (1.0 - (-1.0) ** (d + 1)) / (d + 1)
        res = integrate(lambda t, d=d: t ** d, -1.0, 1.0, 1e-12)
        assert res.converged
        assert abs(res.value - exact) <= 1e-14 * max(1.0, abs(exact))


def test_semicircle_mass():
    res = integrate(lambda t: np.sqrt(t * (1.0 - t)) / np.pi, 0.0, 1.0, 1e-12,
                    endpoint_hint=(0.5, 0.5))
    assert res.converged
    assert res.value == pytest.approx(0.125, abs=1e-12)


def test_inverse_sqrt_with_hint():
    res = integrate(lambda t: 1.0 / np.sqrt(t), 0.0, 1.0, 1e-10,
                    endpoint_hint=(-0.5, None))
    assert res.converged
    assert res.value == pytest.approx(2.0, abs=1e-10)


def test_hint_reduces_subdivision_effort():
    raw = integrate(lambda t: t ** 0.2, 0.0, 1.0, 1e-12)
    hinted = integrate(lambda t: t ** 0.2, 0.0, 1.0, 1e-12, endpoint_hint=(0.2, None))
    assert hinted.converged
    assert hinted.subdivisions < raw.subdivisions


def test_complex_integrand():
    res = integrate(lambda t: np.exp(1j * t), 0.0, 1.0, 1e-12)
    assert res.converged
    want = complex(math.sin(1.0), 1.0 - math.cos(1.0))
    assert abs(res.value - want) <= 1e-12


def test_converged_respects_tolerance_contract():
    for f, a, b, hint, exact in ORACLES:
        res = integrate(f, a, b, 1e-9, endpoint_hint=hint)
        assert res.converged
        assert res.error_estimate <= 1e-9
        assert abs(res.value - exact) <= res.error_estimate + 1e-15


def test_monotone_refinement():
    # halving the tolerance never worsens the true error beyond noise
    for f, a, b, hint, exact in ORACLES:
        tol = 1e-4
        prev_err = math.inf
        for _ in range(10):
            res = integrate(f, a, b, tol, endpoint_hint=hint)
            err = abs(res.value - exact)
            assert err <= max(prev_err, 1e-14)
            prev_err = max(err, 1e-14)
            tol /= 2.0


def test_even_integrand_fold():
    # two-sided integral of g(|t|) h(t^2) equals twice the folded one
    def g(u):
        return np.sqrt(u * (1.0 - u))

    def two_sided(t):
        return g(np.abs(t)) / (1.0 + t * t)

    full = integrate(two_sided, -1.0, 1.0, 1e-13)
    half = integrate(lambda t: g(t) / (1.0 + t * t), 0.0, 1.0, 1e-13)
    assert full.converged and half.converged
    assert abs(full.value - 2.0 * half.value) <= 1e-12


def test_interior_kink_without_budget_fails_gracefully():
    f = lambda t: np.abs(t - 0.31) ** (-0.5)
    res = integrate(f, 0.0, 1.0, 1e-13, max_panels=16)
    assert not res.converged
    assert res.error_estimate > 0.0
    # the estimate is still a sane bracket of the truth
    exact = 2.0 * (math.sqrt(0.31) + math.sqrt(0.69))
    assert abs(res.value - exact) <= 10.0 * res.error_estimate


def test_relative_tolerance_mode():
    res = integrate(lambda t: 1e8 * t * t, 0.0, 1.0, 1e-300, rel_tol=1e-12)
    assert res.converged
    assert res.value == pytest.approx(1e8 / 3.0, rel=1e-11)


def test_domain_errors():
    with pytest.raises(DomainError):
        integrate(lambda t: t, 1.0, 0.0, 1e-8)
    with pytest.raises(DomainError):
        integrate(lambda t: t, 0.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        integrate(lambda t: t, 0.0, 1.0, 1e-8, endpoint_hint=(-1.5, None))


def test_nodes_stay_strictly_interior():
    seen = []

    def f(t):
        seen.append((float(np.min(t)), float(np.max(t))))
        return np.sqrt(t)

    integrate(f, 0.0, 1.0, 1e-10, endpoint_hint=(0.5, None))
    lo = min(s[0] for s in seen)
    hi = max(s[1] for s in seen)
    assert lo > 0.0
    assert hi < 1.0
