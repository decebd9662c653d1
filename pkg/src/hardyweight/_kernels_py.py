"""Pure-Python/NumPy evaluation kernels.

This module is the fallback twin of the compiled extension ``_kernels_cy``;
both expose an identical surface, selected at import time by
:mod:`hardyweight.backend`.  Everything here is branch-careful double
arithmetic:

* complex powers always use the principal branch, Arg in (-pi, pi];
* the near-one inner quantities ``(1 +- 1/z)^(1/q) - 1`` are computed through
  complex log1p/expm1 analogues so no digits are lost to the additive 1;
* the boundary density is evaluated in the log domain, which keeps the
  formula stable for x arbitrarily close to 0 (where the auxiliary quantity
  ((1-x)/x)^(1/q) overflows long before the density itself does).

Scalar kernels mirror the compiled code operation for operation; the
``*_values`` variants are vectorized with NumPy.
"""

import math

import numpy as np

BACKEND = "python"

_PRODUCT_ROUTE_RADIUS = 2.0  # |z| above which the product form is used


# ---------------------------------------------------------------------------
# scalar complex helpers (component arithmetic, principal branch throughout)
# ---------------------------------------------------------------------------

def _clog1p(u):
    """log(1 + u) for complex u without cancellation near u = 0."""
    w = 1.0 + u
    d = w - 1.0
    if d == 0.0:
        # 1 + u rounded to 1: first-order result is exact to working precision
        return u
    wre = w.real
    wim = w.imag
    dre = d.real
    dim = d.imag
    # |w|^2 - 1 expressed through d = fl(1+u) - 1, exact in double arithmetic
    log_abs = 0.5 * math.log1p(2.0 * dre + dre * dre + dim * dim)
    base = complex(log_abs, math.atan2(wim, wre))
    if d == u:
        return base
    return base * (u / d)


def _cexpm1(v):
    """exp(v) - 1 for complex v without cancellation near v = 0."""
    ex = math.expm1(v.real)
    cy = math.cos(v.imag)
    sy = math.sin(v.imag)
    half = math.sin(0.5 * v.imag)
    return complex(ex * cy - 2.0 * half * half, (ex + 1.0) * sy)


def _cpow(w, a):
    """Principal-branch w**a for complex w, real a > 0."""
    r = math.hypot(w.real, w.imag)
    if r == 0.0:
        return complex(0.0, 0.0)
    th = math.atan2(w.imag, w.real)
    m = r ** a
    ath = a * th
    return complex(m * math.cos(ath), m * math.sin(ath))


# ---------------------------------------------------------------------------
# boundary density
# ---------------------------------------------------------------------------

def _w_polar_logt(p, log_t):
    """(log|w|, Arg w) for w = 1 - e^{i pi/q} t given log t.

    Both branches share |w|^2 = 1 + s(s - 2c) after scaling by the larger of
    t and 1/t, so the computation never overflows.
    """
    a = (p - 1.0) / p  # 1/q
    piq = math.pi * a
    c = math.cos(piq)
    s = math.sin(piq)
    st = math.exp(-abs(log_t))
    core = 0.5 * math.log1p(st * (st - 2.0 * c))
    if log_t > 0.0:
        return log_t + core, math.atan2(-s, st - c)
    return core, math.atan2(-st * s, 1.0 - st * c)


def _w_polar(p, x):
    if x == 1.0:
        return 0.0, -0.0
    a = (p - 1.0) / p
    return _w_polar_logt(p, a * (math.log1p(-x) - math.log(x)))


def rho_point(p, x):
    """Density at a single x in [0, 1]; endpoints return the limit value 0."""
    if x == 0.0 or x == 1.0:
        return 0.0
    log_abs, phi = _w_polar(p, x)
    pm1 = p - 1.0
    return -math.exp(pm1 * (math.log(x) + log_abs)) * math.sin(pm1 * phi) / math.pi


def rho_top_point(p, s):
    """Density at x = 1 - s, stable for s down to the denormal range.

    Near x = 1 the density scales like s^{1/q}; integrands that divide by
    (1 - x) need this endpoint-distance form because 1 - s collapses to 1 in
    double arithmetic long before the integrand stops contributing.
    """
    if s == 0.0 or s == 1.0:
        return 0.0
    a = (p - 1.0) / p
    log_t = a * (math.log(s) - math.log1p(-s))
    log_abs, phi = _w_polar_logt(p, log_t)
    pm1 = p - 1.0
    return -math.exp(pm1 * (math.log1p(-s) + log_abs)) * math.sin(pm1 * phi) / math.pi


def rho_values(p, xs):
    """Vectorized density on nodes in [0, 1]."""
    xs = np.asarray(xs, dtype=np.float64)
    out = np.zeros_like(xs)
    interior = (xs > 0.0) & (xs < 1.0)
    if not np.any(interior):
        return out
    x = xs[interior]
    a = (p - 1.0) / p
    piq = math.pi * a
    c = math.cos(piq)
    s = math.sin(piq)
    log_t = a * (np.log1p(-x) - np.log(x))
    st = np.exp(-np.abs(log_t))
    core = 0.5 * np.log1p(st * (st - 2.0 * c))
    log_abs = np.maximum(log_t, 0.0) + core
    phi = np.where(
        log_t > 0.0,
        np.arctan2(-s, st - c),
        np.arctan2(-st * s, 1.0 - st * c),
    )
    pm1 = p - 1.0
    out[interior] = -np.exp(pm1 * (np.log(x) + log_abs)) * np.sin(pm1 * phi) / math.pi
    return out


def rho_top_values(p, ss):
    """Vectorized density at x = 1 - s for endpoint distances s in [0, 1]."""
    ss = np.asarray(ss, dtype=np.float64)
    out = np.zeros_like(ss)
    interior = (ss > 0.0) & (ss < 1.0)
    if not np.any(interior):
        return out
    s_arr = ss[interior]
    a = (p - 1.0) / p
    piq = math.pi * a
    c = math.cos(piq)
    s = math.sin(piq)
    log_t = a * (np.log(s_arr) - np.log1p(-s_arr))
    st = np.exp(-np.abs(log_t))
    core = 0.5 * np.log1p(st * (st - 2.0 * c))
    log_abs = np.maximum(log_t, 0.0) + core
    phi = np.where(
        log_t > 0.0,
        np.arctan2(-s, st - c),
        np.arctan2(-st * s, 1.0 - st * c),
    )
    pm1 = p - 1.0
    out[interior] = -np.exp(pm1 * (np.log1p(-s_arr) + log_abs)) * np.sin(pm1 * phi) / math.pi
    return out


def boundary_point(p, x):
    """Limit of the Herglotz function from the upper half-plane at x in (0, 1]."""
    pm1 = p - 1.0
    qinv = pm1 / p
    # real summand: x^{p-1} ((1+1/x)^{1/q} - 1)^{p-1}, log domain
    t1 = math.expm1(qinv * math.log1p(1.0 / x))
    re1 = math.exp(pm1 * (math.log(x) + math.log(t1)))
    log_abs, phi = _w_polar(p, x)
    mag = math.exp(pm1 * (math.log(x) + log_abs))
    ath = pm1 * phi
    return complex(re1 - mag * math.cos(ath), -mag * math.sin(ath))


# ---------------------------------------------------------------------------
# weight on the real axis
# ---------------------------------------------------------------------------

def omega_point(p, x):
    """Direct two-term weight evaluation at real x >= 1."""
    qinv = (p - 1.0) / p
    if x == 1.0:
        b = 1.0  # inner base (1 - 1/x) is exactly 0
    else:
        b = -math.expm1(qinv * math.log1p(-1.0 / x))
    a = math.expm1(qinv * math.log1p(1.0 / x))
    pm1 = p - 1.0
    return b ** pm1 - a ** pm1


def omega_values(p, xs):
    """Vectorized direct weight on real nodes >= 1."""
    xs = np.asarray(xs, dtype=np.float64)
    qinv = (p - 1.0) / p
    inv = 1.0 / xs
    one = xs == 1.0
    b = np.empty_like(xs)
    b[one] = 1.0
    b[~one] = -np.expm1(qinv * np.log1p(-inv[~one]))
    a = np.expm1(qinv * np.log1p(inv))
    pm1 = p - 1.0
    return b ** pm1 - a ** pm1


# ---------------------------------------------------------------------------
# Herglotz function off the real axis
# ---------------------------------------------------------------------------

def f_def_point(p, z):
    """Definition-form evaluation, valid for Im z != 0."""
    pm1 = p - 1.0
    qinv = pm1 / p
    u = 1.0 / z
    A = _cexpm1(qinv * _clog1p(u))
    B = -_cexpm1(qinv * _clog1p(-u))
    return _cpow(z, pm1) * (_cpow(A, pm1) - _cpow(B, pm1))


def f_prod_point(p, z):
    """Product-form evaluation, valid on the upper half-plane."""
    pm1 = p - 1.0
    qinv = pm1 / p
    u = 1.0 / z
    A = z * _cexpm1(qinv * _clog1p(u))
    B = -z * _cexpm1(qinv * _clog1p(-u))
    return _cpow(A, pm1) - _cpow(B, pm1)


def f_upper_point(p, z):
    """Upper-half-plane evaluation with automatic route selection."""
    if abs(z) > _PRODUCT_ROUTE_RADIUS:
        return f_prod_point(p, z)
    return f_def_point(p, z)


def _vclog1p(u):
    w = 1.0 + u
    d = w - 1.0
    dre = d.real
    dim = d.imag
    log_abs = 0.5 * np.log1p(2.0 * dre + dre * dre + dim * dim)
    base = log_abs + 1j * np.arctan2(w.imag, w.real)
    safe = np.where(d == 0.0, 1.0, d)
    out = np.where(d == u, base, base * (u / safe))
    return np.where(d == 0.0, u, out)


def _vcexpm1(v):
    ex = np.expm1(v.real)
    sy = np.sin(v.imag)
    half = np.sin(0.5 * v.imag)
    return (ex * np.cos(v.imag) - 2.0 * half * half) + 1j * ((ex + 1.0) * sy)


def _vcpow(w, a):
    m = np.abs(w) ** a
    th = np.arctan2(w.imag, w.real)
    ath = a * th
    return m * np.cos(ath) + 1j * (m * np.sin(ath))


def f_upper_values(p, zs):
    """Vectorized upper-half-plane evaluation with per-point route selection."""
    zs = np.asarray(zs, dtype=np.complex128)
    pm1 = p - 1.0
    qinv = pm1 / p
    u = 1.0 / zs
    A = _vcexpm1(qinv * _vclog1p(u))
    B = -_vcexpm1(qinv * _vclog1p(-u))
    out = np.empty(zs.shape, dtype=np.complex128)
    prod = np.abs(zs) > _PRODUCT_ROUTE_RADIUS
    if np.any(prod):
        zp = zs[prod]
        out[prod] = _vcpow(zp * A[prod], pm1) - _vcpow(zp * B[prod], pm1)
    rest = ~prod
    if np.any(rest):
        zr = zs[rest]
        out[rest] = _vcpow(zr, pm1) * (_vcpow(A[rest], pm1) - _vcpow(B[rest], pm1))
    return out
