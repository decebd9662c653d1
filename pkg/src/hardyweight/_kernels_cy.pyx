# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels.

Scalar-for-scalar transliteration of ``_kernels_py``; see that module for the
numerical rationale (principal branches, complex log1p/expm1, log-domain
density).  The hot loops here run without the interpreter in the way, which
is what the adaptive quadrature and the half-plane scans feed on.
"""

from libc.math cimport M_PI, atan2, cos, exp, expm1, fabs, hypot, log, log1p, sin

import numpy as np

BACKEND = "compiled"

cdef double _PRODUCT_ROUTE_RADIUS = 2.0


# ---------------------------------------------------------------------------
# complex helpers
# ---------------------------------------------------------------------------

cdef inline double complex _clog1p(double complex u) noexcept nogil:
    cdef double complex w = 1.0 + u
    cdef double complex d = w - 1.0
    cdef double complex base
    cdef double dre, dim
    if d == 0.0 + 0.0j:
        return u
    dre = d.real
    dim = d.imag
    base = 0.5 * log1p(2.0 * dre + dre * dre + dim * dim) + 1j * atan2(w.imag, w.real)
    if d == u:
        return base
    return base * (u / d)


cdef inline double complex _cexpm1(double complex v) noexcept nogil:
    cdef double ex = expm1(v.real)
    cdef double sy = sin(v.imag)
    cdef double half = sin(0.5 * v.imag)
    return (ex * cos(v.imag) - 2.0 * half * half) + 1j * ((ex + 1.0) * sy)


cdef inline double complex _cpow(double complex w, double a) noexcept nogil:
    cdef double r = hypot(w.real, w.imag)
    cdef double th, m, ath
    if r == 0.0:
        return 0.0 + 0.0j
    th = atan2(w.imag, w.real)
    m = r ** a
    ath = a * th
    return m * cos(ath) + 1j * (m * sin(ath))


# ---------------------------------------------------------------------------
# boundary density
# ---------------------------------------------------------------------------

cdef inline void _w_polar_logt(double p, double log_t, double* log_abs, double* phi) noexcept nogil:
    cdef double a = (p - 1.0) / p
    cdef double piq = M_PI * a
    cdef double c = cos(piq)
    cdef double s = sin(piq)
    cdef double st, core
    st = exp(-fabs(log_t))
    core = 0.5 * log1p(st * (st - 2.0 * c))
    if log_t > 0.0:
        log_abs[0] = log_t + core
        phi[0] = atan2(-s, st - c)
    else:
        log_abs[0] = core
        phi[0] = atan2(-st * s, 1.0 - st * c)


cdef inline void _w_polar(double p, double x, double* log_abs, double* phi) noexcept nogil:
    cdef double a = (p - 1.0) / p
    if x == 1.0:
        log_abs[0] = 0.0
        phi[0] = -0.0
        return
    _w_polar_logt(p, a * (log1p(-x) - log(x)), log_abs, phi)


cdef inline double _rho(double p, double x) noexcept nogil:
    cdef double log_abs, phi, pm1
    if x == 0.0 or x == 1.0:
        return 0.0
    _w_polar(p, x, &log_abs, &phi)
    pm1 = p - 1.0
    return -exp(pm1 * (log(x) + log_abs)) * sin(pm1 * phi) / M_PI


cdef inline double _rho_top(double p, double s) noexcept nogil:
    cdef double a, log_abs, phi, pm1
    if s == 0.0 or s == 1.0:
        return 0.0
    a = (p - 1.0) / p
    _w_polar_logt(p, a * (log(s) - log1p(-s)), &log_abs, &phi)
    pm1 = p - 1.0
    return -exp(pm1 * (log1p(-s) + log_abs)) * sin(pm1 * phi) / M_PI


def rho_point(double p, double x):
    """Density at a single x in [0, 1]; endpoints return the limit value 0."""
    return _rho(p, x)


def rho_values(double p, xs):
    """Vectorized density on nodes in [0, 1]."""
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(xv.shape[0]):
            ov[i] = _rho(p, xv[i])
    return out


def rho_top_point(double p, double s):
    """Density at x = 1 - s, stable for s down to the denormal range."""
    return _rho_top(p, s)


def rho_top_values(double p, ss):
    """Vectorized density at x = 1 - s for endpoint distances s in [0, 1]."""
    cdef double[::1] sv = np.ascontiguousarray(ss, dtype=np.float64)
    out = np.empty(sv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(sv.shape[0]):
            ov[i] = _rho_top(p, sv[i])
    return out


def boundary_point(double p, double x):
    """Limit of the Herglotz function from the upper half-plane at x in (0, 1]."""
    cdef double pm1 = p - 1.0
    cdef double qinv = pm1 / p
    cdef double t1 = expm1(qinv * log1p(1.0 / x))
    cdef double re1 = exp(pm1 * (log(x) + log(t1)))
    cdef double log_abs, phi, mag, ath
    _w_polar(p, x, &log_abs, &phi)
    mag = exp(pm1 * (log(x) + log_abs))
    ath = pm1 * phi
    return complex(re1 - mag * cos(ath), -mag * sin(ath))


# ---------------------------------------------------------------------------
# weight on the real axis
# ---------------------------------------------------------------------------

cdef inline double _omega(double p, double x) noexcept nogil:
    cdef double qinv = (p - 1.0) / p
    cdef double pm1 = p - 1.0
    cdef double a, b
    if x == 1.0:
        b = 1.0
    else:
        b = -expm1(qinv * log1p(-1.0 / x))
    a = expm1(qinv * log1p(1.0 / x))
    return b ** pm1 - a ** pm1


def omega_point(double p, double x):
    """Direct two-term weight evaluation at real x >= 1."""
    return _omega(p, x)


def omega_values(double p, xs):
    """Vectorized direct weight on real nodes >= 1."""
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(xv.shape[0]):
            ov[i] = _omega(p, xv[i])
    return out


# ---------------------------------------------------------------------------
# Herglotz function off the real axis
# ---------------------------------------------------------------------------

cdef inline double complex _f_def(double p, double complex z) noexcept nogil:
    cdef double pm1 = p - 1.0
    cdef double qinv = pm1 / p
    cdef double complex u = 1.0 / z
    cdef double complex A = _cexpm1(qinv * _clog1p(u))
    cdef double complex B = -_cexpm1(qinv * _clog1p(-u))
    return _cpow(z, pm1) * (_cpow(A, pm1) - _cpow(B, pm1))


cdef inline double complex _f_prod(double p, double complex z) noexcept nogil:
    cdef double pm1 = p - 1.0
    cdef double qinv = pm1 / p
    cdef double complex u = 1.0 / z
    cdef double complex A = z * _cexpm1(qinv * _clog1p(u))
    cdef double complex B = -z * _cexpm1(qinv * _clog1p(-u))
    return _cpow(A, pm1) - _cpow(B, pm1)


cdef inline double complex _f_upper(double p, double complex z) noexcept nogil:
    if hypot(z.real, z.imag) > _PRODUCT_ROUTE_RADIUS:
        return _f_prod(p, z)
    return _f_def(p, z)


def f_def_point(double p, double complex z):
    """Definition-form evaluation, valid for Im z != 0."""
    return _f_def(p, z)


def f_prod_point(double p, double complex z):
    """Product-form evaluation, valid on the upper half-plane."""
    return _f_prod(p, z)


def f_upper_point(double p, double complex z):
    """Upper-half-plane evaluation with automatic route selection."""
    return _f_upper(p, z)


def f_upper_values(double p, zs):
    """Vectorized upper-half-plane evaluation with per-point route selection."""
    cdef double complex[::1] zv = np.ascontiguousarray(zs, dtype=np.complex128)
    out = np.empty(zv.shape[0], dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(zv.shape[0]):
            ov[i] = _f_upper(p, zv[i])
    return out
