"""Extended-precision reference evaluations (mpmath).

Direct transcriptions of the defining formulas at configurable precision.
They are deliberately independent of the double-precision kernels: the tests
use them to freeze golden values, and the absolute-monotonicity check uses
them to take high-order finite differences without drowning in subtractive
cancellation.
"""

import mpmath as mp

from .complex_core import PairLike, as_pair

__all__ = [
    "mp_omega",
    "mp_rescaled_weight",
    "mp_rho",
    "mp_f",
    "central_difference",
]


def mp_omega(pair: PairLike, n) -> mp.mpf:
    """Optimal weight at real n >= 1, arbitrary precision."""
    pair = as_pair(pair)
    p = mp.mpf(pair.p)
    n = mp.mpf(n)
    qinv = (p - 1) / p
    t1 = (1 - (1 - 1 / n) ** qinv) ** (p - 1)
    t2 = ((1 + 1 / n) ** qinv - 1) ** (p - 1)
    return t1 - t2


def mp_rescaled_weight(pair: PairLike, x) -> mp.mpf:
    """x^{-p} omega_p(1/x) for x in (0, 1], the absolutely monotonic function."""
    pair = as_pair(pair)
    x = mp.mpf(x)
    return mp_omega(pair, 1 / x) / x ** mp.mpf(pair.p)


def mp_rho(pair: PairLike, x) -> mp.mpf:
    """Boundary density at x in [0, 1], arbitrary precision."""
    pair = as_pair(pair)
    p = mp.mpf(pair.p)
    x = mp.mpf(x)
    if x == 0 or x == 1:
        return mp.mpf(0)
    q = p / (p - 1)
    t = (1 / x - 1) ** (1 / q)
    w = 1 - mp.e ** (1j * mp.pi / q) * t
    return -(1 / mp.pi) * x ** (p - 1) * mp.im(w ** (p - 1))


def mp_f(pair: PairLike, z) -> mp.mpc:
    """Definition-form Herglotz evaluation at complex z off the cut."""
    pair = as_pair(pair)
    p = mp.mpf(pair.p)
    z = mp.mpc(z)
    q = p / (p - 1)
    a = (1 + 1 / z) ** (1 / q) - 1
    b = 1 - (1 - 1 / z) ** (1 / q)
    return z ** (p - 1) * (a ** (p - 1) - b ** (p - 1))


def central_difference(func, x, order: int, h, dps: int | None = None) -> float:
    """Central finite difference of a given order at extended precision.

    ``func`` must accept an mpf and return one.  The working precision
    defaults to 35 + 7*order digits, generously covering the ~order*log10(1/h)
    digits lost to cancellation in the difference stencil.
    """
    if order == 0:
        return float(func(mp.mpf(x)))
    if dps is None:
        dps = 35 + 7 * order
    with mp.workdps(dps):
        x = mp.mpf(x)
        h = mp.mpf(h)
        acc = mp.mpf(0)
        for i in range(order + 1):
            node = x + (mp.mpf(order) / 2 - i) * h
            acc += (-1) ** i * mp.binomial(order, i) * func(node)
        return float(acc / h ** order)
