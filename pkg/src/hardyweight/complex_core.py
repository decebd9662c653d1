"""Principal-branch complex arithmetic and small special-function primitives.

Complex numbers are plain :class:`complex`; a point's Cartesian fields are
``z.real``/``z.imag`` and its half-plane membership is classified by
:func:`region`.  The power function fixes Arg in (-pi, pi], so the negative
real axis belongs to the upper-half-plane continuation: inputs with a signed
zero imaginary part are normalized to +0 before the argument is taken.
"""

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError

__all__ = [
    "HolderPair",
    "Region",
    "region",
    "ensure_finite",
    "principal_pow",
    "pochhammer",
    "generalized_binomial",
]


class Region(enum.Enum):
    """Location of a point relative to the real axis."""

    UPPER_HALF_PLANE = "upper"
    LOWER_HALF_PLANE = "lower"
    REAL_AXIS = "real"


def region(z: complex) -> Region:
    if z.imag > 0.0:
        return Region.UPPER_HALF_PLANE
    if z.imag < 0.0:
        return Region.LOWER_HALF_PLANE
    return Region.REAL_AXIS


def ensure_finite(z: complex, what: str = "z") -> complex:
    """Reject NaN/infinite components before they enter any kernel."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{what} must have finite components, got {z!r}")
    return z


@dataclass(frozen=True)
class HolderPair:
    """A validated Holder-conjugate exponent pair (p, q) with 1/p + 1/q = 1.

    Only p is stored; q is always derived, so the conjugacy constraint cannot
    drift.
    """

    p: float

    def __post_init__(self):
        p = float(self.p)
        if not math.isfinite(p) or p <= 1.0:
            raise DomainError(f"exponent p must satisfy p > 1, got {self.p!r}")
        object.__setattr__(self, "p", p)

    @property
    def q(self) -> float:
        """Conjugate exponent q = p / (p - 1)."""
        return self.p / (self.p - 1.0)

    @property
    def q_inv(self) -> float:
        """1/q = (p - 1) / p, the exponent that appears inside the weight."""
        return (self.p - 1.0) / self.p

    def is_integer(self) -> bool:
        return self.p == int(self.p)


PairLike = HolderPair | float | int


def as_pair(p: PairLike) -> HolderPair:
    """Coerce a bare exponent into a validated pair."""
    if isinstance(p, HolderPair):
        return p
    return HolderPair(float(p))


def principal_pow(z: complex, alpha: float) -> complex:
    """z**alpha on the principal branch, |z|^alpha * exp(i alpha Arg z).

    Arg z lies in (-pi, pi]; points on the negative real axis take Arg = +pi
    regardless of the sign of a zero imaginary part.  The convention
    0**alpha = 0 holds for every alpha > 0.
    """
    if not (alpha > 0.0) or not math.isfinite(alpha):
        raise DomainError(f"alpha must be a positive real, got {alpha!r}")
    z = ensure_finite(z)
    if z == 0:
        return complex(0.0, 0.0)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)  # -0j -> +0j keeps Arg = +pi on the cut
    r = math.hypot(z.real, z.imag)
    theta = math.atan2(z.imag, z.real)
    m = r ** alpha
    a = alpha * theta
    return complex(m * math.cos(a), m * math.sin(a))


def pochhammer(alpha: float, n: int) -> float:
    """Rising factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1), (alpha)_0 = 1.

    Computed as a direct product; n stays small here (a few hundred at most),
    so no gamma-function detour is needed.
    """
    if n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    out = 1.0
    for i in range(n):
        out *= alpha + i
    return out


def generalized_binomial(alpha: float, k: int) -> float:
    """Generalized binomial coefficient alpha (alpha-1) ... (alpha-k+1) / k!.

    Nonnegative integer alpha goes through exact integer arithmetic, so the
    classical coefficients are reproduced exactly (up to the 2**53 float
    ceiling); everything else is a direct ratio-product loop.
    """
    if k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    if alpha >= 0 and alpha == int(alpha):
        return float(math.comb(int(alpha), k))
    out = 1.0
    for i in range(k):
        out *= (alpha - i) / (i + 1)
    return out
