"""Boundary density on [0, 1]: evaluation, integer-exponent binomial form,
grids, and positivity scanning.

For exponent pair (p, q) the density is

    rho_p(x) = -(1/pi) x^(p-1) Im (1 - e^{i pi/q} ((1-x)/x)^{1/q})^(p-1)

on (0, 1], with rho_p(0) := lim_{x->0+} rho_p(x) = 0 taken by definition (the
formula itself degenerates there).  Both endpoint values are exactly 0; the
interior is strictly positive.  Near the endpoints the density behaves like
x^((p-1)/p) and (1-x)^(1/q) respectively, which is what the quadrature
endpoint hints elsewhere in the package are built from.
"""

import functools
import math
from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .complex_core import PairLike, as_pair, generalized_binomial
from .errors import DomainError
from .report import VerificationReport

__all__ = [
    "DensityGrid",
    "density",
    "density_values",
    "density_binomial",
    "density_grid",
    "grid_sup",
    "positivity_scan",
]


@dataclass(frozen=True)
class DensityGrid:
    """Sampled density values with node metadata."""

    p: float
    nodes: np.ndarray
    values: np.ndarray
    endpoint_flags: np.ndarray  # True where the node is 0 or 1

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.asarray(self.nodes, dtype=float))
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        object.__setattr__(self, "endpoint_flags", np.asarray(self.endpoint_flags, dtype=bool))


def _check_x(x):
    if not (0.0 <= x <= 1.0) or not math.isfinite(x):
        raise DomainError(f"density is defined on [0, 1], got x={x!r}")


def density(pair: PairLike, x: float) -> float:
    """rho_p(x) for a single x in [0, 1]."""
    pair = as_pair(pair)
    x = float(x)
    _check_x(x)
    return kernels.rho_point(pair.p, x)


def density_values(pair: PairLike, xs) -> np.ndarray:
    """rho_p on an array of nodes in [0, 1]."""
    pair = as_pair(pair)
    xs = np.asarray(xs, dtype=float)
    if xs.size and (np.min(xs) < 0.0 or np.max(xs) > 1.0 or not np.all(np.isfinite(xs))):
        raise DomainError("density nodes must lie in [0, 1]")
    return kernels.rho_values(pair.p, xs)


def density_near_one(pair: PairLike, s) -> float | np.ndarray:
    """rho_p(1 - s) for endpoint distances s, stable down to denormal s.

    Integrands that divide by (1 - x) must be set up in this distance
    variable: the singular neighborhood of x = 1 that still contributes lies
    below double-precision resolution of x itself.
    """
    pair = as_pair(pair)
    scalar = np.isscalar(s)
    ss = np.atleast_1d(np.asarray(s, dtype=float))
    if ss.size and (np.min(ss) < 0.0 or np.max(ss) > 1.0 or not np.all(np.isfinite(ss))):
        raise DomainError("endpoint distances must lie in [0, 1]")
    out = kernels.rho_top_values(pair.p, ss)
    return float(out[0]) if scalar else out


def density_binomial(pair: PairLike, x) -> float | np.ndarray:
    """Binomial-expanded form of the density, integer p >= 2 only.

    rho_p(x) = -(1/pi) sum_{j=0}^{p-1} C(p-1, j) (-1)^j sin(j pi / q)
               (1-x)^{j/q} x^{p-1-j/q}

    An entirely separate evaluation route from :func:`density`, which makes
    their agreement a meaningful cross-check.
    """
    pair = as_pair(pair)
    if not pair.is_integer() or pair.p < 2:
        raise DomainError(f"binomial form needs integer p >= 2, got p={pair.p!r}")
    scalar = np.isscalar(x)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if np.min(xs) < 0.0 or np.max(xs) > 1.0:
        raise DomainError("density nodes must lie in [0, 1]")
    p = int(pair.p)
    qinv = pair.q_inv
    acc = np.zeros_like(xs)
    for j in range(p):
        coeff = generalized_binomial(p - 1, j) * (-1.0) ** j * math.sin(j * math.pi * qinv)
        if coeff == 0.0:
            continue
        acc += coeff * (1.0 - xs) ** (j * qinv) * xs ** (p - 1 - j * qinv)
    out = -acc / math.pi
    return float(out[0]) if scalar else out


def _geometric_wings(n_per_side=10, inner=1e-2, outer=1e-12):
    """Geometrically spaced nodes hugging 0 and 1."""
    w = np.geomspace(inner, outer, n_per_side)
    return np.concatenate((w, 1.0 - w))


def density_grid(pair: PairLike, size: int, kind: str = "refined") -> DensityGrid:
    """Sample the density on a grid of roughly ``size`` nodes.

    ``uniform`` is an evenly spaced grid including both endpoints;
    ``refined`` adds geometric wings toward 0 and 1, where the density has
    algebraic behavior that uniform grids under-resolve.
    """
    pair = as_pair(pair)
    if size < 2:
        raise DomainError(f"grid size must be at least 2, got {size!r}")
    base = np.linspace(0.0, 1.0, size)
    if kind == "refined":
        nodes = np.unique(np.concatenate((base, _geometric_wings())))
    elif kind == "uniform":
        nodes = base
    else:
        raise DomainError(f"unknown grid kind {kind!r}")
    values = kernels.rho_values(pair.p, nodes)
    flags = (nodes == 0.0) | (nodes == 1.0)
    return DensityGrid(pair.p, nodes, values, flags)


@functools.lru_cache(maxsize=64)
def _grid_sup_cached(p: float, size: int) -> float:
    grid = density_grid(p, size, kind="refined")
    return float(np.max(grid.values))


def grid_sup(pair: PairLike, size: int = 1000) -> float:
    """Max of the density over a refined grid; stands in for its sup norm."""
    pair = as_pair(pair)
    return _grid_sup_cached(pair.p, size)


def positivity_scan(pair: PairLike, grid_size: int) -> VerificationReport:
    """Strict positivity of the density at interior nodes.

    The scan uses ``grid_size`` uniform interior points plus geometric
    endpoint refinements, and reports the minimum sampled value.
    """
    pair = as_pair(pair)
    if grid_size < 2:
        raise DomainError(f"grid_size must be at least 2, got {grid_size!r}")
    interior = np.linspace(0.0, 1.0, grid_size + 2)[1:-1]
    nodes = np.unique(np.concatenate((interior, _geometric_wings())))
    values = kernels.rho_values(pair.p, nodes)
    idx = int(np.argmin(values))
    min_value = float(values[idx])
    return VerificationReport(
        claim="density-positivity",
        params={"p": pair.p, "grid_size": grid_size, "nodes": int(nodes.size)},
        metric=min_value,
        threshold=0.0,
        passed=min_value > 0.0,
        metric_kind="min_value",
        details={"argmin_x": float(nodes[idx])},
    )
