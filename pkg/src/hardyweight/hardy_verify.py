"""Discrete p-Hardy inequality checks on compactly supported sequences.

Difference form, for phi with phi_0 = 0 and finite support:

    sum_{n>=1} |phi_n - phi_{n-1}|^p  >=  sum_{n>=1} omega(n) |phi_n|^p

with the classical or the optimal weight (or a truncated-series weight, which
is pointwise below the optimal one).  Classical averaged form:

    sum_{n>=1} ((a_1+...+a_n)/n)^p  <=  (p/(p-1))^p sum_{n>=1} a_n^p

for nonnegative a.  The averaged left side extends beyond the support, so it
is summed to a horizon H and closed with the tail bound
S^p H^{1-p} / (p - 1), S = sum a_n; the reported pass is conservative (the
bound is added to the truncated left side).
"""

import functools
import math
from dataclasses import dataclass

import numpy as np

from . import moments, weight
from .complex_core import PairLike, as_pair
from .errors import DomainError
from .report import VerificationReport

__all__ = [
    "CompactSequence",
    "dirichlet_sum",
    "weighted_sum",
    "verify_inequality",
    "classical_averaged_check",
    "random_corpus",
    "tapered_linear",
    "truncated_series_weight",
]

DEFAULT_HORIZON = 10_000
WEIGHT_CHOICES = ("optimal", "classical", "truncated_series")


@dataclass(frozen=True)
class CompactSequence:
    """phi_1..phi_N; phi_0 = 0 and phi_n = 0 beyond N are structural."""

    values: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not all(math.isfinite(v) for v in vals):
            raise DomainError("sequence entries must be finite")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)


def _as_sequence(phi) -> CompactSequence:
    if isinstance(phi, CompactSequence):
        return phi
    return CompactSequence(tuple(phi))


def dirichlet_sum(pair: PairLike, phi) -> float:
    """sum |phi_n - phi_{n-1}|^p including the final drop back to 0."""
    pair = as_pair(pair)
    phi = _as_sequence(phi)
    padded = np.concatenate(([0.0], np.asarray(phi.values), [0.0]))
    return float(np.sum(np.abs(np.diff(padded)) ** pair.p))


def weighted_sum(weight_fn, pair: PairLike, phi) -> float:
    """sum weight(n) |phi_n|^p over the support."""
    pair = as_pair(pair)
    phi = _as_sequence(phi)
    vals = np.asarray(phi.values)
    w = np.array([weight_fn(n) for n in range(1, len(phi) + 1)])
    return float(np.sum(w * np.abs(vals) ** pair.p))


def truncated_series_weight(pair: PairLike, terms: int):
    """Weight n -> sum_{k<=terms} m_{2k} n^{-2k-p}, pointwise below optimal.

    Partial sums of the positive even expansion, so every extra term
    tightens the weight toward the optimal one.
    """
    pair = as_pair(pair)
    mv = moments.even_moments(pair, terms, backend="combinatorial")

    def w(n: int) -> float:
        x2 = 1.0 / (float(n) * float(n))
        acc = 0.0
        for m in reversed(mv.values):
            acc = acc * x2 + m
        return acc / float(n) ** pair.p

    return w


def verify_inequality(pair: PairLike, phi, weight_choice: str = "optimal",
                      series_terms: int = 8) -> VerificationReport:
    """Difference-form inequality for one sequence.

    Reports the slack dirichlet - weighted and the saturation ratio
    weighted / dirichlet; passes iff slack >= -1e-12 * dirichlet.
    """
    pair = as_pair(pair)
    phi = _as_sequence(phi)
    if weight_choice not in WEIGHT_CHOICES:
        raise DomainError(f"unknown weight choice {weight_choice!r}")
    ns = np.arange(1, len(phi) + 1, dtype=float)
    if weight_choice == "optimal":
        w_arr = weight.optimal_weight_values(pair, ns) if len(phi) else ns
    elif weight_choice == "classical":
        w_arr = pair.q_inv ** pair.p / ns ** pair.p
    else:
        per_index = truncated_series_weight(pair, series_terms)
        w_arr = np.array([per_index(n) for n in range(1, len(phi) + 1)])
    wfn = lambda n: float(w_arr[n - 1])
    d = dirichlet_sum(pair, phi)
    w = weighted_sum(wfn, pair, phi)
    slack = d - w
    threshold = -1e-12 * d
    return VerificationReport(
        claim="hardy-inequality",
        params={"p": pair.p, "weight": weight_choice, "support": len(phi)},
        metric=slack,
        threshold=threshold,
        passed=slack >= threshold,
        metric_kind="min_slack",
        details={"dirichlet": d, "weighted": w,
                 "saturation_ratio": (w / d) if d > 0.0 else 0.0},
    )


@functools.lru_cache(maxsize=32)
def _power_sum_prefix(p: float, horizon: int) -> np.ndarray:
    n = np.arange(0, horizon + 1, dtype=float)
    n[0] = 1.0  # unused slot
    out = n ** (-p)
    out[0] = 0.0
    return np.cumsum(out)


def classical_averaged_check(pair: PairLike, a,
                             horizon: int = DEFAULT_HORIZON) -> VerificationReport:
    """Averaged-form inequality for one nonnegative sequence.

    The left side is truncated at ``horizon`` and closed with the documented
    O(H^{1-p}) tail bound; the reported slack subtracts that bound, so a pass
    is conservative.
    """
    pair = as_pair(pair)
    a = np.asarray([float(v) for v in a], dtype=float)
    if a.size and np.min(a) < 0.0:
        raise DomainError("averaged form requires a_n >= 0")
    if not np.all(np.isfinite(a)):
        raise DomainError("sequence entries must be finite")
    p = pair.p
    n_support = a.size
    if horizon < n_support:
        raise DomainError("horizon must cover the support")
    total = float(np.sum(a))
    # within the support: exact partial means
    if n_support:
        means = np.cumsum(a) / np.arange(1, n_support + 1)
        lhs = float(np.sum(means ** p))
    else:
        lhs = 0.0
    # beyond the support the partial sum is constant: (S/n)^p summed to H
    prefix = _power_sum_prefix(p, horizon)
    lhs += total ** p * float(prefix[horizon] - prefix[n_support])
    tail_bound = total ** p * horizon ** (1.0 - p) / (p - 1.0)
    rhs = (p / (p - 1.0)) ** p * float(np.sum(a ** p))
    slack = rhs - lhs - tail_bound
    return VerificationReport(
        claim="hardy-averaged",
        params={"p": pair.p, "support": int(n_support), "horizon": int(horizon)},
        metric=slack,
        threshold=0.0,
        passed=slack >= 0.0,
        metric_kind="min_slack",
        details={"lhs_truncated": lhs, "rhs": rhs, "tail_bound": tail_bound},
    )


def random_corpus(count: int, seed: int, max_support: int = 200) -> list[CompactSequence]:
    """Reproducible heavy-tailed test sequences.

    Signed Pareto-distributed entries over supports of random length; the
    seed belongs in any report produced from the corpus.
    """
    rng = np.random.default_rng(seed)
    corpus = []
    for _ in range(count):
        n = int(rng.integers(1, max_support + 1))
        mags = rng.pareto(1.5, n) + 1.0
        signs = rng.choice([-1.0, 1.0], n)
        corpus.append(CompactSequence(tuple(mags * signs)))
    return corpus


def tapered_linear(ramp: int = 50, taper: int = 50) -> CompactSequence:
    """phi_n = n on the ramp, then a straight taper back to 0.

    Near-harmonic profiles like this one approach saturation of the
    inequality, which makes them a sharp smoke test.
    """
    up = list(range(1, ramp + 1))
    down = [ramp * (1.0 - j / (taper + 1.0)) for j in range(1, taper + 1)]
    return CompactSequence(tuple(float(v) for v in up + down))


def corpus_check(pair: PairLike, count: int = 1000, seed: int = 20260808,
                 weight_choice: str = "optimal",
                 max_support: int = 200) -> VerificationReport:
    """Difference-form inequality over a random corpus plus the tapered family.

    The metric is the worst slack normalized by the Dirichlet sum, which makes
    it scale-invariant across sequences.
    """
    pair = as_pair(pair)
    sequences = random_corpus(count, seed, max_support)
    sequences.append(tapered_linear())
    worst = math.inf
    worst_idx = None
    for i, phi in enumerate(sequences):
        rep = verify_inequality(pair, phi, weight_choice)
        normalized = rep.metric / max(rep.details["dirichlet"], 1e-300)
        if normalized < worst:
            worst = normalized
            worst_idx = i
    return VerificationReport(
        claim="hardy-inequality-corpus",
        params={"p": pair.p, "count": len(sequences), "seed": int(seed),
                "weight": weight_choice},
        metric=worst,
        threshold=-1e-12,
        passed=worst >= -1e-12,
        metric_kind="min_normalized_slack",
        details={"argmin_sequence": worst_idx},
    )


def averaged_corpus_check(pair: PairLike, count: int = 1000, seed: int = 20260808,
                          horizon: int = DEFAULT_HORIZON,
                          max_support: int = 200) -> VerificationReport:
    """Averaged-form inequality over the same corpus (absolute values)."""
    pair = as_pair(pair)
    sequences = random_corpus(count, seed, max_support)
    sequences.append(tapered_linear())
    worst = math.inf
    worst_idx = None
    for i, phi in enumerate(sequences):
        rep = classical_averaged_check(pair, np.abs(phi.values), horizon)
        normalized = rep.metric / max(rep.details["rhs"], 1e-300)
        if normalized < worst:
            worst = normalized
            worst_idx = i
    return VerificationReport(
        claim="hardy-averaged-corpus",
        params={"p": pair.p, "count": len(sequences), "seed": int(seed),
                "horizon": int(horizon)},
        metric=worst,
        threshold=0.0,
        passed=worst >= 0.0,
        metric_kind="min_normalized_slack",
        details={"argmin_sequence": worst_idx},
    )
