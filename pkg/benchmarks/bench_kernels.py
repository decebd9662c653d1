#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the NumPy fallback.

Measures the shapes that matter in production:

* 15-node panels: what the adaptive quadrature feeds the density kernel
  (per-call latency dominates);
* bulk arrays: half-plane scans and grid tabulations (throughput);
* one full Stieltjes transform: the end-to-end effect.

Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from hardyweight import _kernels_py

try:
    from hardyweight import _kernels_cy
except ImportError:
    _kernels_cy = None

P = 2.7
RNG = np.random.default_rng(20260808)


def best_of(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rho_panel(kernels, iterations=20_000):
    xs = RNG.uniform(0.0, 1.0, 15)

    def run():
        for _ in range(iterations):
            kernels.rho_values(P, xs)

    return best_of(run, 3) / iterations


def bench_rho_bulk(kernels, n=1_000_000):
    xs = RNG.uniform(0.0, 1.0, n)
    return best_of(lambda: kernels.rho_values(P, xs)) / n


def bench_f_bulk(kernels, n=200_000):
    r = np.exp(RNG.uniform(np.log(0.05), np.log(1e3), n))
    th = RNG.uniform(1e-3, np.pi - 1e-3, n)
    zs = r * np.exp(1j * th)
    return best_of(lambda: kernels.f_upper_values(P, zs)) / n


def bench_stieltjes(kernels, repeats=200):
    # mirror herglotz.stieltjes_transform with an injected kernel
    from hardyweight import quadrature

    z = 1.5 + 0.8j
    z2 = z * z
    qinv = (P - 1.0) / P

    def transform():
        def integrand(t):
            return kernels.rho_values(P, t) * (2.0 * z / (t * t - z2))

        return quadrature.integrate(integrand, 0.0, 1.0, 1e-9,
                                    endpoint_hint=(qinv, qinv))

    def run():
        for _ in range(repeats):
            transform()

    return best_of(run, 3) / repeats


CASES = [
    ("rho_values, 15-node panel (per call)", bench_rho_panel, 1e6, "us"),
    ("rho_values, bulk 1e6 (per node)", bench_rho_bulk, 1e9, "ns"),
    ("f_upper_values, bulk 2e5 (per point)", bench_f_bulk, 1e9, "ns"),
    ("stieltjes transform tol=1e-9 (per call)", bench_stieltjes, 1e6, "us"),
]


def main():
    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("compiled", _kernels_cy))
    else:
        print("compiled kernels not built; benchmarking the fallback only\n")

    width = max(len(name) for name, *_ in CASES)
    header = f"{'case':<{width}}  " + "".join(f"{n:>14}" for n, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, fn, scale, unit in CASES:
        times = [fn(k) for _, k in backends]
        row = f"{name:<{width}}  "
        row += "".join(f"{t * scale:>11.2f} {unit}" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
