#!/usr/bin/env python3
"""Benchmark the greedy-forwarding kernel backends on seeded corner-to-corner
routes.

Usage: python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import math
import time

import numpy as np

from switchsim.kernels import _greedy_py

try:
    from switchsim.kernels import _greedy_cy
except ImportError:
    _greedy_cy = None


def make_field(lam: float, R: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-R, R, (rng.poisson(lam * (2 * R) ** 2), 2))
    return np.vstack([pts, [[-R, -R], [R, R]]])


def time_backend(backend, fields, phi: float, repeats: int) -> tuple[float, int]:
    cos_half = math.cos(phi / 2)
    best = math.inf
    hops = 0
    for _ in range(repeats):
        start = time.perf_counter()
        hops = 0
        for pts in fields:
            xs = np.ascontiguousarray(pts[:, 0])
            ys = np.ascontiguousarray(pts[:, 1])
            route, status = backend.greedy_route(xs, ys, -50.0, -50.0, 50.0, 50.0, cos_half)
            assert status == 0
            hops += len(route)
        best = min(best, time.perf_counter() - start)
    return best, hops


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--routes", type=int, default=40)
    args = parser.parse_args()

    phi = math.pi / 3
    print(f"{'density':>8} {'points':>7} {'python':>12} {'cython':>12} {'speedup':>8}")
    for lam in (0.05, 0.2, 0.4):
        fields = [make_field(lam, 50.0, seed) for seed in range(args.routes)]
        n_pts = int(np.mean([len(f) for f in fields]))
        t_py, hops_py = time_backend(_greedy_py, fields, phi, args.repeats)
        if _greedy_cy is None:
            print(f"{lam:>8} {n_pts:>7} {t_py * 1e3:>10.1f}ms {'n/a':>12} {'n/a':>8}")
            continue
        t_cy, hops_cy = time_backend(_greedy_cy, fields, phi, args.repeats)
        assert hops_py == hops_cy, "backends disagree"
        print(
            f"{lam:>8} {n_pts:>7} {t_py * 1e3:>10.1f}ms {t_cy * 1e3:>10.1f}ms {t_py / t_cy:>7.1f}x"
        )


if __name__ == "__main__":
    main()
