#!/usr/bin/env python3
"""Benchmark the numba row-reduction kernel against the numpy fallback.

Times the raw kernels on random mod-p matrices and a realistic workload
(resolutions + Tor sweep over a small corpus).  Run directly:

    python benchmarks/bench_backends.py [--sizes 100,200 ...] [--repeat 5]
"""

import argparse
import time

import numpy as np

from artmod import linalg
from artmod.explore import enumerate_ideals, enumerate_modules, enumerate_rings
from artmod.statements import Workspace

P = 101


def bench_rref(rng, rows, cols, repeat):
    mats = [rng.integers(0, P, (rows, cols)) for _ in range(repeat)]
    linalg.rref(mats[0], P)  # warm the JIT / caches
    best = float("inf")
    for m in mats:
        t0 = time.perf_counter()
        linalg.rref(m, P)
        linalg.kernel_basis(m, P)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_workload():
    """Resolutions to depth 5 and a Tor sweep over the two-variable corpus."""
    t0 = time.perf_counter()
    total = 0
    for ring in enumerate_rings(2, 5, p=P):
        ws = Workspace(ring)
        mods = [mi.module for mi in enumerate_modules(ring)]
        ideals = [i for i in enumerate_ideals(ring) if i.is_proper]
        for m in mods:
            ws.betti(m, 5)
        for m in mods[:4]:
            for n in mods[:4]:
                for i in range(1, 4):
                    total += ws.tor_len(m, n, i)
        for ideal in ideals[:4]:
            for m in mods[:4]:
                ws.ifree(m, ideal)
    return time.perf_counter() - t0, total


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="50,100,200,400",
                        help="comma-separated square-ish rref sizes")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = ["numpy"]
    try:
        import numba  # noqa: F401

        backends.append("numba")
    except ImportError:
        print("numba not importable; benchmarking the numpy path only")

    rng = np.random.default_rng(0)
    results = {}
    for backend in backends:
        linalg.use_backend(backend)
        rows = {}
        for n in sizes:
            rows[n] = bench_rref(rng, n, 2 * n, args.repeat)
        wl, checksum = bench_workload()
        results[backend] = (rows, wl, checksum)

    print(f"{'kernel':<28}" + "".join(f"{b:>12}" for b in backends))
    for n in sizes:
        line = f"rref+kernel {n}x{2*n:<10}"
        for b in backends:
            line += f"{results[b][0][n]*1e3:>10.2f}ms"
        print(line)
    line = f"{'corpus workload':<28}"
    for b in backends:
        line += f"{results[b][1]:>10.2f}s "
    print(line)
    checks = {results[b][2] for b in backends}
    print(f"workload checksums agree: {len(checks) == 1}")
    if len(backends) == 2:
        base = results["numpy"][1]
        fast = results["numba"][1]
        print(f"workload speedup numba vs numpy: {base / fast:.2f}x")


if __name__ == "__main__":
    main()
