"""Benchmark the compiled kernels against the pure-numpy fallback.

Runs the same three workloads in two subprocesses — one with the default
compiled kernels, one with PICONE_NO_NUMBA=1 — and prints a comparison
table.  Compilation happens during an untimed warmup pass.

Usage: python benchmarks/bench_accel.py
"""

import json
import os
import subprocess
import sys

WORKLOAD = """
import json
import time

import numpy as np

import picone
from picone import Geometry, SamplerConfig, first_eigenpair, fuzz, region_grid


def timed(fn, repeats=3):
    fn()  # warmup (includes any JIT compilation)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


results = {"use_numba": picone.USE_NUMBA}
cfg = SamplerConfig(inequality="general", n_samples=200_000, p=2.2, q=1.6)
results["fuzz_200k_general"] = timed(lambda: fuzz(cfg, seed=0))
results["region_grid_100x100"] = timed(
    lambda: region_grid((1.05, 4.0), (1.05, 3.0), 100)
)
geom = Geometry.ball(2, 1.0)
results["eigenpair_p22_disk"] = timed(lambda: first_eigenpair(2.2, geom))
print(json.dumps(results))
"""


def run(no_numba):
    env = dict(os.environ)
    if no_numba:
        env["PICONE_NO_NUMBA"] = "1"
    else:
        env.pop("PICONE_NO_NUMBA", None)
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    print("running compiled-kernel pass ...")
    fast = run(no_numba=False)
    print("running pure-numpy fallback pass (PICONE_NO_NUMBA=1) ...")
    slow = run(no_numba=True)
    assert fast.pop("use_numba") is True
    assert slow.pop("use_numba") is False
    width = max(len(k) for k in fast)
    print(f"\n{'workload':<{width}}  {'compiled':>10}  {'fallback':>10}  {'speedup':>8}")
    for key in fast:
        ratio = slow[key] / fast[key]
        print(f"{key:<{width}}  {fast[key]:>9.4f}s  {slow[key]:>9.4f}s  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
