#!/usr/bin/env python3
"""Compare the numba kernels against the interpreted fallback.

Each backend runs in its own interpreter (the flag is read at import time):

    python3 benchmarks/bench_kernels.py            # both backends, side by side
    python3 benchmarks/bench_kernels.py --worker   # one backend, JSON timings
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def workloads(quick: bool):
    from c67gen import gen_random_c67_free, validate_c67_free
    from c67gen.cycles import prune_to_c67_free
    from c67gen.graph import Graph
    from c67gen.oracle import oracle_extendable, oracle_relating

    import numpy as np

    n_big = 600 if quick else 2000
    rng = np.random.default_rng(0)
    iu, ju = np.triu_indices(n_big, k=1)
    keep = rng.random(iu.shape[0]) < 6 / (n_big - 1)
    dense = Graph(n_big, zip(iu[keep].tolist(), ju[keep].tolist()))
    clean, _ = prune_to_c67_free(dense)
    small = [gen_random_c67_free(14, 0.35, s) for s in range(40 if quick else 200)]

    def screen():
        assert validate_c67_free(clean) is None

    def prune():
        prune_to_c67_free(dense)

    def oracles():
        for g in small:
            for x in g.vertices():
                oracle_extendable(g, x)
            for x, y in g.edges:
                oracle_relating(g, x, y)

    return {
        f"cycle screen (n={n_big}, m={clean.m})": screen,
        f"cycle pruning (n={n_big}, m={dense.m} drawn)": prune,
        f"oracle subset search ({len(small)} graphs, n=14)": oracles,
    }


def worker(quick: bool, repeats: int) -> dict:
    from c67gen import _kernels

    out = {"backend": _kernels.BACKEND, "timings": {}}
    for name, fn in workloads(quick).items():
        fn()  # warm-up: JIT compile or load from cache
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        out["timings"][name] = best
    return out


def spawn(disable: bool, quick: bool, repeats: int) -> dict:
    env = dict(os.environ)
    env.pop("C67GEN_DISABLE_NUMBA", None)
    if disable:
        env["C67GEN_DISABLE_NUMBA"] = "1"
    cmd = [sys.executable, __file__, "--worker", "--repeats", str(repeats)] + (["--quick"] if quick else [])
    proc = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    if args.worker:
        print(json.dumps(worker(args.quick, args.repeats)))
        return

    fast = spawn(False, args.quick, args.repeats)
    slow = spawn(True, args.quick, args.repeats)
    width = max(len(k) for k in fast["timings"])
    print(f"{'workload':<{width}}  {fast['backend']:>10}  {slow['backend']:>10}  speedup")
    for name, t_fast in fast["timings"].items():
        t_slow = slow["timings"][name]
        print(f"{name:<{width}}  {t_fast * 1e3:8.1f}ms  {t_slow * 1e3:8.1f}ms  {t_slow / t_fast:6.1f}x")


if __name__ == "__main__":
    main()
