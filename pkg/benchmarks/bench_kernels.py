"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--size 64] [--repeat 5] [--corpus]

Kernel timings use Z_n tables (a valid ring, so the axiom scans run to
completion).  ``--corpus`` also times a full ``gzariski verify --corpus``
in a subprocess under each backend.
"""
import argparse
import os
import subprocess
import sys
import time
import timeit

import numpy as np

from gzariski.kernels import numba_impl, numpy_impl


def tables(n):
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n


def cases(n):
    add, mul = tables(n)
    zero = np.zeros(n, bool)
    zero[0] = True
    half = np.arange(n) % 2 == 0
    every = np.arange(n)
    return {
        "first_nonassociative": (mul,),
        "first_nondistributive": (add, mul),
        "first_action_nonassociative": (mul, mul),
        "first_action_nondistributive": (add, add, mul),
        "span": (add, zero, [2]),
        "colon": (mul, half),
        "power_hits": (mul, every, zero),
        "first_product_in": (mul, every[1::2], every[1::2], zero),
    }


def bench_kernels(n, repeat):
    print(f"kernels on Z_{n} tables (best of {repeat}, ms)")
    print(f"{'kernel':32s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for name, args in cases(n).items():
        times = []
        for impl in (numpy_impl, numba_impl):
            if impl is None:
                times.append(float("nan"))
                continue
            fn = getattr(impl, name)
            fn(*args)                        # warm-up, includes jit compile
            times.append(min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat)))
        speed = times[0] / times[1] if times[1] > 0 else float("nan")
        print(f"{name:32s} {times[0] * 1e3:10.3f} {times[1] * 1e3:10.3f} {speed:8.1f}x")


def bench_corpus():
    print("\nfull corpus verify (wall clock, s)")
    for backend in ("numpy", "numba"):
        env = dict(os.environ, GZARISKI_BACKEND=backend)
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-m", "gzariski", "verify", "--corpus",
                        "--format", "machine"], env=env, stdout=subprocess.DEVNULL)
        print(f"  {backend:6s} {time.perf_counter() - t0:8.2f}")


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=64)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--corpus", action="store_true")
    args = p.parse_args(argv)
    if numba_impl is None:
        print("numba backend disabled (GZARISKI_BACKEND=numpy); numba column is nan")
    bench_kernels(args.size, args.repeat)
    if args.corpus:
        bench_corpus()


if __name__ == "__main__":
    main()
