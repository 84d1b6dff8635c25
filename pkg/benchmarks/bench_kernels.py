"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat R]
"""
import argparse
import json
import timeit

import numpy as np

from efl._kernels import compiled_kernels, python_kernels


def workloads(n):
    rng = np.random.default_rng(0)
    s = 0.5 + 1j * rng.uniform(0, 400, n)
    m = 12
    shifts = [a / m for a in (1, 5, 7, 11)]
    weights = [1.0, -1.0, -1.0, 1.0]
    z = rng.uniform(-5, 5, n) + 1j * rng.uniform(-300, 300, n)
    return {
        "hurwitz_weighted": lambda k: k.hurwitz_weighted(s, shifts, weights),
        "loggamma": lambda k: k.loggamma(z),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = {"python": python_kernels}
    if compiled_kernels is not None:
        backends["cython"] = compiled_kernels
    rows = []
    for name, fn in workloads(args.points).items():
        ref = fn(python_kernels)
        row = {"kernel": name, "points": args.points}
        for label, k in backends.items():
            row[f"{label}_s"] = min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
            row[f"{label}_max_diff"] = float(np.max(np.abs(fn(k) - ref)))
        if "cython_s" in row:
            row["speedup"] = row["python_s"] / row["cython_s"]
        rows.append(row)
    print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
