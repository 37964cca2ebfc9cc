#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Times the accelerated and binary-search engines on both backends over
the same data and prints per-item costs plus the compiled-vs-python
ratio.  The algorithmic speedup (accelerated vs binary) shows up on
either backend; the compiled kernels just move both curves down.

Usage: python benchmarks/compare_backends.py [--n N] [--m LIST] [--runs R]
"""

import argparse

from fastbin import _backend
from fastbin.baselines import binary_search_slice
from fastbin.bench import _time_ns
from fastbin.core import bin_slice, precompute
from fastbin.datagen import DataSpec, gen_boundaries, gen_values


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--n", type=int, default=200_000)
    parser.add_argument("--m", default="16,512")
    parser.add_argument("--runs", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = ["python"]
    try:
        _backend.get("compiled")
        backends.append("compiled")
    except ValueError:
        print("compiled kernels not built; showing python backend only")

    print(f"{'m':>6} {'engine':>10} " + " ".join(f"{b + ' ns/item':>16}" for b in backends)
          + ("  compiled/python" if len(backends) == 2 else ""))
    for m in (int(tok) for tok in args.m.split(",")):
        bins = gen_boundaries(m, "sorted-uniform-draws", (0.0, 1.0), args.seed)
        xs = gen_values(DataSpec("uniform", args.n, (0.0, 1.0), args.seed + 1))
        acc = precompute(bins, 0)
        engines = {
            "proposed": lambda be: bin_slice(acc, xs, backend=be),
            "binary": lambda be: binary_search_slice(bins, xs, backend=be),
        }
        for name, call in engines.items():
            per_item = {}
            for be in backends:
                median, _, _ = _time_ns(lambda: call(be), args.runs)
                per_item[be] = median / args.n
            row = f"{m:>6} {name:>10} " + " ".join(f"{per_item[b]:>16.1f}" for b in backends)
            if len(backends) == 2:
                row += f"  {per_item['python'] / per_item['compiled']:>15.1f}x"
            print(row)


if __name__ == "__main__":
    main()
