"""Benchmark the canonical-labeling kernel: numba @njit vs the pure-Python
fallback (selected by the BIVARIEG_NO_NUMBA env flag).

The workload is the hot loop of corpus generation: canonizing every vertex
augmentation while deduplicating all graphs up to the given order.

Usage: python benchmarks/bench_canonical.py [--max-order 7]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time


def _worker(max_order: int) -> None:
    from bivarieg import _kernels
    from bivarieg.corpus import corpus_count

    # trigger jit compilation outside the timed region
    start = time.perf_counter()
    corpus_count(3)
    warm = time.perf_counter() - start

    start = time.perf_counter()
    total = corpus_count(max_order)
    elapsed = time.perf_counter() - start
    label = "numba" if _kernels.USING_NUMBA else "pure-python"
    print(f"{label:>12}: order <= {max_order}, {total} canonical graphs at top "
          f"order, {elapsed:.3f}s (+{warm:.3f}s warmup/compile)")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=7)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        _worker(args.max_order)
        return
    base = [sys.executable, os.path.abspath(__file__),
            "--worker", "--max-order", str(args.max_order)]
    for extra_env in ({}, {"BIVARIEG_NO_NUMBA": "1"}):
        env = dict(os.environ, **extra_env)
        subprocess.run(base, env=env, check=True)


if __name__ == "__main__":
    main()
