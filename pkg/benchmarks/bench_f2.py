"""Benchmark: compiled F2 kernels vs the pure-Python fallback.

Run as: python3 benchmarks/bench_f2.py

Workloads mirror real use: polynomial gcd on canonical-unit orbit words
(the certification hot path) and packed rank/kernel on dense random bits.
"""

from __future__ import annotations

import random
import time

from jacrank import _f2pure
from jacrank.cyclosig import sophie_germain_pairs, orbit_word

try:
    from jacrank import _f2core
except ImportError:
    _f2core = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return out, best


def bench_gcd(kern):
    pairs = [pr for pr in sophie_germain_pairs(92459) if pr.q > 50000]
    total = 0.0
    for pr in pairs:
        w = orbit_word(pr)
        xp1 = (1 << pr.p) | 1
        _, dt = timed(kern.poly_gcd, w, xp1, repeat=1)
        total += dt
    return f"{total:8.3f}s  ({len(pairs)} orbit words, q in (50000, 92459])"


def bench_rank(kern):
    rng = random.Random(1009)
    mats = [([rng.randrange(1 << 300) for _ in range(300)], 300) for _ in range(20)]
    t0 = time.perf_counter()
    for rows, c in mats:
        kern.rank_rows(rows, c)
    return f"{time.perf_counter() - t0:8.3f}s  (20 random 300x300 ranks)"


def bench_kernel(kern):
    rng = random.Random(1013)
    mats = [([rng.randrange(1 << 180) for _ in range(120)], 180) for _ in range(20)]
    t0 = time.perf_counter()
    for rows, c in mats:
        kern.kernel_rows(rows, c)
    return f"{time.perf_counter() - t0:8.3f}s  (20 random 120x180 kernels)"


def main() -> None:
    kernels = [("pure", _f2pure)]
    if _f2core is not None:
        kernels.append(("compiled", _f2core))
    else:
        print("note: compiled extension not built; showing pure backend only")
    for title, bench in [("poly_gcd", bench_gcd), ("rank", bench_rank),
                         ("kernel", bench_kernel)]:
        print(f"== {title} ==")
        for name, kern in kernels:
            print(f"  {name:9s}{bench(kern)}")


if __name__ == "__main__":
    main()
