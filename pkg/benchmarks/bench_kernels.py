"""Time every hot kernel on the numba and the numpy path.

    python benchmarks/bench_kernels.py [--repeat 3]

The first numba call compiles (or loads the on-disk cache), so each kernel
is warmed up once before timing.
"""
import argparse
import time
from itertools import permutations

import numpy as np

from meanderknots import _accel, kernels
from meanderknots.diagram import close_open_meander
from meanderknots.meander import OpenMeander, _word_tables


def _cases():
    _, _, up, lo, start = _word_tables(13)
    d = close_open_meander(OpenMeander(13, tuple(range(1, 14))))
    joins = np.array(d.embedding.smoothing_joins(), dtype=np.int64)
    edges = d.embedding.n_edges
    rng = np.random.default_rng(0)
    vec = rng.integers(0, 1 << 30, size=1 << 18, dtype=np.int64)
    rows = np.array(list(permutations(range(2, 17, 2))), dtype=np.int64)
    return {
        "trace_meander_pairs (n=13)": lambda: kernels.trace_meander_pairs(up, lo, start),
        "bracket_histogram (13 crossings)": lambda: kernels.bracket_histogram(joins, edges),
        "state_loop_counts (13 crossings)": lambda: kernels.state_loop_counts(joins, edges),
        "wht_mod (2^18)": lambda: kernels.wht_mod(vec.copy(), (1 << 31) - 1),
        "canonical_dt_mask (n=8)": lambda: kernels.canonical_dt_mask(rows),
    }


def _time(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    cases = _cases()
    print(f"{'kernel':36s} {'numba s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for name, fn in cases.items():
        times = {}
        for backend in ("numba", "numpy"):
            old = _accel.set_backend(backend)
            try:
                times[backend] = _time(fn, args.repeat)
            finally:
                _accel.set_backend(old)
        print(f"{name:36s} {times['numba']:10.4f} {times['numpy']:10.4f} "
              f"{times['numpy'] / times['numba']:8.1f}")


if __name__ == "__main__":
    main()
