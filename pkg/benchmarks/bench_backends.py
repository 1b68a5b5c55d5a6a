"""Timing comparison of the compiled and pure-numpy counting kernels.

Runs the four kernel-backed operations under each available backend and
prints a table of best-of-N wall times. Results are asserted equal
across backends, so a run doubles as a consistency check. The subset
search kernels compile once at import and are not part of this sweep.

Usage:
    python3 benchmarks/bench_backends.py [--scale N] [--repeats R]
"""

import argparse
import time

import numpy as np

from aplab.core import count_aps, count_aps_through, degree_profile
from aplab.kernels import available_backends, set_backend
from aplab.randomlab import sample_ap_count_stats
from aplab.sets import GroundSet


def _instance(n, density, seed):
    rng = np.random.default_rng(seed)
    d_mem = np.flatnonzero(rng.random(n) < 0.9) + 1
    D = GroundSet(n, d_mem)
    keep = rng.random(d_mem.size) < density
    return GroundSet(n, d_mem[keep]), D


def _workloads(scale):
    n_big = 4000 * scale
    n_mid = 1500 * scale
    S1, D1 = _instance(n_big, 0.5, 1)
    S2, D2 = _instance(n_mid, 0.4, 2)
    xs = list(range(1, n_mid + 1, max(1, n_mid // 200)))
    return [
        ("count_aps  n=%d k=3" % n_big,
         lambda: count_aps(S1, D1, 2, 3)),
        ("count_aps  n=%d k=5" % n_big,
         lambda: count_aps(S1, D1, 3, 5)),
        ("through x%d  n=%d" % (len(xs), n_mid),
         lambda: sum(count_aps_through(x, S2, D2, 2, 3) for x in xs)),
        ("degree_profile  n=%d" % n_mid,
         lambda: degree_profile(S2, D2, 2, 3).total),
        ("sample stats 50 trials",
         lambda: sample_ap_count_stats(1000 * scale, 3, 60, 50,
                                       seed=7).mean),
    ]


def _best_of(fn, repeats):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=int, default=1,
                    help="problem size multiplier (default 1)")
    ap.add_argument("--repeats", type=int, default=5,
                    help="timed repeats per cell, best kept (default 5)")
    args = ap.parse_args()

    backends = available_backends()
    work = _workloads(args.scale)

    # First pass warms numba's compilation cache so it is not billed
    # to the timed repeats.
    for name in backends:
        set_backend(name)
        for _, fn in work:
            fn()

    width = max(len(label) for label, _ in work)
    header = "%-*s" % (width, "operation")
    for name in backends:
        header += "  %12s" % name
    if len(backends) == 2:
        header += "  %8s" % "speedup"
    print(header)
    print("-" * len(header))

    for label, fn in work:
        times = []
        values = []
        for name in backends:
            set_backend(name)
            t, v = _best_of(fn, args.repeats)
            times.append(t)
            values.append(v)
        assert all(v == values[0] for v in values), \
            "backend results disagree on %s: %r" % (label, values)
        row = "%-*s" % (width, label)
        for t in times:
            row += "  %10.2f ms" % (t * 1e3)
        if len(times) == 2:
            row += "  %7.1fx" % (times[1] / times[0])
        print(row)

    if len(backends) == 2:
        print("\nspeedup = %s time / %s time" % (backends[1], backends[0]))


if __name__ == "__main__":
    main()
