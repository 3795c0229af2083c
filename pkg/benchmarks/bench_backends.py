"""Benchmark the numba-jitted elimination kernels against the pure-numpy
fallback on representative workloads: random dense matrices at the sizes the
dimension scans produce, plus a structured reduced Pade matrix.

Run:  python benchmarks/bench_backends.py [--reps N]
"""

import argparse
import time

import numpy as np

from taylorpade import DEFAULT_PRIME, build_reduced, random_unit_poly, taylor_quotient
from taylorpade import _kernels_numpy as knp

try:
    from taylorpade import _kernels_numba as knb
except ImportError:
    knb = None

P = DEFAULT_PRIME


def bench(fn, arg, reps):
    best = float("inf")
    result = None
    for _ in range(reps):
        work = arg.copy()
        t0 = time.perf_counter()
        result = fn(work, P)
        best = min(best, time.perf_counter() - t0)
    return result, best


def workloads():
    rng = np.random.default_rng(7)
    yield "rank random 330x461", "rank_in_place", rng.integers(0, P, size=(330, 461), dtype=np.int64)
    yield "rank random 791x920 (jacobian scale)", "rank_in_place", rng.integers(0, P, size=(791, 920), dtype=np.int64)
    yield "det random 400x400", "det_in_place", rng.integers(0, P, size=(400, 400), dtype=np.int64)
    point = taylor_quotient(
        random_unit_poly(5, 6, rng, P), random_unit_poly(5, 6, rng, P), 7
    )
    yield "rank reduced pade (5,6,6,7)", "rank_in_place", build_reduced(point, 6, 6).matrix.copy()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=3, help="repetitions, best-of")
    args = parser.parse_args()

    if knb is not None:
        # warm the jit so compilation does not pollute the timings
        knb.rank_in_place(np.eye(2, dtype=np.int64), P)
        knb.det_in_place(np.eye(2, dtype=np.int64), P)

    header = f"{'workload':40s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, kernel, arg in workloads():
        res_np, t_np = bench(getattr(knp, kernel), arg, args.reps)
        if knb is None:
            print(f"{name:40s} {t_np*1e3:9.1f}ms {'n/a':>10s} {'':>8s}")
            continue
        res_nb, t_nb = bench(getattr(knb, kernel), arg, args.reps)
        assert res_np == res_nb, f"backend mismatch on {name}: {res_np} vs {res_nb}"
        print(f"{name:40s} {t_np*1e3:9.1f}ms {t_nb*1e3:9.1f}ms {t_np/t_nb:7.1f}x")


if __name__ == "__main__":
    main()
