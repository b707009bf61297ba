"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from markoff import kernels
from markoff.arith import prime_power_moduli

CASES = [
    ("half_roots(1, 999983)", lambda k: k.half_roots(1, 999983)),
    ("residue_counts(99991, 20)", lambda k: k.residue_counts(99991, 20)),
    ("box_min(Markoff form m=7561, K=50)", lambda k: k.box_min(7561, 16837, -7639, 50)),
    ("x2p1_table(10**6)", lambda k: k.x2p1_table(10**6)),
    ("root-count sweep, m <= 2*10**4, l <= 20",
     lambda k: [k.residue_counts(m, 20) for m in prime_power_moduli(2 * 10**4)]),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = kernels.using("python")
    cy = kernels.using("cython") if kernels.BACKEND == "cython" else None
    print(f"{'kernel':<40} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in CASES:
        tp = best_of(lambda: fn(py), args.repeat)
        if cy is None:
            print(f"{name:<40} {tp:>9.4f}s {'-':>10} {'-':>8}")
            continue
        tc = best_of(lambda: fn(cy), args.repeat)
        print(f"{name:<40} {tp:>9.4f}s {tc:>9.4f}s {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
