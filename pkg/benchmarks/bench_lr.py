"""Compare the pure-Python and compiled LR kernels.

    python benchmarks/bench_lr.py [--max-size 7] [--repeat 3]

Two workloads: every product s_a * s_b with |a|, |b| <= max-size straight through the
kernel (no memo), and the full n <= 10 log-concavity sweep with a cold cache.
"""

import argparse
import time

from thagomizer import schur
from thagomizer._kernel import BACKENDS
from thagomizer.closed_forms import p_thagomizer, q_thagomizer
from thagomizer.partitions import partitions_of
from thagomizer.positivity import verify_strong_ilc


def raw_products(kernel, shapes):
    for a in shapes:
        for b in shapes:
            kernel(a, b)


def ilc_sweep():
    p_thagomizer.cache_clear()
    q_thagomizer.cache_clear()
    for variant in "PQ":
        verify_strong_ilc(10, variant)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    shapes = [p for n in range(1, args.max_size + 1) for p in partitions_of(n)]
    print(f"{len(shapes) ** 2} raw products, best of {args.repeat}")
    results = {}
    for name in sorted(BACKENDS):
        raw = best_of(lambda: raw_products(BACKENDS[name], shapes), args.repeat)
        schur.set_backend(name)
        sweep = best_of(lambda: (schur.clear_cache(), ilc_sweep()), args.repeat)
        results[name] = (raw, sweep)
        print(f"  {name:<7} raw {raw:8.3f}s   ilc sweep {sweep:8.3f}s")
    if len(results) == 2:
        (pr, ps), (cr, cs) = results["python"], results["cython"]
        print(f"  speedup raw x{pr / cr:.1f}, sweep x{ps / cs:.1f}")
    else:
        print("  compiled kernel unavailable; build with `pip install -e . --no-build-isolation`")


if __name__ == "__main__":
    main()
