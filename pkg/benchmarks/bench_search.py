"""Timing comparison of the two search kernels on real instances.

Runs the same exhaustive-refutation and first-hit searches through the
pure-python kernel and the compiled one, checks that they return
identical results, and prints a small table.  Usage:

    python3 benchmarks/bench_search.py
"""

import os
import time

from edgeid._search import search_exact_size
from edgeid.families import standard_graph
from edgeid.solver import _constraints_from_masks


def instances():
    out = []
    for name, kind, params, k in [
        ("petersen refute k=4", "petersen", None, 4),
        ("petersen find   k=5", "petersen", None, 5),
        ("K_7 refute      k=5", "complete", 7, 5),
        ("K_7 find        k=6", "complete", 7, 6),
        ("K_8 refute      k=6", "complete", 8, 6),
        ("K_8 find        k=7", "complete", 8, 7),
    ]:
        g = standard_graph(kind, params)
        cons = _constraints_from_masks(g.all_edge_masks())
        out.append((name, g.m, cons, k))
    return out


def run(kernel, universe, cons, k, repeat=3):
    os.environ["EDGEID_KERNEL"] = kernel
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = search_exact_size(universe, cons, k, 10**8)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return result, best


def main():
    try:
        import numba  # noqa: F401

        kernels = ["python", "numba"]
    except ImportError:
        print("numba unavailable, timing the python kernel only")
        kernels = ["python"]
    if "numba" in kernels:
        # trigger compilation outside the timed region
        run("numba", 4, [1, 2, 4, 8], 2, repeat=1)

    print(f"{'instance':<22} {'nodes':>9} " + "".join(f"{k:>12}" for k in kernels))
    for name, universe, cons, k in instances():
        results = {}
        times = {}
        for kernel in kernels:
            results[kernel], times[kernel] = run(kernel, universe, cons, k)
        first = results[kernels[0]]
        assert all(r == first for r in results.values()), name
        row = f"{name:<22} {first[2]:>9} "
        row += "".join(f"{times[k] * 1000:>10.2f}ms" for k in kernels)
        if len(kernels) == 2:
            row += f"   x{times['python'] / times['numba']:.1f}"
        print(row)
    os.environ.pop("EDGEID_KERNEL", None)


if __name__ == "__main__":
    main()
