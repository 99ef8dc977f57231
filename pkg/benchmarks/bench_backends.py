#!/usr/bin/env python3
"""Compare the compiled and pure-Python row-reduction backends.

Times echelonize() on the real workloads the engine runs: delta matrices
and product expansion matrices of multidegree components, plus dense
random integer matrices as a stress case.  Invoke directly:

    python3 benchmarks/bench_backends.py
"""

import random
import time

from weitzlab import _rowred_py
from weitzlab.kernel import delta_matrix
from weitzlab.products import enumerate_products, expand
from weitzlab.poly import component_basis
from weitzlab.report import enumerate_multidegrees

try:
    from weitzlab import _rowred
except ImportError:
    _rowred = None


def component_matrices(d, max_degree):
    mats = []
    for n in enumerate_multidegrees(d, max_degree):
        mats.append(delta_matrix(d, n).to_int_rows())
        basis = component_basis(d, n)
        index = {m: i for i, m in enumerate(basis)}
        cols = enumerate_products(d, n)
        dense = [[0] * len(cols) for _ in basis]
        for j, t in enumerate(cols):
            for m, c in expand(t).terms():
                dense[index[m]][j] = int(c)
        mats.append(dense)
    return mats


def random_matrices(count, size, seed=7):
    rng = random.Random(seed)
    return [
        [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
        for _ in range(count)
    ]


def run(core, workload, repeats):
    best = None
    for _ in range(repeats):
        copies = [[row[:] for row in mat] for mat in workload]
        start = time.perf_counter()
        for mat in copies:
            core.echelonize(mat, len(mat[0]) if mat else 0)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    workloads = [
        ("delta/product matrices d=3 |n|<=6", component_matrices(3, 6), 3),
        ("delta/product matrices d=4 |n|<=5", component_matrices(4, 5), 3),
        ("dense random 40x40 (x20)", random_matrices(20, 40), 3),
    ]
    print(f"{'workload':<40} {'pure':>10} {'cython':>10} {'speedup':>9}")
    for name, mats, repeats in workloads:
        t_py = run(_rowred_py, mats, repeats)
        if _rowred is None:
            print(f"{name:<40} {t_py:>9.4f}s {'n/a':>10} {'n/a':>9}")
            continue
        t_cy = run(_rowred, mats, repeats)
        print(f"{name:<40} {t_py:>9.4f}s {t_cy:>9.4f}s {t_py / t_cy:>8.2f}x")
    if _rowred is None:
        print("compiled backend not built; only the pure backend was timed")


if __name__ == "__main__":
    main()
