"""Compare the compiled and NumPy kernel backends.

    python benchmarks/bench_kernels.py [--rows 200000] [--width 6] [--repeat 5]

Prints the best-of-`repeat` time per kernel for each backend, then times one
end-to-end oracle sweep with each backend in a fresh interpreter.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from majorbound import _pykernels

try:
    from majorbound import _ckernels
except ImportError:
    _ckernels = None

SWEEP = """
import time
from majorbound import Finite, VonNeumann, Renyi, kernels
from majorbound.oracle import SearchBudget, candidates, worst_gap, verify_dominance
s = Finite([0.3, 0.25, 0.2, 0.15, 0.1])
b = SearchBudget(resolution=200)
t = time.perf_counter()
for m in (0, 1, 2):
    for eps in (0.05, 0.15, 0.3, 1.0):
        cs = {w: candidates(s, m, eps, b, w) for w in ("tset", "pset")}
        for w, c in cs.items():
            for f in (VonNeumann(), Renyi(0.5), Renyi(2.0)):
                worst_gap(f, s, m, eps, b, w, c)
        verify_dominance(s, m, eps, b, cands=cs)
print(kernels.BACKEND, time.perf_counter() - t)
"""


def bench(label, fn, repeat):
    return label, min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_cases(impl, rows, ref):
    return [
        ("sort_rows_desc", lambda: impl.sort_rows_desc(rows)),
        ("prefix_violation", lambda: impl.prefix_violation(ref, rows, 1e-9)),
        ("vn_entropy_rows", lambda: impl.vn_entropy_rows(rows)),
        ("power_sum_rows", lambda: impl.power_sum_rows(rows, 0.5)),
        ("l1_rows", lambda: impl.l1_rows(rows, ref)),
        ("simplex_lattice", lambda: _uncached(impl).simplex_lattice(6, 30)),
    ]


def _uncached(impl):
    # the NumPy lattice is memoized; time a cold build
    if impl is _pykernels:
        _pykernels._lattice.cache_clear()
    return impl


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--rows", type=int, default=200_000)
    ap.add_argument("--width", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--no-sweep", action="store_true", help="skip the end-to-end sweep")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    rows = np.ascontiguousarray(rng.dirichlet(np.ones(args.width), size=args.rows))
    ref = np.ascontiguousarray(np.sort(rows[0])[::-1])

    py = dict(bench(n, f, args.repeat) for n, f in kernel_cases(_pykernels, rows, ref))
    print(f"{'kernel':<18}{'python [ms]':>14}{'cython [ms]':>14}{'speedup':>10}")
    for name, t_py in py.items():
        if _ckernels is None:
            print(f"{name:<18}{1e3 * t_py:>14.2f}{'n/a':>14}{'':>10}")
            continue
        t_c = dict(kernel_cases(_ckernels, rows, ref))[name]
        t_c = min(timeit.repeat(t_c, number=1, repeat=args.repeat))
        print(f"{name:<18}{1e3 * t_py:>14.2f}{1e3 * t_c:>14.2f}{t_py / t_c:>9.1f}x")

    if args.no_sweep:
        return 0
    print("\nend-to-end oracle sweep (5 entries, m <= 2, 4 eps values, resolution 200)")
    for pure in ("1", "0"):
        env = dict(os.environ, MAJORBOUND_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
        backend, seconds = out.stdout.split()
        print(f"  {backend:<8}{float(seconds):8.2f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
