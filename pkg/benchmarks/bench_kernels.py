"""Time the numba and numpy kernel backends on completion-sized workloads.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Both backends are imported directly, so one run compares them regardless of
ORTHOLAT_DISABLE_JIT.  Each row also checks that the two produce the same
arrays.
"""
import argparse
import json
import time

import numpy as np

from ortholat import generate
from ortholat._kernels import _numba, _numpy
from ortholat.ortho import lattice_of

WORKLOADS = [("mo", 3), ("mo", 4), ("mo", 5), ("boolean", 4), ("mo", 6), ("mo", 7)]


def _completion(impl, L):
    joins = impl.subset_fold(L.join, np.arange(L.n), L.bottom)
    dist = impl.distributive_flags(L.meet, L.join, joins, L.bottom)
    masks = impl.downset_masks(L.down_masks)
    kept = [int(m) for m in masks if impl.closure_violation(int(m), dist, joins) < 0]
    return joins, dist, masks, kept


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--json", action="store_true", help="emit rows as JSON")
    args = p.parse_args(argv)

    _completion(_numba, lattice_of(generate("mo", 2)))  # compile once, outside the timings
    rows = []
    for kind, n in WORKLOADS:
        L = lattice_of(generate(kind, n, cap=64))
        t_jit, a = best_of(lambda: _completion(_numba, L), args.repeat)
        t_np, b = best_of(lambda: _completion(_numpy, L), args.repeat)
        same = all(np.array_equal(np.asarray(x), np.asarray(y)) for x, y in zip(a, b))
        rows.append({"lattice": f"{kind} {n}", "elements": L.n, "members": len(a[3]),
                     "numba_s": round(t_jit, 4), "numpy_s": round(t_np, 4),
                     "speedup": round(t_np / t_jit, 1) if t_jit else None, "agree": same})
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'lattice':<11}{'n':>4}{'|DI|':>7}{'numba s':>10}{'numpy s':>10}{'x':>7}  agree")
    for r in rows:
        print(f"{r['lattice']:<11}{r['elements']:>4}{r['members']:>7}{r['numba_s']:>10}"
              f"{r['numpy_s']:>10}{r['speedup']:>7}  {r['agree']}")


if __name__ == "__main__":
    main()
