"""Compare the compiled elimination kernels with the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each workload is timed with both backends on identical input and the
ranks are checked to agree before any timing is reported.  The random
matrix over Q overflows int64, so its compiled timing is the multimodular
path while the Python timing is big-integer elimination; that row alone
takes about half a minute per repeat.
"""

from __future__ import annotations

import argparse
import random
import time

from apstab.complexes import matching_complex
from apstab.exactalg import BACKEND
from apstab.exactalg import kernels
from apstab.jwcdga import squarefree_block


def boundary_workloads():
    out = []
    for label, c in (("M(7) boundaries", matching_complex(7).chain_complex()),
                     ("M(8) boundaries", matching_complex(8).chain_complex()),
                     ("M(9) boundaries", matching_complex(9).chain_complex()),
                     ("JW squarefree block m=n=7", squarefree_block(7, 7).complex)):
        mats = [(c.boundaries[d].row_dicts(), c.boundaries[d].ncols) for d in sorted(c.boundaries)]
        out.append((label, mats))
    return out


def random_workload(n=400, density=0.02, seed=1):
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        rows.append({j: rng.randint(-3, 3) or 1 for j in range(n) if rng.random() < density})
    return ("random sparse 400x400", [(rows, n)])


def time_ranks(mats, backend, field_p, repeat):
    best = float("inf")
    ranks = None
    for _ in range(repeat):
        start = time.perf_counter()
        if field_p:
            ranks = [kernels.rank_mod_p(r, n, field_p, backend=backend) for r, n in mats]
        else:
            ranks = [kernels.rank_integer(r, n, backend=backend) for r, n in mats]
        best = min(best, time.perf_counter() - start)
    return best, ranks


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args(argv)
    if BACKEND != "cython":
        raise SystemExit("compiled kernels are not built; run 'pip install --no-build-isolation -e .' first")
    workloads = boundary_workloads() + [random_workload()]
    # load the extension and prime table before timing
    time_ranks(workloads[0][1], "cython", 3, 1)
    kernels.rank_integer_multimodular([{0: 1}], 1)
    print(f"{'workload':<28} {'field':<6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, mats in workloads:
        for p in (3, 0):
            tp, rp = time_ranks(mats, "python", p, args.repeat)
            tc, rc = time_ranks(mats, "cython", p, args.repeat)
            if rp != rc:
                raise SystemExit(f"rank mismatch on {label}: {rp} vs {rc}")
            field = f"F{p}" if p else "Q"
            print(f"{label:<28} {field:<6} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
