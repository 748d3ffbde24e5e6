"""Timing of the F_p kernels: numba vs numpy.

    python3 benchmarks/bench_kernels.py [--sizes 64 128 256] [--repeat 3]

The kernel-level comparison runs in-process.  The end-to-end comparison
(generic orbit dimension on a few embeddings) spawns one subprocess per
backend, since the backend is fixed at import time by FLAGVGIT_DISABLE_NUMBA.
"""
import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from flagvgit import _kernels as K


def best_of(fn, repeat):
    ts = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        ts.append(time.perf_counter() - t)
    return min(ts), out


def kernel_table(sizes, repeat):
    p = K.PRIME
    rng = np.random.default_rng(0)
    rows = []
    for n in sizes:
        A = rng.integers(0, p, size=(n, n), dtype=np.int64)
        B = rng.integers(0, p, size=(n, n), dtype=np.int64)
        # nilpotent N: strictly upper triangular
        N = np.triu(rng.integers(0, p, size=(n, n), dtype=np.int64), 1)
        X = rng.integers(0, p, size=(n, 8), dtype=np.int64)
        cases = [
            ("matmul_mod", lambda: K.matmul_mod_np(A, B, p), lambda: K.matmul_mod_nb(A, B, p)),
            ("rank_mod", lambda: K.rank_mod_np(A.copy(), p), lambda: K.rank_mod_nb(A.copy(), p)),
            ("exp_apply", lambda: K.exp_apply_np(N, X, p), lambda: K.exp_apply_nb(N, X, p)),
        ]
        for name, f_np, f_nb in cases:
            t_np, r_np = best_of(f_np, repeat)
            if K.HAVE_NUMBA:
                f_nb()  # compile
                t_nb, r_nb = best_of(f_nb, repeat)
                same = bool(np.array_equal(np.asarray(r_np), np.asarray(r_nb)))
            else:
                t_nb, same = float("nan"), None
            rows.append({"kernel": name, "n": n, "numpy_s": t_np, "numba_s": t_nb, "agree": same})
    return rows


_E2E = r"""
import json, sys, time
from flagvgit import _kernels, build_root_datum, diagonal_embedding, principal_embedding, parse_type
from flagvgit.embed import xi_max
from flagvgit.liealg import generic_orbit_dim
cases = [("diag:A1:5", diagonal_embedding(build_root_datum(parse_type("A1")), 5)),
         ("diag:A2:2", diagonal_embedding(build_root_datum(parse_type("A2")), 2)),
         ("principal:B3", principal_embedding(build_root_datum(parse_type("B3"))))]
out = {"backend": _kernels.backend(), "cases": []}
for name, E in cases:
    t = time.perf_counter()
    dims = []
    for xi, sigma, ld in xi_max(E):
        for u in ld.min_reps:
            dims.append(generic_orbit_dim(E, ld.xi, ld.twist(u), 4, 0).dim)
    out["cases"].append({"case": name, "seconds": time.perf_counter() - t, "dims": dims})
print(json.dumps(out))
"""


def end_to_end():
    res = {}
    for flag in ("0", "1"):
        env = dict(os.environ, FLAGVGIT_DISABLE_NUMBA=flag)
        proc = subprocess.run([sys.executable, "-c", _E2E], env=env, capture_output=True, text=True, check=True)
        data = json.loads(proc.stdout.strip().splitlines()[-1])
        res[data["backend"]] = data
    return res


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--no-e2e", action="store_true")
    args = ap.parse_args()

    print(f"backend available: {K.backend()}")
    print(f"{'kernel':12} {'n':>5} {'numpy [s]':>11} {'numba [s]':>11} {'speedup':>8}  agree")
    for r in kernel_table(args.sizes, args.repeat):
        sp = r["numpy_s"] / r["numba_s"] if r["numba_s"] == r["numba_s"] and r["numba_s"] > 0 else float("nan")
        print(f"{r['kernel']:12} {r['n']:5d} {r['numpy_s']:11.5f} {r['numba_s']:11.5f} {sp:8.2f}  {r['agree']}")

    if args.no_e2e:
        return
    print("\nend to end, generic orbit dimension over all fit-pair candidates (includes numba compile)")
    res = end_to_end()
    names = [c["case"] for c in next(iter(res.values()))["cases"]]
    for i, name in enumerate(names):
        line = f"{name:14}"
        dims = set()
        for b in ("numpy", "numba"):
            if b in res:
                c = res[b]["cases"][i]
                line += f" {b} {c['seconds']:8.3f}s"
                dims.add(tuple(c["dims"]))
        print(line + f"  identical dims: {len(dims) == 1}")


if __name__ == "__main__":
    main()
