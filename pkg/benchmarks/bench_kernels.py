"""Time each search kernel under the numba and numpy backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are imported explicitly, so the CODEGRAPH_NO_NUMBA flag does
not matter here. Numba timings exclude the first (compiling) call.
"""

import argparse
import time

import numpy as np

from codegraph import build_chain, build_threshold, parse_code
from codegraph.kernels import get_backend
from codegraph.oracle import exact_lambda


def cases():
    big_t = build_threshold(parse_code("0^3 1^2 0^2 1 0^3 1^2"))  # n = 13
    big_c = build_chain(parse_code("0^2 1 0^2 1^2 0 1 0^2 1"))  # n = 12
    tau_g = build_threshold(parse_code("0^2 1 0^2 1^2 0 1"))  # n = 9
    free = np.argwhere(np.triu(~tau_g.adjacency, 1))
    eu = np.ascontiguousarray(free[:, 0], dtype=np.int64)
    ev = np.ascontiguousarray(free[:, 1], dtype=np.int64)
    lam, _ = exact_lambda(big_c)
    order = np.argsort(-big_c.degrees(), kind="stable").astype(np.int64)
    none = np.full(big_c.n, -1, np.int64)
    return {
        "bfs_distances n=13": lambda k: k.bfs_distances(big_t.u8()),
        "first_resolving_set k=4 n=13": lambda k: k.first_resolving_set(k.bfs_distances(big_t.u8()), 4),
        "has_forbidden_threshold n=12": lambda k: k.has_forbidden_threshold(big_c.u8()),
        "has_forbidden_chain n=12": lambda k: k.has_forbidden_chain(big_c.u8()),
        "l21_search n=12 at lambda-1": lambda k: k.l21_search(k.bfs_distances(big_c.u8()), lam - 1, order, none),
        f"min_beta_supersets {len(eu)} non-edges": lambda k: k.min_beta_supersets(tau_g.u8(), eu, ev, True, tau_g.n),
    }


def timed(fn, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    nb, npb = get_backend("numba"), get_backend("numpy")
    print(f"{'kernel':40s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name, fn in cases().items():
        fn(nb)  # compile
        a = timed(fn, nb, args.repeat)
        b = timed(fn, npb, args.repeat)
        print(f"{name:40s} {a * 1e3:10.3f} {b * 1e3:10.3f} {b / a:7.1f}x")


if __name__ == "__main__":
    main()
