"""Time the numba kernels against their numpy / pure-Python counterparts.

    python benchmarks/bench_kernels.py [--repeat 5]

Both variants run in one process, so the env flag does not matter here.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tfpmis import generators, kernels
from tfpmis.treewidth import heuristic_td, mis_dp


def _best_of(fn, repeat):
    fn()  # warm-up, includes numba compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_tables(width: int, repeat: int):
    rng = np.random.default_rng(0)
    table = rng.integers(0, 50, size=1 << width).astype(np.int32)
    other = rng.integers(0, 50, size=1 << width).astype(np.int32)
    nbr = np.int64(0b1011)
    pos = np.int64(width // 2)
    rows = []
    for name, nb, npy, call in (
        ("introduce", kernels.introduce_nb, kernels.introduce_np, lambda f: f(table, pos, nbr)),
        ("forget", kernels.forget_nb, kernels.forget_np, lambda f: f(table, pos)),
        ("join", kernels.join_nb, kernels.join_np, lambda f: f(table, other)),
    ):
        assert np.array_equal(call(nb), call(npy))
        rows.append((f"{name} w={width}", _best_of(lambda: call(nb), repeat), _best_of(lambda: call(npy), repeat)))
    return rows


def bench_bnb(n: int, repeat: int):
    g = generators.gen_random_tfp(n, seed=7).to_abstract()
    adj = g.bitmasks()
    full = np.int64((1 << n) - 1)
    limit = np.int64(10**9)
    a = kernels.mis_bnb_nb(adj, full, limit)
    b = kernels.mis_bnb_py(adj, full, limit)
    assert a[0] == b[0]
    return [(f"bnb n={n}", _best_of(lambda: kernels.mis_bnb_nb(adj, full, limit), repeat),
             _best_of(lambda: kernels.mis_bnb_py(adj, full, limit), repeat))]


def bench_dp(rows: int, cols: int, repeat: int):
    g = generators.hex_fragment(rows, cols).to_abstract()
    td = heuristic_td(g)
    saved = kernels.introduce, kernels.forget, kernels.join
    out = {}
    for label, trio in (("numba", (kernels.introduce_nb, kernels.forget_nb, kernels.join_nb)),
                        ("numpy", (kernels.introduce_np, kernels.forget_np, kernels.join_np))):
        kernels.introduce, kernels.forget, kernels.join = trio
        try:
            out[label] = _best_of(lambda: mis_dp(g, td), repeat)
        finally:
            kernels.introduce, kernels.forget, kernels.join = saved
    return [(f"mis_dp hex {rows}x{cols} (n={g.n}, w={td.width})", out["numba"], out["numpy"])]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    rows = []
    for w in (12, 18, 22):
        rows += bench_tables(w, args.repeat)
    for n in (30, 45, 60):
        rows += bench_bnb(n, args.repeat)
    rows += bench_dp(8, 8, args.repeat)
    print(f"{'case':<40}{'numba ms':>12}{'fallback ms':>14}{'speedup':>10}")
    for name, t_nb, t_np in rows:
        print(f"{name:<40}{t_nb * 1e3:>12.3f}{t_np * 1e3:>14.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
