"""Compare the compiled and pure-numpy kernel backends on the three hot paths.

Usage:
    python benchmarks/bench_backends.py [--quick] [--repeats K]

Each workload is warmed once per backend before timing (JIT compilation for
the compiled backend, table construction for the vectorized one), then the
best of K runs is reported. The script also cross-checks that both backends
return the same numbers.
"""
import argparse
import time

import numpy as np

from entroreduce._kernels import get_backend


def build_workloads(quick):
    rng = np.random.default_rng(7)
    n_merge = 20_000 if quick else 100_000
    masses = np.sort(rng.dirichlet(np.ones(n_merge)))  # ascending
    n_scan, m_scan = (10, 3) if quick else (11, 4)
    p_scan = -np.sort(-rng.dirichlet(np.ones(n_scan)))  # descending
    rows = -np.sort(-rng.dirichlet(np.ones(4)))
    cols = -np.sort(-rng.dirichlet(np.ones(4 if quick else 5)))
    return [
        (
            f"merge reduction  n={n_merge} -> m=16",
            lambda mod: mod.huffman_merges(masses, 16),
            lambda out: float(out[2].sum()),
        ),
        (
            f"exhaustive scan  n={n_scan} m={m_scan}",
            lambda mod: mod.rgs_extremes(p_scan, m_scan),
            lambda out: float(out[0]) + float(out[2]),
        ),
        (
            f"coupling vertex  {rows.size}x{cols.size}",
            lambda mod: mod.coupling_vertex_min(rows, cols, 1e-12),
            lambda out: float(out[0]),
        ),
    ]


def best_time(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    backends = {"numpy": get_backend("numpy")}
    try:
        backends["numba"] = get_backend("numba")
    except ImportError:
        print("numba not installed; timing the numpy backend only")

    workloads = build_workloads(args.quick)
    width = max(len(name) for name, _, _ in workloads)
    header = f"{'workload':<{width}}" + "".join(
        f"  {b:>12}" for b in backends
    )
    print(header)
    print("-" * len(header))

    for name, run, digest in workloads:
        checks = {}
        row = f"{name:<{width}}"
        for bname, mod in backends.items():
            checks[bname] = digest(run(mod))  # warm-up (compile / cache)
            dt = best_time(lambda: run(mod), args.repeats)
            row += f"  {dt * 1e3:>9.2f} ms"
        print(row)
        vals = list(checks.values())
        if any(abs(v - vals[0]) > 1e-9 for v in vals):
            raise SystemExit(f"backend mismatch on {name!r}: {checks}")

    print("backends agree on all workloads")


if __name__ == "__main__":
    main()
