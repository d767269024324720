"""Time the compiled and pure-Python histogram kernels on the same inputs.

    python benchmarks/bench_kernels.py [--max-n 13] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from toricube import kernels


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    impls = kernels.backends()
    if "compiled" not in impls:
        print("compiled kernels are not built; only the Python backend is available")
    names = list(impls)
    print(f"{'kernel':<16}{'n':>4}" + "".join(f"{name:>12}" for name in names) + f"{'speedup':>10}")
    for label, call in (
        ("tree_histogram", lambda m, n: m.tree_histogram(n, 1, 1, kernels.PAREN_STAT)),
        ("nc_histogram", lambda m, n: m.nc_histogram(n - 1, n, 1, 1, kernels.NC_STAT)),
    ):
        for n in range(max(2, args.max_n - 3), args.max_n + 1):
            results = {name: call(impls[name], n) for name in names}
            if len({tuple(r) for r in results.values()}) != 1:
                raise SystemExit(f"backends disagree on {label} n={n}")
            times = {name: best_of(lambda: call(impls[name], n), args.repeat) for name in names}
            speed = times["python"] / times["compiled"] if "compiled" in times else 1.0
            cells = "".join(f"{times[name]:>11.4f}s" for name in names)
            print(f"{label:<16}{n:>4}{cells}{speed:>9.1f}x")


if __name__ == "__main__":
    main()
