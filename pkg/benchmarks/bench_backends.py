"""Compare the compiled and pure-Python bit kernels.

Two views: raw kernel throughput at growing matrix sizes, and an end-to-end
sweep shaped like the exhaustive test suites (regularity of every ([2,2],[2])
tensor).  Run:

    python benchmarks/bench_backends.py [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import time

from einbool import _kernels_py

try:
    from einbool import _kernels_c
except ImportError:
    _kernels_c = None


def time_call(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def random_rows(rng: random.Random, nrows: int, ncols: int, density: float = 0.3):
    out = []
    for _ in range(nrows):
        word = 0
        for c in range(ncols):
            if rng.random() < density:
                word |= 1 << c
        out.append(word)
    return tuple(out)


def kernel_cases(rng: random.Random):
    for n in (4, 8, 16, 64, 256, 1024):
        a = random_rows(rng, n, n)
        b = random_rows(rng, n, n)
        calls = max(1, 200_000 // (n * n))
        yield f"matmul {n}x{n} (x{calls})", a, b, n, calls


def bench_kernels(repeats: int) -> None:
    rng = random.Random(2024)
    print(f"{'case':28} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for label, a, b, n, calls in kernel_cases(rng):
        def run(impl):
            def group():
                for _ in range(calls):
                    impl.matmul(a, b, n)
            return group

        t_py = time_call(run(_kernels_py), repeats)
        if _kernels_c is None:
            print(f"{label:28} {t_py * 1e3:>10.2f}ms {'n/a':>12} {'n/a':>9}")
            continue
        t_c = time_call(run(_kernels_c), repeats)
        assert _kernels_py.matmul(a, b, n) == _kernels_c.matmul(a, b, n)
        print(f"{label:28} {t_py * 1e3:>10.2f}ms {t_c * 1e3:>10.2f}ms {t_py / t_c:>8.1f}x")


def regularity_sweep(matmul) -> int:
    """Count regular tensors of shape ([2,2],[2]) using one kernel directly."""
    regular = 0
    for n in range(256):
        rows = tuple((n >> (2 * i)) & 3 for i in range(4))
        # complement-transpose of rows: 4x2 -> 2x4
        ct = [0, 0]
        for i, w in enumerate(rows):
            for j in range(2):
                if not (w >> j) & 1:
                    ct[j] |= 1 << i
        g = matmul(matmul(rows, tuple(ct), 4), rows, 2)
        gct = [0, 0]
        for i, w in enumerate(g):
            for j in range(2):
                if not (w >> j) & 1:
                    gct[j] |= 1 << i
        back = matmul(matmul(rows, tuple(gct), 4), rows, 2)
        regular += back == rows
    return regular


def bench_sweep(repeats: int) -> None:
    print()
    print("end-to-end: regularity of all 256 tensors of shape ([2,2],[2])")
    t_py = time_call(lambda: regularity_sweep(_kernels_py.matmul), repeats)
    line = f"{'regularity sweep':28} {t_py * 1e3:>10.2f}ms"
    if _kernels_c is not None:
        t_c = time_call(lambda: regularity_sweep(_kernels_c.matmul), repeats)
        assert regularity_sweep(_kernels_py.matmul) == regularity_sweep(_kernels_c.matmul)
        line += f" {t_c * 1e3:>10.2f}ms {t_py / t_c:>8.1f}x"
    print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="best-of repetitions")
    args = parser.parse_args()
    if _kernels_c is None:
        print("compiled kernel not built; timing the pure backend only")
    bench_kernels(args.repeats)
    bench_sweep(args.repeats)


if __name__ == "__main__":
    main()
