"""Time the numba kernels against the numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--length 10] [--repeat 5]

Each kernel is called once untimed so compilation is not counted.
"""

import argparse
import time

import numpy as np

from bsgrowth import kernels
from bsgrowth.automata import adjacency_matrix, expand_to_On
from bsgrowth.growth import theorem_polynomial


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--length", type=int, default=10, help="word length for evaluate_words")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("-n", type=int, default=3)
    args = parser.parse_args()

    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is unavailable or disabled (BSG_DISABLE_NUMBA); nothing to compare")

    codes = kernels.all_words(args.length)
    matrix = adjacency_matrix(expand_to_On(args.n))
    coeffs = np.array(theorem_polynomial(args.n).coeffs, dtype=float)

    cases = {
        f"evaluate_words 4^{args.length}": lambda b: kernels.evaluate_words(codes, args.n, backend=b),
        "spectral_radius O_n": lambda b: kernels.spectral_radius(matrix, backend=b),
        "power_iteration O_n": lambda b: kernels.power_iteration(matrix + matrix.T, backend=b),
    }

    np.testing.assert_array_equal(
        kernels.evaluate_words(codes, args.n, backend="numba"),
        kernels.evaluate_words(codes, args.n, backend="numpy"),
    )
    print(f"{'kernel':<28}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for name, fn in cases.items():
        t_jit = best_of(lambda: fn("numba"), args.repeat)
        t_np = best_of(lambda: fn("numpy"), args.repeat)
        print(f"{name:<28}{t_jit * 1e3:>12.3f}{t_np * 1e3:>12.3f}{t_np / t_jit:>10.1f}")

    t_root = best_of(lambda: kernels.bisect_newton(coeffs, 1e-9, 1 - 1e-9), args.repeat)
    print(f"{'bisect_newton (numba only)':<28}{t_root * 1e3:>12.3f}")


if __name__ == "__main__":
    main()
