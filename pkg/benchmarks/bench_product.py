"""Compare the compiled and pure-numpy geometric-product kernels.

Run:  python3 benchmarks/bench_product.py [--n 200000]
The compiled path needs numba installed and GEOBYTE_NO_NUMBA unset.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from geobyte import _kernels


def _time(fn, *args, repeat: int = 5) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=200_000, help="batch size")
    args = parser.parse_args()

    rng = np.random.default_rng(42)
    a = rng.standard_normal((args.n, 8))
    b = rng.standard_normal((args.n, 8))

    print(f"batch of {args.n} geometric products (8 coefficients each)")
    print(f"numba available and active: {_kernels.HAVE_NUMBA}")

    t_numpy = _time(_kernels._gp_batch_numpy, a, b)
    print(f"numpy einsum : {t_numpy * 1e3:9.2f} ms  ({args.n / t_numpy:,.0f} products/s)")

    if _kernels.HAVE_NUMBA:
        _kernels.gp_batch(a[:16], b[:16])  # trigger compilation outside the timing
        t_jit = _time(_kernels.gp_batch, a, b)
        print(f"numba kernel : {t_jit * 1e3:9.2f} ms  ({args.n / t_jit:,.0f} products/s)")
        print(f"speedup      : {t_numpy / t_jit:9.2f}x")
        assert np.array_equal(
            _kernels.gp_batch(a[:1000], b[:1000]),
            _kernels._gp_batch_numpy(a[:1000], b[:1000]),
        ), "kernel outputs diverge"
        print("outputs identical on a 1000-row spot check")
    else:
        print("numba path disabled; set up numba and unset GEOBYTE_NO_NUMBA to compare")


if __name__ == "__main__":
    main()
