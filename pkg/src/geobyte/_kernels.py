"""Geometric-product kernels over the 8 blade coefficients.

The blade multiplication table is built once by transposition counting,
then products are pure table lookups.  The hot loops are compiled with
numba when it is importable; set ``GEOBYTE_NO_NUMBA=1`` to force the
pure-numpy path (the benchmark in benchmarks/ compares both).
"""

from __future__ import annotations

import os

import numpy as np

# Blade storage order is fixed once, everywhere: scalar, the three
# vectors, then e12, e23, e13 (note e23 before e13), then the pseudoscalar.
BLADE_TUPLES: tuple[tuple[int, ...], ...] = (
    (),
    (1,),
    (2,),
    (3,),
    (1, 2),
    (2, 3),
    (1, 3),
    (1, 2, 3),
)
BLADE_NAMES: tuple[str, ...] = (
    "e0", "e1", "e2", "e3", "e12", "e23", "e13", "e123",
)
BLADE_INDEX: dict[tuple[int, ...], int] = {t: i for i, t in enumerate(BLADE_TUPLES)}
NAME_INDEX: dict[str, int] = {n: i for i, n in enumerate(BLADE_NAMES)}


def _blade_product(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Multiply two basis blades; returns (sign, result indices).

    Sign counts the transpositions needed to sort the concatenated index
    list; equal adjacent indices then cancel pairwise (e_i e_i = e0,
    positive signature).
    """
    idx = list(a) + list(b)
    sign = 1
    # bubble sort, counting swaps
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    out: list[int] = []
    for k in idx:
        if out and out[-1] == k:
            out.pop()
        else:
            out.append(k)
    return sign, tuple(out)


def _build_tables() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    idx = np.zeros((8, 8), dtype=np.int64)
    sgn = np.zeros((8, 8), dtype=np.float64)
    tensor = np.zeros((8, 8, 8), dtype=np.float64)
    for i, bi in enumerate(BLADE_TUPLES):
        for j, bj in enumerate(BLADE_TUPLES):
            s, res = _blade_product(bi, bj)
            k = BLADE_INDEX[res]
            idx[i, j] = k
            sgn[i, j] = s
            tensor[i, j, k] = s
    return idx, sgn, tensor


PROD_IDX, PROD_SGN, PROD_TENSOR = _build_tables()
PROD_IDX.setflags(write=False)
PROD_SGN.setflags(write=False)
PROD_TENSOR.setflags(write=False)


def _gp_numpy(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum("i,j,ijk->k", a, b, PROD_TENSOR)


def _gp_batch_numpy(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum("ni,nj,ijk->nk", a, b, PROD_TENSOR)


HAVE_NUMBA = False
if not os.environ.get("GEOBYTE_NO_NUMBA"):
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:
        pass

if HAVE_NUMBA:

    @njit(cache=True)
    def _gp_jit(a, b, idx, sgn):  # pragma: no cover - exercised via gp()
        out = np.zeros(8)
        for i in range(8):
            ai = a[i]
            if ai == 0.0:
                continue
            for j in range(8):
                out[idx[i, j]] += sgn[i, j] * ai * b[j]
        return out

    @njit(cache=True)
    def _gp_batch_jit(a, b, idx, sgn):  # pragma: no cover
        n = a.shape[0]
        out = np.zeros((n, 8))
        for m in range(n):
            for i in range(8):
                ai = a[m, i]
                if ai == 0.0:
                    continue
                for j in range(8):
                    out[m, idx[i, j]] += sgn[i, j] * ai * b[m, j]
        return out

    def gp(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return _gp_jit(a, b, PROD_IDX, PROD_SGN)

    def gp_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return _gp_batch_jit(a, b, PROD_IDX, PROD_SGN)

else:
    gp = _gp_numpy
    gp_batch = _gp_batch_numpy
