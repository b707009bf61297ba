"""Pure-Python implementations of the inner loops in ``_kernels.pyx``."""
from __future__ import annotations

from array import array

import numpy as np


def half_roots(l: int, m: int) -> list[int]:
    target = -l % m
    return [x for x in range(1, (m + 1) // 2) if x * x % m == target]


def residue_counts(m: int, lmax: int) -> np.ndarray:
    counts = np.zeros(lmax + 1, dtype=np.int64)
    half = (m + 1) // 2
    if half <= 1:
        return counts
    xs = np.arange(1, half, dtype=np.int64)
    # x < 2**31 keeps x*x inside int64
    hist = np.bincount((xs * xs) % m, minlength=m)
    for l in range(1, lmax + 1):
        counts[l] = hist[-l % m]
    return counts


def box_min(a: int, b: int, c: int, K: int) -> tuple[int, int, int]:
    best = None
    bx = by = 0
    for y in range(K + 1):
        for x in range(-K, K + 1):
            if y == 0 and x <= 0:
                continue
            v = abs(a * x * x + b * x * y + c * y * y)
            if best is None or v < best:
                best, bx, by = v, x, y
    return best, bx, by


def x2p1_table(limit: int) -> tuple[np.ndarray, np.ndarray]:
    X = (limit - 1) // 2 + 1
    val = array("Q", (x * x + 1 for x in range(X)))
    for x in range(1, X, 2):
        val[x] >>= 1
    count = np.zeros(limit + 1, dtype=np.uint8)
    root = np.zeros(limit + 1, dtype=np.int64)
    for x in range(1, X):
        p = val[x]
        if p <= 1:
            continue
        for start in (x, p - x):
            y = start
            while y < X:
                e = 0
                while val[y] % p == 0:
                    val[y] //= p
                    e += 1
                pj = p
                for _ in range(e):
                    if pj > limit:
                        break
                    if 2 * y < pj:
                        count[pj] += 1
                        root[pj] = y
                    if y & 1 and y < pj and 2 * pj <= limit:
                        count[2 * pj] += 1
                        root[2 * pj] = y
                    pj *= p
                y += p
    return count, root
