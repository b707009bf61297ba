# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the machine-word inner loops.

Same signatures and results as ``_kernels_py``; callers go through
``markoff.kernels`` which checks the word-size limits first.
"""
import numpy as np

cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t, uint64_t

cnp.import_array()


def half_roots(int64_t l, int64_t m):
    """Every x with 0 < 2x < m and x*x + l == 0 (mod m)."""
    cdef uint64_t x, um = <uint64_t>m, target
    cdef list out = []
    target = (um - (<uint64_t>l % um)) % um
    x = 1
    while 2 * x < um:
        if (x * x) % um == target:
            out.append(<int64_t>x)
        x += 1
    return out


def residue_counts(int64_t m, int lmax):
    """``counts[l]`` = #{x : 0 < 2x < m, x*x + l == 0 (mod m)} for l = 0..lmax."""
    cdef cnp.ndarray[int64_t, ndim=1] counts = np.zeros(lmax + 1, dtype=np.int64)
    cdef uint64_t x, um = <uint64_t>m, r, l
    x = 1
    while 2 * x < um:
        r = (x * x) % um
        l = (um - r) % um
        if l == 0:
            l = um
        while l <= <uint64_t>lmax:
            counts[l] += 1
            l += um
        x += 1
    return counts


def box_min(int64_t a, int64_t b, int64_t c, int K):
    """Minimum of |a x^2 + b x y + c y^2| over 0 < max(|x|,|y|) <= K.

    Returns ``(value, x, y)`` for the first minimiser in scan order, which
    starts at (1, 0).
    """
    cdef int64_t best = -1, v
    cdef int x, y, bx = 0, by = 0
    for y in range(0, K + 1):
        for x in range(-K, K + 1):
            if y == 0 and x <= 0:
                continue
            v = a * x * x + b * x * y + c * y * y
            if v < 0:
                v = -v
            if best < 0 or v < best:
                best = v
                bx = x
                by = y
    return best, bx, by


def x2p1_table(int64_t limit):
    """Roots of x^2 + 1 modulo every odd prime power and twice one, up to ``limit``.

    Factors every ``x**2 + 1`` with ``2x < limit`` by sieving, then for each
    divisor ``m = p**j`` or ``2 p**j`` with ``2x < m <= limit`` bumps
    ``count[m]`` and stores ``x`` in ``root[m]``. The residual left at
    index x after earlier primes are removed is 1 or a prime.
    """
    cdef int64_t X = (limit - 1) // 2 + 1
    cdef cnp.ndarray[uint64_t, ndim=1] val = np.empty(max(X, 1), dtype=np.uint64)
    cdef cnp.ndarray[uint8_t, ndim=1] count = np.zeros(limit + 1, dtype=np.uint8)
    cdef cnp.ndarray[int64_t, ndim=1] root = np.zeros(limit + 1, dtype=np.int64)
    cdef int64_t x, y, start, k, e, j
    cdef uint64_t p, pj
    for x in range(X):
        val[x] = <uint64_t>x * <uint64_t>x + 1
        if x & 1:
            val[x] >>= 1
    for x in range(1, X):
        p = val[x]
        if p <= 1:
            continue
        for k in range(2):
            start = x if k == 0 else <int64_t>(p - <uint64_t>x)
            if k == 1 and p - <uint64_t>x >= <uint64_t>X:
                break
            y = start
            while y < X:
                e = 0
                while val[y] % p == 0:
                    val[y] //= p
                    e += 1
                pj = p
                for j in range(e):
                    if pj > <uint64_t>limit:
                        break
                    if <uint64_t>(2 * y) < pj:
                        count[pj] += 1
                        root[pj] = y
                    if (y & 1) and <uint64_t>y < pj and 2 * pj <= <uint64_t>limit:
                        count[2 * pj] += 1
                        root[2 * pj] = y
                    if pj > <uint64_t>limit // p:
                        break
                    pj *= p
                if <uint64_t>y + p >= <uint64_t>X:
                    break
                y += <int64_t>p
    return count, root
