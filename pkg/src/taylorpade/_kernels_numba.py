"""Numba-jitted elimination kernels over Z/p (the hot path).

All kernels mutate their int64 matrix argument in place and assume the
entries are already reduced into [0, p) with p < 2**31, so every product
of two entries fits in int64.
"""

import numpy as np  # noqa: F401  (numba needs numpy present at compile time)
from numba import njit


@njit(cache=True, nogil=True)
def _pow_mod(base, exp, p):
    result = 1
    b = base % p
    e = exp
    while e > 0:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


@njit(cache=True, nogil=True)
def rank_in_place(a, p):
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                tmp = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = tmp
        inv = _pow_mod(a[r, c], p - 2, p)
        for i in range(r + 1, rows):
            x = a[i, c]
            if x != 0:
                f = x * inv % p
                for j in range(c, cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        r += 1
    return r


@njit(cache=True, nogil=True)
def rref_in_place(a, p, piv):
    """Full reduced row echelon form; fills piv[:rank] with pivot columns."""
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                tmp = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = tmp
        inv = _pow_mod(a[r, c], p - 2, p)
        for j in range(c, cols):
            a[r, j] = a[r, j] * inv % p
        for i in range(rows):
            if i != r:
                x = a[i, c]
                if x != 0:
                    for j in range(c, cols):
                        a[i, j] = (a[i, j] - x * a[r, j]) % p
        piv[r] = c
        r += 1
    return r


@njit(cache=True, nogil=True)
def det_in_place(a, p):
    nn = a.shape[0]
    det = 1
    for c in range(nn):
        pr = -1
        for i in range(c, nn):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            return 0
        if pr != c:
            for j in range(c, nn):
                tmp = a[c, j]
                a[c, j] = a[pr, j]
                a[pr, j] = tmp
            det = (p - det) % p
        pivot = a[c, c]
        det = det * pivot % p
        inv = _pow_mod(pivot, p - 2, p)
        for i in range(c + 1, nn):
            x = a[i, c]
            if x != 0:
                f = x * inv % p
                for j in range(c, nn):
                    a[i, j] = (a[i, j] - f * a[c, j]) % p
    return det
