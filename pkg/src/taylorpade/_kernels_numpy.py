"""Pure-numpy elimination kernels over Z/p (fallback when numba is off).

Same in-place contracts as the jitted versions: int64 matrices with entries
in [0, p), p < 2**31 so products of two entries never overflow int64.
"""

import numpy as np


def rank_in_place(a, p):
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        below = a[r + 1 :, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            factors = below[hit] * inv % p
            a[r + 1 + hit, c:] = (a[r + 1 + hit, c:] - factors[:, None] * a[r, c:]) % p
        r += 1
    return r


def rref_in_place(a, p, piv):
    """Full reduced row echelon form; fills piv[:rank] with pivot columns."""
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit, c:] = (a[hit, c:] - col[hit, None] * a[r, c:]) % p
        piv[r] = c
        r += 1
    return r


def det_in_place(a, p):
    nn = a.shape[0]
    det = 1
    for c in range(nn):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        pr = c + int(nz[0])
        if pr != c:
            a[[c, pr]] = a[[pr, c]]
            det = (p - det) % p
        pivot = int(a[c, c])
        det = det * pivot % p
        inv = pow(pivot, p - 2, p)
        below = a[c + 1 :, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            factors = below[hit] * inv % p
            a[c + 1 + hit, c:] = (a[c + 1 + hit, c:] - factors[:, None] * a[c, c:]) % p
    return int(det)
