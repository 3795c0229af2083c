"""Exact dense linear algebra over a prime field Z/p.

Matrices are numpy int64 arrays with entries reduced into [0, p).  The
elimination cores come from the selected backend (numba-jitted or pure
numpy); everything is exact, no floating point anywhere.  The default prime
2**31 - 1 keeps any product of two entries inside int64.
"""

from __future__ import annotations

import numpy as np

from .backend import BACKEND, kernels  # noqa: F401  (BACKEND re-exported)

DEFAULT_PRIME = 2147483647  # 2**31 - 1, Mersenne prime
MAX_PRIME = 2147483647

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 64-bit range."""
    m = int(m)
    if m < 2:
        return False
    for q in _MR_BASES:
        if m % q == 0:
            return m == q
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def validate_prime(p) -> int:
    p = int(p)
    if p < 3 or p % 2 == 0 or p > MAX_PRIME:
        raise ValueError(f"need an odd prime in [3, {MAX_PRIME}], got {p}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def inv_mod(x: int, p: int) -> int:
    x = int(x) % p
    if x == 0:
        raise ZeroDivisionError("inverse of zero in Z/p")
    return pow(x, p - 2, p)


def as_matrix(a, p: int) -> np.ndarray:
    arr = np.array(a, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return np.ascontiguousarray(arr % p)


def rank(a, p: int) -> int:
    m = as_matrix(a, p)
    if m.shape[0] == 0 or m.shape[1] == 0:
        return 0
    return int(kernels.rank_in_place(m, p))


def rref(a, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form and the tuple of pivot columns."""
    m = as_matrix(a, p)
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return m, ()
    piv = np.zeros(min(rows, cols), dtype=np.int64)
    r = int(kernels.rref_in_place(m, p, piv))
    return m, tuple(int(c) for c in piv[:r])


def kernel_basis(a, p: int) -> np.ndarray:
    """Basis of the right kernel, one vector per row; A @ v == 0 mod p for each."""
    m = as_matrix(a, p)
    rows, cols = m.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    red, pivots = rref(m, p)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (p - int(red[i, f])) % p
    return basis


def solve(a, b, p: int) -> np.ndarray | None:
    """Some x with A @ x == b mod p, or None when the system is inconsistent."""
    m = as_matrix(a, p)
    rows, cols = m.shape
    bv = np.asarray(b, dtype=np.int64).reshape(-1) % p
    if bv.shape[0] != rows:
        raise ValueError("right-hand side length mismatch")
    if rows == 0:
        return np.zeros(cols, dtype=np.int64)
    aug = np.ascontiguousarray(np.concatenate([m, bv[:, None]], axis=1))
    red, pivots = rref(aug, p)
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = red[i, cols]
    return x


def determinant(a, p: int) -> int:
    m = as_matrix(a, p)
    if m.shape[0] != m.shape[1]:
        raise ValueError("determinant of a non-square matrix")
    if m.shape[0] == 0:
        return 1
    return int(kernels.det_in_place(m, p))


def inverse(a, p: int) -> np.ndarray | None:
    """A^-1 mod p, or None when A is singular."""
    m = as_matrix(a, p)
    nn = m.shape[0]
    if m.shape[1] != nn:
        raise ValueError("inverse of a non-square matrix")
    if nn == 0:
        return np.zeros((0, 0), dtype=np.int64)
    aug = np.ascontiguousarray(np.concatenate([m, np.eye(nn, dtype=np.int64)], axis=1))
    red, pivots = rref(aug, p)
    # a pivot escaping into the identity block means the left block is singular
    if len(pivots) < nn or pivots[-1] >= nn:
        return None
    return np.ascontiguousarray(red[:, nn:])


def matmul_mod(a, b, p: int) -> np.ndarray:
    """Exact (a @ b) % p via a hi/lo 16-bit split, avoiding int64 overflow."""
    aa = np.asarray(a, dtype=np.int64) % p
    bb = np.asarray(b, dtype=np.int64) % p
    hi = bb >> 16
    lo = bb & 0xFFFF
    return ((aa @ hi % p) * 65536 + aa @ lo) % p
