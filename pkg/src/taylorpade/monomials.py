"""Exponent-vector enumeration and ordering.

A monomial x^g in n variables is a plain tuple of n nonnegative ints.
Degree ranges are enumerated in one fixed total order: primary key total
degree, secondary key lexicographic with x1 heaviest (ascending lex inside
ascending-degree ranges, descending lex inside descending-degree ranges).
Every matrix row and column in this package is addressed through these
enumerations, so the order here is load-bearing.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

Exponent = tuple[int, ...]


def total_degree(exponent) -> int:
    return sum(exponent)


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, degree: int) -> tuple[Exponent, ...]:
    """All exponents of the given total degree, in ascending lex order."""
    if n < 1:
        raise ValueError("variable count must be >= 1")
    if degree < 0:
        return ()
    if n == 1:
        return ((degree,),)
    out = []
    for first in range(degree + 1):
        for rest in monomials_of_degree(n - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomials(n: int, lo: int, hi: int, descending: bool = False) -> tuple[Exponent, ...]:
    """Exponents with lo <= total degree <= hi in the declared total order."""
    if lo < 0:
        raise ValueError("degree bounds must be nonnegative")
    if hi < lo:
        return ()
    out: list[Exponent] = []
    if descending:
        for k in range(hi, lo - 1, -1):
            out.extend(reversed(monomials_of_degree(n, k)))
    else:
        for k in range(lo, hi + 1):
            out.extend(monomials_of_degree(n, k))
    return tuple(out)


def count_monomials(n: int, lo: int, hi: int) -> int:
    """Number of exponents with lo <= total degree <= hi, exactly."""
    if lo < 0:
        raise ValueError("degree bounds must be nonnegative")
    if hi < lo:
        return 0
    low = comb(lo - 1 + n, n) if lo > 0 else 0
    return comb(hi + n, n) - low


def subtract(a: Exponent, b: Exponent) -> Exponent | None:
    """Componentwise a - b, or None when some component would go negative."""
    if len(a) != len(b):
        raise ValueError("exponent length mismatch")
    diff = tuple(x - y for x, y in zip(a, b))
    if min(diff) < 0:
        return None
    return diff


@lru_cache(maxsize=None)
def position_map(n: int, lo: int, hi: int, descending: bool = False) -> dict:
    """exponent -> index within monomials(n, lo, hi, descending)."""
    return {g: i for i, g in enumerate(monomials(n, lo, hi, descending))}


@lru_cache(maxsize=None)
def degree_offsets(n: int, bound: int) -> tuple[int, ...]:
    """offsets[k] = index of the first degree-k exponent in monomials(n, 0, bound).

    The trailing entry is the total length, so degree k occupies the slice
    [offsets[k], offsets[k + 1]).
    """
    offs = [0]
    for k in range(bound + 1):
        offs.append(offs[-1] + comb(n - 1 + k, n - 1))
    return tuple(offs)


@lru_cache(maxsize=None)
def difference_table(n: int, row_range: tuple, col_range: tuple, value_range: tuple) -> np.ndarray:
    """idx[i, j] = position of rows[i] - cols[j] in the value enumeration, -1 if absent.

    Each range is a (lo, hi, descending) triple over the same n.  -1 marks a
    structural zero: either some component of the difference is negative or
    the difference falls outside the value range.
    """
    rows = monomials(n, *row_range)
    cols = monomials(n, *col_range)
    pos = position_map(n, *value_range)
    idx = np.full((len(rows), len(cols)), -1, dtype=np.int64)
    for j, b in enumerate(cols):
        for i, a in enumerate(rows):
            d = tuple(x - y for x, y in zip(a, b))
            if min(d) >= 0:
                idx[i, j] = pos.get(d, -1)
    idx.setflags(write=False)
    return idx
