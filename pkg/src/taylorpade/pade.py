"""Pade matrices of truncated series.

build_pade_matrix(T, d, e) is the block-Hankel matrix of the multiplication
map Q -> QT restricted to the monomials of total degree d+1..m.  Rows are
labeled by those monomials (degree-descending), columns by the monomials of
degree 0..e (degree-ascending); the entry at (row a, col b) is the series
coefficient c_{a-b}, or 0 when b is not componentwise <= a.  Deleting the
constant column gives the reduced matrix whose rank drives the dimension
formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import monomials as mono
from .series import TruncatedPoly, multiply_truncated


@dataclass(frozen=True)
class PadeMatrix:
    matrix: np.ndarray
    row_labels: tuple
    col_labels: tuple
    n: int
    d: int
    e: int
    m: int
    p: int
    reduced: bool = False

    @property
    def shape(self):
        return self.matrix.shape


@lru_cache(maxsize=None)
def structural_index(n: int, d: int, e: int, m: int) -> np.ndarray:
    """Row x column table of positions into monomials(n, 0, m), -1 for zeros."""
    return mono.difference_table(n, (d + 1, m, True), (0, e, False), (0, m, False))


def pade_shape(n: int, d: int, e: int, m: int) -> tuple[int, int]:
    return mono.count_monomials(n, d + 1, m), mono.count_monomials(n, 0, e)


def _check_params(d: int, e: int, m: int):
    if d < 0 or e < 0:
        raise ValueError("degrees must be nonnegative")
    if d >= m:
        raise ValueError(f"empty row range: numerator degree {d} >= series bound {m}")


def build_pade_matrix(T: TruncatedPoly, d: int, e: int) -> PadeMatrix:
    m = T.bound
    _check_params(d, e, m)
    idx = structural_index(T.n, d, e, m)
    entries = np.where(idx >= 0, T.coeffs[np.clip(idx, 0, None)], 0)
    return PadeMatrix(
        entries,
        mono.monomials(T.n, d + 1, m, True),
        mono.monomials(T.n, 0, e),
        T.n,
        d,
        e,
        m,
        T.p,
    )


def build_reduced(T: TruncatedPoly, d: int, e: int) -> PadeMatrix:
    """The Pade matrix minus its constant column."""
    return reduce_matrix(build_pade_matrix(T, d, e))


def reduce_matrix(P: PadeMatrix) -> PadeMatrix:
    if P.reduced:
        return P
    return PadeMatrix(
        np.ascontiguousarray(P.matrix[:, 1:]),
        P.row_labels,
        P.col_labels[1:],
        P.n,
        P.d,
        P.e,
        P.m,
        P.p,
        reduced=True,
    )


def block(P: PadeMatrix, i: int, j: int) -> np.ndarray:
    """The multiplication block by the degree-i component: rows of degree i+j,
    columns of degree j (row order is the matrix's descending-lex order)."""
    if not (0 <= j <= P.e):
        raise ValueError("column degree out of range")
    if not (P.d + 1 <= i + j <= P.m):
        raise ValueError("row degree out of range")
    row_start = mono.count_monomials(P.n, i + j + 1, P.m)
    row_stop = row_start + mono.count_monomials(P.n, i + j, i + j)
    col_start = mono.count_monomials(P.n, 0, j - 1) if j > 0 else 0
    col_stop = col_start + mono.count_monomials(P.n, j, j)
    if P.reduced:
        col_start, col_stop = col_start - 1, col_stop - 1
        if col_start < 0:
            raise ValueError("constant column was deleted")
    return P.matrix[row_start:row_stop, col_start:col_stop]


def cramer_kernel_vector(T: TruncatedPoly) -> np.ndarray:
    """Structural kernel vector of the Pade matrix for (d, e) = (m-2, m-1).

    The three nonzero blocks are the coefficient vectors of T2*T0 - T1^2,
    T2*T1 - T3*T0 and T3*T1 - T2^2 (Cramer minors of the rightmost two-row,
    three-column block pattern), placed in the last three column blocks.
    Beyond the univariate case the block degrees only line up at bound 5;
    for n >= 2 with any other bound no vector of this shape exists.
    """
    m = T.bound
    n = T.n
    if m < 3:
        raise ValueError("need bound >= 3")
    if n >= 2 and m != 5:
        raise ValueError(
            "no closed-form kernel vector for n >= 2 unless the bound is 5"
        )
    e = m - 1
    t0, t1, t2, t3 = (T.graded_component(k).resized(4) for k in range(4))
    p = T.p

    def minor(a, b, c, d_):
        return (multiply_truncated(a, b, 4).coeffs - multiply_truncated(c, d_, 4).coeffs) % p

    blocks = (
        (minor(t2, t0, t1, t1), 2, e - 2),
        (minor(t2, t1, t3, t0), 3, e - 1),
        (minor(t3, t1, t2, t2), 4, e),
    )
    vec = np.zeros(mono.count_monomials(n, 0, e), dtype=np.int64)
    offs4 = mono.degree_offsets(n, 4)
    offs = mono.degree_offsets(n, e)
    for coeffs, poly_deg, col_deg in blocks:
        vec[offs[col_deg] : offs[col_deg + 1]] = coeffs[offs4[poly_deg] : offs4[poly_deg + 1]]
    return vec
