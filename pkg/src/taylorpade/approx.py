"""Pade approximation: invert the truncation map where possible.

Given a truncated series T and a type (d, e), a denominator Q with Q(0) = 1
solves the problem exactly when the product QT has no monomials of degree
d+1..m, i.e. when Q's coefficient vector lies in the kernel of the Pade
matrix with nonzero constant coordinate.  The kernel of the reduced matrix
measures the non-uniqueness (fiber dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import monomials as mono
from .linalg import inv_mod, kernel_basis, rank
from .pade import build_pade_matrix, reduce_matrix
from .series import TruncatedPoly, multiply_truncated


@dataclass(frozen=True)
class ApproxResult:
    numerator: TruncatedPoly | None
    denominator: TruncatedPoly | None
    fiber_dim: int
    exact: bool

    @property
    def found(self) -> bool:
        return self.numerator is not None


def pade_approximant(T: TruncatedPoly, d: int, e: int) -> ApproxResult:
    """Solve for (P, Q) with P/Q = T through total degree m, if possible.

    Returns the pair read off a kernel vector with nonzero constant
    coordinate (normalized to Q(0) = 1); reports absence when every kernel
    vector has constant coordinate zero.  The residual is re-verified
    exactly before the pair is returned.
    """
    if T.constant_term != 1:
        raise ValueError("series must have constant term 1")
    if d < 0 or e < 0:
        raise ValueError("degrees must be nonnegative")
    m = T.bound
    n = T.n
    p = T.p
    cols = comb(e + n, n)
    if d >= m:
        # trivial chart: P = T, Q = 1; every denominator works
        return ApproxResult(T.resized(d), TruncatedPoly.one(n, e, p), cols - 1, True)
    pm = build_pade_matrix(T, d, e)
    fiber = (cols - 1) - rank(reduce_matrix(pm).matrix, p)
    for v in kernel_basis(pm.matrix, p):
        if v[0] != 0:
            q = v * inv_mod(int(v[0]), p) % p
            # column labels are exactly the degree-ascending monomials of Q
            den = TruncatedPoly(n, e, p, q)
            full = multiply_truncated(den, T, m)
            offs = mono.degree_offsets(n, m)
            exact = not full.coeffs[offs[d + 1] :].any()
            return ApproxResult(full.resized(d), den, fiber, exact)
    return ApproxResult(None, None, fiber, False)


def on_variety_heuristic(T: TruncatedPoly, d: int, e: int) -> bool:
    """Membership test for the truncation variety.

    Exact for one variable with d + e < m, where membership is the rank
    condition on the Pade matrix.  For n >= 2 this reports whether an exact
    approximant exists, i.e. membership in the dense parametrized subset
    rather than its closure: sound but incomplete.
    """
    if T.constant_term != 1:
        raise ValueError("series must have constant term 1")
    if T.n == 1 and d + e < T.bound:
        return rank(build_pade_matrix(T, d, e).matrix, T.p) <= e
    return pade_approximant(T, d, e).found
