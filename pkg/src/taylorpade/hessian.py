"""Gradient and Hessian of f = det(Pade matrix) via adjugate traces.

For a square Pade matrix A that is linear in the series coefficients, the
partial of det with respect to a coefficient c is det(A) * tr(A^-1 E_c),
where E_c marks the entries holding c.  Second partials follow from one more
trace, so a single inverse per point gives the whole Hessian exactly over
the prime field.  Rank probes on that Hessian detect the identically
vanishing Hessians of truncation hypersurfaces, and the polar-relation check
verifies the block-Hankel annihilator that explains them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from . import monomials as mono
from .linalg import DEFAULT_PRIME, determinant, inverse, matmul_mod, rank
from .pade import pade_shape, structural_index
from .rng import make_rng
from .series import TruncatedPoly


class SingularPointError(RuntimeError):
    """The sampled point made the Pade matrix singular."""


@dataclass(frozen=True)
class HessianReport:
    n: int
    d: int
    e: int
    m: int
    variables: tuple
    rank: int
    corank: int
    trials: int
    seed: int
    prime: int
    predicted_corank: int | None


@lru_cache(maxsize=None)
def _entry_positions(n: int, d: int, e: int, m: int):
    """Structural entries of the Pade matrix grouped by the variable they hold.

    Returns (variables, rows, cols, var_ids): variables is the tuple of
    exponents that actually appear; (rows[k], cols[k]) is a matrix position
    holding variables[var_ids[k]].
    """
    idx = structural_index(n, d, e, m)
    rr, cc = np.nonzero(idx >= 0)
    vals = idx[rr, cc]
    uniq, var_ids = np.unique(vals, return_inverse=True)
    mons = mono.monomials(n, 0, m)
    variables = tuple(mons[int(v)] for v in uniq)
    out = (variables, rr.astype(np.int64), cc.astype(np.int64), var_ids.astype(np.int64))
    for arr in out[1:]:
        arr.setflags(write=False)
    return out


def appearing_variables(n: int, d: int, e: int, m: int) -> tuple:
    return _entry_positions(n, d, e, m)[0]


def _require_square(n, d, e, m):
    rows, cols = pade_shape(n, d, e, m)
    if rows != cols:
        raise ValueError(f"Pade matrix is {rows}x{cols}, not square")


def _point_matrix(T: TruncatedPoly, d: int, e: int) -> np.ndarray:
    idx = structural_index(T.n, d, e, T.bound)
    return np.where(idx >= 0, T.coeffs[np.clip(idx, 0, None)], 0)


def _traces(T: TruncatedPoly, d: int, e: int):
    """(f, adjugate-trace vector per variable, B = A^-1, positions)."""
    n, m, p = T.n, T.bound, T.p
    _require_square(n, d, e, m)
    A = _point_matrix(T, d, e)
    f = determinant(A, p)
    if f == 0:
        raise SingularPointError("Pade matrix singular at this point")
    B = inverse(A, p)
    variables, rows, cols, var_ids = _entry_positions(n, d, e, m)
    tvec = np.zeros(len(variables), dtype=np.int64)
    np.add.at(tvec, var_ids, B[cols, rows])
    tvec %= p
    return f, tvec, B, (variables, rows, cols, var_ids)


def det_gradient(T: TruncatedPoly, d: int, e: int) -> dict:
    """Partials of det at the point T: exponent -> f * tr(A^-1 E_c) mod p.

    Only the variables appearing in the matrix carry an entry; the point must
    keep the matrix invertible (SingularPointError otherwise).
    """
    f, tvec, _, (variables, *_rest) = _traces(T, d, e)
    grads = (f * tvec) % T.p
    return {g: int(v) for g, v in zip(variables, grads)}


def hessian_matrix(T: TruncatedPoly, d: int, e: int):
    """(H, variables, f): the symmetric second-derivative matrix of det at T,
    restricted to the appearing variables."""
    p = T.p
    f, tvec, B, (variables, rows, cols, var_ids) = _traces(T, d, e)
    # pairwise trace tr(B E_c B E_c'): sum over position pairs of
    # B[col, row'] * B[col', row]
    G = B[cols[:, None], rows[None, :]]
    term = G * G.T % p
    v = len(variables)
    pair = np.zeros((v, v), dtype=np.int64)
    np.add.at(pair, (var_ids[:, None], var_ids[None, :]), term)
    pair %= p
    H = (np.outer(tvec, tvec) % p - pair) % p * f % p
    return H, variables, f


def _random_point(n, d, e, m, rng, p) -> TruncatedPoly:
    """Uniform draw over the coefficients that appear in the matrix."""
    idx = structural_index(n, d, e, m)
    T = TruncatedPoly(n, m, p)
    used = np.unique(idx[idx >= 0])
    T.coeffs[used] = rng.integers(0, p, size=used.shape[0], dtype=np.int64)
    return T


def hessian_rank(
    n: int,
    d: int,
    e: int,
    m: int,
    seed: int = 0,
    trials: int = 3,
    prime: int = DEFAULT_PRIME,
    max_attempts: int = 32,
) -> HessianReport:
    """Generic rank of the Hessian of det, maximized over random trials."""
    _require_square(n, d, e, m)
    rng = make_rng(seed)
    variables = appearing_variables(n, d, e, m)
    best = 0
    for _ in range(max(1, trials)):
        for _attempt in range(max_attempts):
            point = _random_point(n, d, e, m, rng, prime)
            try:
                H, _, _ = hessian_matrix(point, d, e)
            except SingularPointError:
                continue
            break
        else:
            raise SingularPointError(
                f"no invertible point found in {max_attempts} draws; "
                "the determinant is likely identically zero"
            )
        best = max(best, rank(H, prime))
    predicted = None
    if m == d + 1 and d >= e:
        predicted = comb(n + e, n) - comb(n + d - e, n - 1)
    return HessianReport(
        n, d, e, m, variables, best, len(variables) - best,
        max(1, trials), seed, prime, predicted,
    )


@dataclass(frozen=True)
class PolarRelations:
    matrix: np.ndarray | None
    vector: np.ndarray | None
    annihilates: bool
    rank_deficient: bool
    vacuous: bool

    @property
    def passed(self) -> bool:
        return self.vacuous or (self.annihilates and self.rank_deficient)


def polar_relations(
    n: int,
    d: int,
    e: int,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
    point: TruncatedPoly | None = None,
    max_attempts: int = 32,
) -> PolarRelations:
    """Check the linear relations among the partials of det for m = d + 1.

    Stacks the Hankel blocks M_j whose (a, b) entry is the partial for the
    exponent a + b, b running over the degree d-e+1 monomials, and verifies
    that the coefficient vector of the degree d-e+1 component of the point
    annihilates it; also checks that the stack has dependent columns.  A
    point with vanishing bottom component satisfies the relations vacuously.
    """
    m = d + 1
    if e < 1 or d - e + 1 < 1:
        raise ValueError("need 1 <= e <= d")
    _require_square(n, d, e, m)
    low = d - e + 1
    if point is None:
        rng = make_rng(seed)
        for _attempt in range(max_attempts):
            point = _random_point(n, d, e, m, rng, prime)
            if determinant(_point_matrix(point, d, e), prime) != 0:
                break
        else:
            raise SingularPointError(
                f"no invertible point found in {max_attempts} draws"
            )
    bottom = point.coeffs[point.degree_slice(low)]
    if not bottom.any():
        return PolarRelations(None, None, True, True, True)
    grad = det_gradient(point, d, e)
    col_exps = mono.monomials(n, low, low)
    rows = []
    for j in range(d + 1, low, -1):
        for a in mono.monomials(n, j - low, j - low):
            rows.append([grad[tuple(x + y for x, y in zip(a, b))] for b in col_exps])
    M = np.array(rows, dtype=np.int64)
    residual = matmul_mod(M, bottom, prime)
    annihilates = not residual.any()
    deficient = rank(M, prime) < len(col_exps)
    return PolarRelations(M, bottom, annihilates, deficient, False)


def polar_relations_check(
    n: int,
    d: int,
    e: int,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
    point: TruncatedPoly | None = None,
) -> bool:
    return polar_relations(n, d, e, seed=seed, prime=prime, point=point).passed
