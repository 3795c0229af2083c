"""Dimensions, defects and fiber dimensions of Taylor varieties.

The actual dimension is (C(d+n,n) - 1) + rank of the reduced Pade matrix at
a random point of the parametrization.  Rank can only drop on special
samples, so the maximum over independent trials is wrong only when every
trial lands on a rank-dropping point: probability at most (size/p)^trials,
negligible at the default prime.  An independent Jacobian-rank computation
cross-checks the formula.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

import numpy as np

from . import monomials as mono
from .linalg import DEFAULT_PRIME, rank
from .pade import build_reduced
from .rng import derive_seed, make_rng
from .series import TruncatedPoly, multiply_truncated, random_unit_poly, reciprocal_truncated, taylor_quotient

DEFAULT_TRIALS = 3


@dataclass(frozen=True)
class DimensionReport:
    n: int
    d: int
    e: int
    m: int
    expected_dim: int
    actual_dim: int
    ambient_dim: int
    parameter_count: int
    defect: int
    fiber_dim: int
    trials: int
    prime: int
    seed: int
    method: str
    proviso_ok: bool

    @property
    def defective(self) -> bool:
        return self.defect > 0


def ambient_dimension(n: int, m: int) -> int:
    return comb(m + n, n) - 1


def parameter_count(n: int, d: int, e: int) -> int:
    return comb(d + n, n) + comb(e + n, n) - 2


def expected_dimension(n: int, d: int, e: int, m: int) -> int:
    """min of the parameter count and the ambient dimension."""
    if min(n, d, e, m) < 0 or n < 1:
        raise ValueError("bad parameters")
    return min(parameter_count(n, d, e), ambient_dimension(n, m))


def generic_point(n: int, d: int, e: int, m: int, rng, p: int) -> TruncatedPoly:
    """Order-m expansion of a random rational pair: a point of the parametrization."""
    num = random_unit_poly(n, d, rng, p)
    den = random_unit_poly(n, e, rng, p)
    return taylor_quotient(num, den, m)


def taylor_dimension(
    n: int,
    d: int,
    e: int,
    m: int,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    prime: int = DEFAULT_PRIME,
) -> DimensionReport:
    ambient = ambient_dimension(n, m)
    params = parameter_count(n, d, e)
    expected = expected_dimension(n, d, e, m)
    if d >= m:
        # every truncation is realized by the numerator alone (Q = 1)
        return DimensionReport(
            n, d, e, m, expected, ambient, ambient, params,
            expected - ambient, comb(e + n, n) - 1, 0, prime, seed,
            "fills-ambient", False,
        )
    rng = make_rng(seed)
    cols = comb(e + n, n) - 1
    best = 0
    for _ in range(max(1, trials)):
        point = generic_point(n, d, e, m, rng, prime)
        best = max(best, rank(build_reduced(point, d, e).matrix, prime))
    actual = comb(d + n, n) - 1 + best
    proviso_ok = actual < comb(m + n, n)
    method = "reduced-pade-rank"
    if not proviso_ok:
        actual = ambient
        method = "reduced-pade-rank:clamped"
    return DimensionReport(
        n, d, e, m, expected, actual, ambient, params,
        expected - actual, cols - best, max(1, trials), prime, seed,
        method, proviso_ok,
    )


def dimension_via_jacobian(
    n: int, d: int, e: int, m: int, seed: int = 0, prime: int = DEFAULT_PRIME
) -> int:
    """Rank of the Jacobian of the parametrization at a random parameter point.

    Columns are indexed by the nonconstant coefficients of the numerator and
    denominator, rows by the nonconstant series coefficients (chart c_0 = 1).
    The numerator column for exponent a is the shifted expansion of 1/Q, the
    denominator column for exponent b is the shifted expansion of -P/Q^2.
    """
    rng = make_rng(seed)
    num = random_unit_poly(n, d, rng, prime)
    den = random_unit_poly(n, e, rng, prime)
    recip = reciprocal_truncated(den, m)
    series = multiply_truncated(num, recip, m)
    ratio2 = multiply_truncated(series, recip, m)  # P / Q^2
    row_range = (1, m, False)
    value_range = (0, m, False)
    blocks = []
    if d >= 1:
        idx = mono.difference_table(n, row_range, (1, d, False), value_range)
        blocks.append(np.where(idx >= 0, recip.coeffs[np.clip(idx, 0, None)], 0))
    if e >= 1:
        neg = (prime - ratio2.coeffs) % prime
        idx = mono.difference_table(n, row_range, (1, e, False), value_range)
        blocks.append(np.where(idx >= 0, neg[np.clip(idx, 0, None)], 0))
    if not blocks:
        return 0
    return rank(np.hstack(blocks), prime)


def scan_triples(n: int, m_max: int) -> list[tuple[int, int, int]]:
    """All (d, e, m) with 1 <= d, e < m <= m_max, sorted by (m, d, e)."""
    return [
        (d, e, m)
        for m in range(2, m_max + 1)
        for d in range(1, m)
        for e in range(1, m)
    ]


def _scan_one(n, triple, seed, trials, prime):
    d, e, m = triple
    first = taylor_dimension(
        n, d, e, m, seed=derive_seed(seed, n, d, e, m, 0), trials=trials, prime=prime
    )
    if not first.defective:
        return None
    # defects are double-checked with an independent random stream
    second = taylor_dimension(
        n, d, e, m, seed=derive_seed(seed, n, d, e, m, 1), trials=trials, prime=prime
    )
    if second.actual_dim <= first.actual_dim:
        return first
    return second if second.defective else None


def iter_scan_defective(
    n: int,
    m_max: int,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    prime: int = DEFAULT_PRIME,
    jobs: int = 1,
    resume_from: tuple[int, int, int] | None = None,
) -> Iterator[DimensionReport]:
    """Yield the defective triples in (m, d, e) order, one report each."""
    triples: Iterable = scan_triples(n, m_max)
    if resume_from is not None:
        rd, re_, rm = resume_from
        key = (rm, rd, re_)
        triples = [t for t in triples if (t[2], t[0], t[1]) >= key]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(lambda t: _scan_one(n, t, seed, trials, prime), triples)
            for rep in results:
                if rep is not None:
                    yield rep
    else:
        for t in triples:
            rep = _scan_one(n, t, seed, trials, prime)
            if rep is not None:
                yield rep


def scan_defective(
    n: int,
    m_max: int,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    prime: int = DEFAULT_PRIME,
    jobs: int = 1,
    resume_from: tuple[int, int, int] | None = None,
) -> list[DimensionReport]:
    return list(
        iter_scan_defective(n, m_max, seed, trials, prime, jobs, resume_from)
    )
