"""Froberg-series machinery: predicted codimensions of truncation varieties
at order m = d+1, the census of pairs where prediction and naive count
disagree, and an independent brute-force Hilbert-function oracle.

All series arithmetic here runs over plain Python integers: the positive
truncation operator needs signs, so no modular reduction is allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from . import monomials as mono
from .linalg import DEFAULT_PRIME, rank
from .rng import make_rng
from .series import random_form


def truncate_positive(coeffs) -> list[int]:
    """Keep a_i while every a_j with j <= i is positive; zero afterwards."""
    out = []
    alive = True
    for a in coeffs:
        alive = alive and a > 0
        out.append(int(a) if alive else 0)
    return out


def froberg_coefficients(n: int, degrees, upto: int) -> list[int]:
    """Exact integer coefficients of prod(1 - t^g) / (1 - t)^n through t^upto.

    A generator degree g <= 0 denotes a unit in the ideal, so the whole
    series collapses to zero.
    """
    if upto < 0:
        raise ValueError("upto must be >= 0")
    if any(g <= 0 for g in degrees):
        return [0] * (upto + 1)
    coeffs = [comb(n - 1 + k, n - 1) for k in range(upto + 1)]
    for g in degrees:
        for j in range(upto, g - 1, -1):
            coeffs[j] -= coeffs[j - g]
    return coeffs


def codim_margin(n: int, d: int, e: int) -> int:
    """The closed-form count C(d+n, n-1) - C(e+n, n) + 1 (may be negative)."""
    return comb(d + n, n - 1) - comb(e + n, n) + 1


def expected_codim(n: int, d: int, e: int) -> int:
    return max(0, codim_margin(n, d, e))


def predicted_codim(n: int, d: int, e: int) -> int:
    """Coefficient of t^(d+1) in the positively-truncated Froberg series for
    e generic forms of degrees d, d-1, ..., d-e+1."""
    degrees = [d + 1 - i for i in range(1, e + 1)]
    coeffs = truncate_positive(froberg_coefficients(n, degrees, d + 1))
    return coeffs[d + 1]


@dataclass(frozen=True)
class FrobergReport:
    n: int
    d: int
    e: int
    alpha: int  # predicted codimension
    beta: int  # expected codimension max(0, w)
    w: int  # closed-form margin, signed
    defective_predicted: bool


def froberg_report(n: int, d: int, e: int) -> FrobergReport:
    a = predicted_codim(n, d, e)
    w = codim_margin(n, d, e)
    b = max(0, w)
    return FrobergReport(n, d, e, a, b, w, a != b)


@dataclass(frozen=True)
class ExceptionalCensus:
    n: int
    d0: int
    pairs: tuple


def _margin_at_midpoint(n: int, d: int) -> Fraction:
    """codim_margin(n, d, d/2) with the binomial evaluated at the real midpoint."""
    half = Fraction(d, 2)
    num = Fraction(1)
    for i in range(n):
        num *= half + n - i
    return comb(d + n, n - 1) - num / factorial(n) + 1


@lru_cache(maxsize=None)
def compute_d0(n: int) -> int:
    """Smallest threshold past which the midpoint margin stays nonpositive.

    Found by an upward scan whose window doubles until the top half carries
    no positive value; the midpoint is evaluated as a real (half-integer)
    point so the even- and odd-degree root curves are both covered.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    hi = 32
    while True:
        last_positive = 0
        for d in range(1, hi + 1):
            if _margin_at_midpoint(n, d) > 0:
                last_positive = d
        if 2 * last_positive + 4 <= hi:
            return last_positive + 1
        hi *= 2


def exceptional_pairs(n: int) -> ExceptionalCensus:
    """All (d, e) with 1 <= e <= d < d0 where predicted and expected
    codimension disagree, in lexicographic order."""
    d0 = compute_d0(n)
    pairs = []
    for d in range(1, d0):
        # multiply the generator factors in one at a time: e-th step adds
        # the factor of degree d+1-e
        coeffs = [comb(n - 1 + k, n - 1) for k in range(d + 2)]
        for e in range(1, d + 1):
            g = d + 1 - e
            for j in range(d + 1, g - 1, -1):
                coeffs[j] -= coeffs[j - g]
            alpha = coeffs[d + 1] if min(coeffs) > 0 else 0
            if alpha != expected_codim(n, d, e):
                pairs.append((d, e))
    return ExceptionalCensus(n, d0, tuple(pairs))


def hilbert_function_generic_forms(
    n: int, degrees, t: int, seed: int = 0, prime: int = DEFAULT_PRIME
) -> int:
    """Brute-force oracle: dimension of degree-t quotient by random forms.

    Draws one random form per requested degree, assembles the multiplication
    matrix from degree t-g multipliers into degree t, and returns
    dim C[x]_t - rank.  Independent of the series route above.
    """
    degrees = list(degrees)
    if any(g < 1 for g in degrees):
        raise ValueError("form degrees must be >= 1")
    if degrees and t < max(degrees):
        raise ValueError("t must be at least the largest form degree")
    dim_t = comb(n - 1 + t, n - 1)
    if not degrees:
        return dim_t
    rng = make_rng(seed)
    blocks = []
    for g in degrees:
        form = random_form(n, g, rng, prime)
        idx = mono.difference_table(n, (t, t, False), (t - g, t - g, False), (0, g, False))
        blocks.append(np.where(idx >= 0, form.coeffs[np.clip(idx, 0, None)], 0))
    return dim_t - rank(np.hstack(blocks), prime)
