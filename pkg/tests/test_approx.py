import numpy as np
import pytest

from taylorpade import linalg
from taylorpade.approx import on_variety_heuristic, pade_approximant
from taylorpade.pade import build_reduced
from taylorpade.series import (
    TruncatedPoly,
    multiply_truncated,
    random_unit_poly,
    taylor_quotient,
)


def poly(n, bound, p, terms):
    return TruncatedPoly.from_terms(n, bound, p, terms)


def direct_univariate_solver(T, d, e, p):
    """Independent oracle for d + e = m: solve the square shifted-hankel
    system for the denominator coefficients, then multiply back."""
    m = T.bound
    assert d + e == m
    c = [int(x) for x in T.coeffs]  # c[0..m]
    A = np.zeros((e, e), dtype=np.int64)
    for i in range(e):
        for j in range(e):
            k = m - 1 - i - j
            A[i, j] = c[k] if k >= 0 else 0
    rhs = np.array([(-c[m - i]) % p for i in range(e)], dtype=np.int64)
    if linalg.determinant(A, p) == 0:
        return None
    q = linalg.solve(A, rhs, p)
    den = TruncatedPoly(1, e, p, np.concatenate([[1], q]))
    num = multiply_truncated(den, T, d)
    return num, den


def test_recovers_linear_over_quadratic(p):
    num = poly(1, 1, p, {(0,): 1, (1,): 1})
    den = poly(1, 2, p, {(0,): 1, (1,): 1, (2,): 1})
    T = taylor_quotient(num, den, 5)
    res = pade_approximant(T, 1, 2)
    assert res.found and res.exact
    assert res.numerator == num and res.denominator == den
    assert res.fiber_dim == 0


def test_uniform_series_has_no_approximant(p, rng):
    # nonvanishing hankel determinant blocks type (2,2) for a random quintic
    for _ in range(5):
        T = TruncatedPoly(1, 5, p, np.concatenate([[1], rng.integers(0, p, size=5, dtype=np.int64)]))
        res = pade_approximant(T, 2, 2)
        assert not res.found
        assert res.numerator is None and res.denominator is None


def test_series_of_low_degree_is_its_own_approximant(p, rng):
    T = random_unit_poly(2, 2, rng, p)
    res = pade_approximant(T, 3, 2)
    assert res.found and res.exact
    assert res.numerator.resized(2) == T
    assert res.denominator == TruncatedPoly.one(2, 2, p)


def test_round_trip_unique_univariate(p, rng):
    # where the approximation is unique the exact pair comes back
    for _ in range(50):
        d = int(rng.integers(0, 4))
        e = int(rng.integers(1, 4))
        m = d + e + int(rng.integers(1, 4))
        num = random_unit_poly(1, d, rng, p)
        den = random_unit_poly(1, e, rng, p)
        T = taylor_quotient(num, den, m)
        res = pade_approximant(T, d, e)
        assert res.found and res.exact
        assert res.numerator == num.resized(d)
        assert res.denominator == den


def test_returned_pair_satisfies_congruence(p, rng):
    for _ in range(10):
        n = int(rng.integers(1, 4))
        num = random_unit_poly(n, 2, rng, p)
        den = random_unit_poly(n, 2, rng, p)
        m = 4
        T = taylor_quotient(num, den, m)
        res = pade_approximant(T, 2, 2)
        assert res.found and res.exact
        prod = multiply_truncated(res.denominator, T, m)
        assert prod.resized(2) == res.numerator.resized(2)
        offs = prod.degree_slice(3)
        assert not prod.coeffs[offs.start :].any()


def test_fiber_dimension_matches_reduced_kernel(p, rng):
    T = taylor_quotient(random_unit_poly(3, 2, rng, p), random_unit_poly(3, 2, rng, p), 3)
    res = pade_approximant(T, 2, 2)
    red = build_reduced(T, 2, 2)
    assert res.found
    assert res.fiber_dim == red.shape[1] - linalg.rank(red.matrix, p) == 1


def test_univariate_dense_type_matches_direct_solver(p, rng):
    for _ in range(20):
        d, e = 2, 3
        m = d + e
        T = TruncatedPoly(1, m, p, np.concatenate([[1], rng.integers(0, p, size=m, dtype=np.int64)]))
        oracle = direct_univariate_solver(T, d, e, p)
        if oracle is None:
            continue
        res = pade_approximant(T, d, e)
        assert res.found and res.exact
        assert res.numerator == oracle[0] and res.denominator == oracle[1]


def test_on_variety_heuristic(p, rng):
    num = random_unit_poly(1, 2, rng, p)
    den = random_unit_poly(1, 2, rng, p)
    assert on_variety_heuristic(taylor_quotient(num, den, 5), 2, 2)
    T = TruncatedPoly(1, 5, p, np.concatenate([[1], rng.integers(0, p, size=5, dtype=np.int64)]))
    assert not on_variety_heuristic(T, 2, 2)
    T3 = taylor_quotient(random_unit_poly(3, 2, rng, p), random_unit_poly(3, 2, rng, p), 3)
    assert on_variety_heuristic(T3, 2, 2)
    assert pade_approximant(T3, 2, 2).fiber_dim == 1


def test_requires_unit_constant(p):
    T = TruncatedPoly(1, 3, p)
    with pytest.raises(ValueError):
        pade_approximant(T, 1, 1)
