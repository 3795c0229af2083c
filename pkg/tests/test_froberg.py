import pytest

from taylorpade.dimension import scan_defective
from taylorpade.froberg import (
    codim_margin,
    compute_d0,
    exceptional_pairs,
    expected_codim,
    froberg_coefficients,
    froberg_report,
    hilbert_function_generic_forms,
    predicted_codim,
    truncate_positive,
)


def test_truncate_positive():
    assert truncate_positive([1, 2, 3]) == [1, 2, 3]
    assert truncate_positive([1, 0, 5]) == [1, 0, 0]
    assert truncate_positive([-1, 2]) == [0, 0]
    assert truncate_positive([]) == []


def test_truncate_positive_idempotent(rng):
    for _ in range(50):
        coeffs = [int(x) for x in rng.integers(-5, 9, size=12)]
        once = truncate_positive(coeffs)
        assert truncate_positive(once) == once


def test_froberg_coefficients_examples():
    # two generic forms of degrees 2,1 in three variables: series 1,2,2,2,...
    assert froberg_coefficients(3, (2, 1), 5) == [1, 2, 2, 2, 2, 2]
    assert predicted_codim(3, 2, 2) == 2
    # degrees 4,3,2: coefficient of t^5 is 3
    assert froberg_coefficients(3, (4, 3, 2), 5)[5] == 3
    assert predicted_codim(3, 4, 3) == 3
    assert predicted_codim(4, 2, 2) == 7
    # a degree-0 generator collapses everything (unit ideal)
    assert froberg_coefficients(2, (0, 1), 3) == [0, 0, 0, 0]


def test_margin_and_expected():
    assert codim_margin(4, 2, 2) == 6
    assert expected_codim(4, 2, 2) == 6
    assert codim_margin(3, 2, 2) == 1
    rep = froberg_report(4, 2, 2)
    assert (rep.alpha, rep.beta, rep.w, rep.defective_predicted) == (7, 6, 6, True)
    rep = froberg_report(3, 2, 2)
    assert (rep.alpha, rep.beta) == (2, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_codim_sweep_properties(n):
    # alpha >= beta everywhere; equality below the midpoint; zero propagates
    prev_alpha = {}
    for d in range(1, 61):
        for e in range(1, d + 1):
            a = predicted_codim(n, d, e)
            b = expected_codim(n, d, e)
            assert a >= b, (n, d, e, a, b)
            if e < d / 2 + 1:
                assert a == b, (n, d, e, a, b)
            if prev_alpha.get((d, e - 1)) == 0:
                assert a == 0, (n, d, e)
            prev_alpha[(d, e)] = a


def test_compute_d0_published_small():
    assert compute_d0(2) == 6
    assert compute_d0(3) == 17
    with pytest.raises(ValueError):
        compute_d0(1)


def test_compute_d0_grows():
    # regression anchors for the two larger cases; 144 is the threshold that
    # bounds the five-variable census (see the census test below)
    assert compute_d0(4) == 53
    assert compute_d0(5) == 144


def test_census_small_cases():
    census2 = exceptional_pairs(2)
    assert census2.pairs == ()
    assert census2.d0 == 6
    census4 = exceptional_pairs(4)
    assert len(census4.pairs) == 57
    assert census4.pairs[0] == (2, 2)
    assert census4.pairs[-1] == (42, 22)
    assert all(1 <= e <= d < census4.d0 for d, e in census4.pairs)


def test_census_matches_scan_for_two_variables():
    # no defective cases at order d+1 in two variables, so the census is empty
    assert exceptional_pairs(2).pairs == ()
    assert scan_defective(2, 6, seed=33) == []


def test_hilbert_oracle_examples():
    assert hilbert_function_generic_forms(3, (2, 1), 3, seed=5) == 2
    # n linear forms span everything in degree 1
    assert hilbert_function_generic_forms(4, (1, 1, 1, 1), 1, seed=5) == 0
    assert hilbert_function_generic_forms(3, (), 4, seed=5) == 15


@pytest.mark.parametrize("n", [2, 3])
def test_hilbert_oracle_matches_series(n, rng):
    # the series prediction is a theorem for two and three variables
    for _ in range(8):
        d = int(rng.integers(2, 7))
        e = int(rng.integers(1, d + 1))
        degrees = [d + 1 - i for i in range(1, e + 1)]
        for seed in (1, 2):
            got = hilbert_function_generic_forms(n, degrees, d + 1, seed=seed)
            assert got == predicted_codim(n, d, e), (n, d, e)


def test_hilbert_oracle_validates_input():
    with pytest.raises(ValueError):
        hilbert_function_generic_forms(2, (3,), 2)
    with pytest.raises(ValueError):
        hilbert_function_generic_forms(2, (0,), 2)
