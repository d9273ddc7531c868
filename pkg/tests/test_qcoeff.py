"""Exact arithmetic tests for quantum integers, factorials and binomials.

The independent oracle computes centered Gaussian binomials by subset
statistics (each k-subset S of {1..m} contributes q^(2*sum(s_i - i) -
k(m-k))); expected values below were frozen after checking against it.
"""

import math
from itertools import combinations

import pytest

from catsl2.qcoeff import (BigradedLaurent, ExactDivisionError, poincare_proj,
                           qbinom, qfact, qint)


def oracle_qbinom(m, k):
    terms = {}
    if k < 0 or m < 0 or k > m:
        return terms
    for s in combinations(range(1, m + 1), k):
        w = 2 * sum(v - i for i, v in enumerate(s, start=1)) - k * (m - k)
        terms[w] = terms.get(w, 0) + 1
    return terms


def qpoly(coeffs):
    return BigradedLaurent({(k, -k): c for k, c in coeffs.items()})


def test_qint_examples():
    assert qint(2) == qpoly({1: 1, -1: 1})
    assert qint(0).is_zero()
    # negation of the direct expansion of [3]
    direct3 = qpoly({2: 1, 0: 1, -2: 1})
    assert qint(3) == direct3
    assert qint(-3) == -direct3


def test_qbinom_examples():
    assert qbinom(2, 1) == qpoly({1: 1, -1: 1})
    for n in range(0, 9):
        assert qbinom(n, 0).is_one()
    # frozen from the subset oracle
    assert qbinom(4, 2) == qpoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
    assert oracle_qbinom(4, 2) == {4: 1, 2: 1, 0: 2, -2: 1, -4: 1}


def test_qbinom_out_of_range_is_zero():
    assert qbinom(3, -1).is_zero()
    assert qbinom(3, 4).is_zero()
    assert qbinom(-1, 0).is_zero()


@pytest.mark.parametrize("m", range(0, 11))
def test_qbinom_matches_subset_oracle(m):
    for k in range(0, m + 1):
        assert qbinom(m, k).q_coefficients() == oracle_qbinom(m, k)


def test_poincare_proj():
    assert poincare_proj(-1).is_zero()
    assert poincare_proj(0).is_one()
    assert poincare_proj(2) == qpoly({2: 1, 0: 1, -2: 1})


def test_bar_symmetry():
    for n in range(-8, 9):
        assert qint(n) == qint(n).bar()
    for m in range(0, 13):
        for k in range(0, m + 1):
            assert qbinom(m, k) == qbinom(m, k).bar()


def test_symmetry():
    for m in range(0, 13):
        for k in range(0, m + 1):
            assert qbinom(m, k) == qbinom(m, m - k)


def test_q_pascal_pinned_variant():
    # [m k] = q^k [m-1 k] + q^(k-m) [m-1 k-1]
    for m in range(2, 13):
        for k in range(1, m):
            rhs = BigradedLaurent.q_power(k) * qbinom(m - 1, k) \
                + BigradedLaurent.q_power(k - m) * qbinom(m - 1, k - 1)
            assert qbinom(m, k) == rhs


def test_specialization_at_one():
    for m in range(0, 13):
        for k in range(0, m + 1):
            assert qbinom(m, k).specialize_q1() == math.comb(m, k)


def test_qfact_division_is_exact_where_defined():
    for m in range(0, 10):
        for k in range(0, m + 1):
            quotient = qfact(m).exact_div(qfact(k) * qfact(m - k))
            assert quotient == qbinom(m, k)


def test_inexact_division_raises():
    with pytest.raises(ExactDivisionError):
        qint(3).exact_div(qint(2))
    with pytest.raises(ExactDivisionError):
        qint(2).exact_div(BigradedLaurent.zero())
    with pytest.raises(ExactDivisionError):
        BigradedLaurent.monomial(1, 0).exact_div(qint(2))  # off the q-line


def test_no_zero_coefficients_stored():
    diff = qint(5) - qint(5)
    assert diff.is_zero() and not list(diff.items())
    partial = qint(3) - qint(1)
    assert partial.q_coefficients() == {2: 1, -2: 1}


def test_printing_is_deterministic():
    assert str(qbinom(4, 2)) == "q^4 + q^2 + 2 + q^-2 + q^-4"
    assert str(qint(-3)) == "-q^2 - 1 - q^-2"
    assert str(BigradedLaurent.zero()) == "0"
    assert str(BigradedLaurent.monomial(2, -1, 3)) == "3*s^2*t^-1"
