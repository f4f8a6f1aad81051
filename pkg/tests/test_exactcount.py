from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from calabiwilf.exactcount import binomial, qbinomial, qfactorial, subset_coin, subspace_coin
from oracles import count_subspaces_by_spans, qbinomial_by_recurrence, qfactorial_by_fractions


def test_binomial_examples():
    assert binomial(7, 0) == 1
    assert binomial(5, 2) == len(list(combinations(range(5), 2))) == 10
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_qfactorial_examples():
    assert qfactorial(0, 5) == 1
    assert qfactorial(2, 2) == qfactorial_by_fractions(2, 2) == 3
    assert qfactorial(3, 3) == qfactorial_by_fractions(3, 3) == 52  # 1 * 4 * 13


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_qfactorial_against_fraction_product(q):
    for n in range(12):
        assert qfactorial(n, q) == qfactorial_by_fractions(n, q)


def test_qbinomial_printed_count():
    assert qbinomial(10, 5, 7) == 1602592475815614015216


def test_qbinomial_small():
    assert qbinomial(4, 2, 2) == 35
    assert qbinomial(6, 6, 3) == 1
    assert qbinomial(3, 4, 2) == 0
    assert qbinomial(3, -1, 2) == 0


@pytest.mark.parametrize("q,n,k", [(2, 3, 1), (2, 4, 2), (3, 3, 2), (2, 3, 2), (3, 2, 1)])
def test_qbinomial_counts_distinct_row_spaces(q, n, k):
    assert qbinomial(n, k, q) == count_subspaces_by_spans(n, k, q)


def test_qbinomial_equals_factorial_ratio():
    for q in (2, 3, 5):
        for n in range(10):
            for k in range(n + 1):
                assert qbinomial(n, k, q) * qfactorial(k, q) * qfactorial(n - k, q) == qfactorial(n, q)


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_recurrences_on_grid(q):
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert qbinomial(n, k, q) == qbinomial(n - 1, k - 1, q) + q**k * qbinomial(n - 1, k, q)
            assert qbinomial(n, k, q) == qbinomial_by_recurrence(n, k, q)
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(0, 60), st.integers(0, 60), st.sampled_from([2, 3, 5, 7, 11]))
def test_symmetry(n, k, q):
    assert qbinomial(n, k, q) == qbinomial(n, n - k, q) if k <= n else qbinomial(n, k, q) == 0


def test_coins():
    c = subspace_coin(2, 1, 2)
    assert (c.numerator, c.denominator) == (1, 3)
    assert c.probability == Fraction(qbinomial(1, 0, 2), qbinomial(2, 1, 2))
    c = subspace_coin(10, 5, 7)
    assert (c.numerator, c.denominator) == (7**5 - 1, 7**10 - 1)
    c = subspace_coin(6, 6, 3)
    assert c.numerator == c.denominator
    assert subset_coin(10, 5).probability == Fraction(1, 2)
    assert (subset_coin(4, 1).numerator, subset_coin(4, 1).denominator) == (1, 4)
    assert subset_coin(4, 1).probability == Fraction(binomial(3, 0), binomial(4, 1))
    assert subset_coin(9, 9).probability == 1
    with pytest.raises(ValueError):
        subspace_coin(3, 0, 2)


@given(st.integers(1, 40), st.data(), st.sampled_from([2, 3, 5, 7]))
def test_coin_is_first_kind_fraction(n, data, q):
    k = data.draw(st.integers(1, n))
    assert subspace_coin(n, k, q).probability == Fraction(qbinomial(n - 1, k - 1, q), qbinomial(n, k, q))
