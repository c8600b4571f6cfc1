import pytest
from hypothesis import given, settings, strategies as st

from qhalg.schur import Partition, d_lambda, is_regular


@pytest.mark.parametrize("parts,p,d", [((7, 1), 3, 2), ((6, 0, 0), 2, 6), ((4, 4), 2, 0),
                                       ((9, 9), 5, 0)])
def test_d_examples(parts, p, d):
    assert d_lambda(Partition(parts), p) == d


@pytest.mark.parametrize("parts,p,reg", [((3, 0), 2, False), ((2, 0), 2, True), ((1, 0), 5, True)])
def test_regular_examples(parts, p, reg):
    assert is_regular(Partition(parts), p) is reg


def test_trailing_zeros_matter():
    assert d_lambda(Partition((6, 0)), 2) != d_lambda(Partition((6, 0, 0)), 2)


def test_parse_and_validation():
    assert Partition.parse("7, 1").parts == (7, 1)
    assert str(Partition.parse("3,2,0")) == "(3,2,0)"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    with pytest.raises(ValueError):
        Partition(())
    with pytest.raises(ValueError):
        d_lambda(Partition((3, 1)), 4)
    with pytest.raises(ValueError):
        is_regular(Partition((3, 1)), 1)


partitions = st.lists(st.integers(0, 30), min_size=1, max_size=6).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True))))
primes = st.sampled_from([2, 3, 5])


@settings(max_examples=100, deadline=None)
@given(partitions, primes, st.integers(0, 20))
def test_translation_invariance(lam, p, c):
    assert d_lambda(lam.shift(c), p) == d_lambda(lam, p)
    assert is_regular(lam.shift(c), p) == is_regular(lam, p)


@settings(max_examples=100, deadline=None)
@given(partitions, primes)
def test_small_gaps_give_zero(lam, p):
    x = lam.parts
    n = len(x)
    if all(x[i] - x[j] - i + j - 1 < p for i in range(n) for j in range(i + 1, n)):
        assert d_lambda(lam, p) == 0
    assert d_lambda(lam, p) >= 0
