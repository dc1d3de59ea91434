import pytest
from hypothesis import given, strategies as st

from heronroot.bracket import bracket
from heronroot.exactnum import DomainError


@pytest.mark.parametrize("N, k, m, d1, d2", [(100, 3, 4, 36, 25), (64, 3, 4, 0, 61), (720, 2, 26, 44, 9)])
def test_examples(N, k, m, d1, d2):
    b = bracket(N, k)
    assert (b.m, b.d1, b.d2) == (m, d1, d2)
    assert b.exact == (d1 == 0)


@given(st.integers(1, 10 ** 15))
def test_gap_is_difference_of_successive_cubes(N):
    b = bracket(N, 3)
    assert b.d1 + b.d2 == 3 * b.m ** 2 + 3 * b.m + 1
    assert b.m ** 3 <= N < (b.m + 1) ** 3


@given(st.integers(1, 10 ** 5), st.sampled_from([2, 3]))
def test_perfect_powers_have_zero_lower_gap(m, k):
    assert bracket(m ** k, k).d1 == 0


@pytest.mark.parametrize("m", range(1, 60))
def test_heron_family_gaps(m):
    b = bracket(m ** 3 + m * (2 * m + 1), 3)
    assert (b.d1, b.d2) == (m * (2 * m + 1), (m + 1) ** 2)


@pytest.mark.parametrize("N, k", [(0, 3), (-5, 2), (10, 4)])
def test_domain(N, k):
    with pytest.raises(DomainError):
        bracket(N, k)
