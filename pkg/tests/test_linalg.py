from gmpy2 import mpq
from hypothesis import given, strategies as st

from awdaha.coeff import to_coef
from awdaha.linalg import bareiss_rank, nullspace, transpose

entries = st.fractions(min_value=-4, max_value=4, max_denominator=3).map(to_coef)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))


def test_small_ranks():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[mpq(1, 2), 1], [1, mpq(1, 3)]]) == 2
    assert bareiss_rank([[1, 0, 0], [0, 0, 0], [0, 0, 1]]) == 2


def test_nullspace_example():
    assert nullspace([[1, 2], [2, 4]]) == [[-2, 1]]
    assert nullspace([[1, 0], [0, 1]]) == []


@given(matrices())
def test_rank_nullity(M):
    ncols = len(M[0])
    kern = nullspace(M)
    assert bareiss_rank(M) + len(kern) == ncols
    for v in kern:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in M)


@given(matrices())
def test_rank_of_transpose(M):
    assert bareiss_rank(M) == bareiss_rank(transpose(M))
