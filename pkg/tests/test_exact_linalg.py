import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from castelpoly.exact_linalg import IntMatrix, det, rank, snf, solve


def mat(rows):
    return IntMatrix.from_rows(rows)


small_matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-5, 5), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def test_snf_identity():
    res = snf(mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert res.d == (1, 1, 1)


def test_snf_diag_2_3():
    # 2x + 3y = 1 is solvable, so the first factor is 1; the determinant
    # magnitude 6 forces the second.
    res = snf(mat([[2, 0], [0, 3]]))
    assert res.d == (1, 6)


def test_snf_nonspanning_difference_matrix():
    # Difference vectors of the 4-dimensional non-spanning polytope: the
    # last coordinate of every integer combination is even.
    rows = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [1, 1, 0, 2],
        [1, 0, -1, 0],
    ]
    res = snf(mat(rows))
    assert res.d == (1, 1, 1, 2)


def test_snf_zero_matrix():
    res = snf(mat([[0, 0], [0, 0]]))
    assert res.d == (0, 0)
    assert rank(mat([[0, 0], [0, 0]])) == 0


def test_rank_examples():
    assert rank(mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert rank(mat([[1, 0, 0], [0, 1, 0], [1, 1, 0]])) == 2


def test_solve_identity():
    assert solve(mat([[1, 0], [0, 1]]), (1, 2)) == (1, 2)


def test_solve_diag_halves():
    assert solve(mat([[2, 0], [0, 2]]), (1, 1)) == (Fraction(1, 2), Fraction(1, 2))


def test_solve_underdetermined_consistent():
    a = mat([[1, 1]])
    x = solve(a, (3,))
    assert x is not None
    assert sum(x) == 3


def test_solve_inconsistent():
    a = mat([[1, 1], [1, 1]])
    assert solve(a, (0, 1)) is None


def test_solve_rational_rhs():
    a = mat([[2, 0], [0, 3]])
    x = solve(a, (Fraction(1, 3), Fraction(1, 2)))
    assert x == (Fraction(1, 6), Fraction(1, 6))


def test_det_known():
    assert det(mat([[1, 2], [3, 4]])) == -2
    assert det(mat([[2, 0], [0, 3]])) == 6
    assert det([[0, 1], [1, 0]]) == -1


@settings(max_examples=200)
@given(small_matrices)
def test_snf_reconstructs_and_counts_rank(rows):
    m = mat(rows)
    res = snf(m)  # snf verifies U*M*V = diag(d) and unimodularity itself
    nonzero = [x for x in res.d if x != 0]
    assert len(nonzero) == rank(m)
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0


@settings(max_examples=100)
@given(
    st.integers(2, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-5, 5), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
)
def test_snf_preserves_determinant_magnitude(rows):
    m = mat(rows)
    d = det(m)
    prod = math.prod(x for x in snf(m).d if x != 0)
    if d != 0:
        assert prod == abs(d)


@settings(max_examples=150)
@given(small_matrices, st.data())
def test_solve_substitutes_back(rows, data):
    m = mat(rows)
    b = data.draw(
        st.lists(st.integers(-9, 9), min_size=m.rows, max_size=m.rows)
    )
    x = solve(m, b)
    if x is not None:
        for row, rhs in zip(m.entries, b):
            assert sum(c * xi for c, xi in zip(row, x)) == rhs


@settings(max_examples=100)
@given(small_matrices)
def test_rank_matches_fraction_gauss(rows):
    # Independent oracle: plain Gaussian elimination over Fraction.
    a = [[Fraction(x) for x in row] for row in rows]
    nr, nc = len(a), len(a[0])
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nr):
            f = a[i][c] / a[r][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nr:
            break
    assert rank(mat(rows)) == r


def test_from_rows_rejects_empty_and_ragged():
    with pytest.raises(ValueError):
        IntMatrix.from_rows([])
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
