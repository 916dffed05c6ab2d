"""Exact linear algebra: ranks, kernels, and elementary divisors."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from weylcoh import snf


def test_divisors_of_diagonal_matrix():
    # SNF of diag(2, 3) is diag(1, 6)
    assert snf.snf_divisors(((2, 0), (0, 3))) == [1, 6]
    assert snf.snf_divisors(((1, 0), (0, 1))) == [1, 1]


def test_divisors_of_singular_matrix():
    assert snf.snf_divisors(((2, 4), (4, 8))) == [2]
    assert snf.snf_divisors(((0, 0), (0, 0))) == []


def test_qq_rank_basics():
    assert snf.qq_rank(((1, 2), (2, 4))) == 1
    assert snf.qq_rank(((1, 0, 0), (0, 0, 1))) == 2
    assert snf.qq_rank(()) == 0


small_matrices = st.lists(
    st.lists(st.integers(-5, 5), min_size=3, max_size=3),
    min_size=3,
    max_size=3,
).map(lambda rows: tuple(tuple(r) for r in rows))


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_divisor_chain_and_rank(mat):
    divs = snf.snf_divisors(mat)
    assert len(divs) == snf.qq_rank(mat)
    assert all(d > 0 for d in divs)
    for a, b in zip(divs, divs[1:]):
        assert b % a == 0


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_divisor_product_is_determinant(mat):
    det = round(_det3(mat))
    divs = snf.snf_divisors(mat)
    if det:
        assert math.prod(divs) == abs(det)
    else:
        assert len(divs) < 3


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


@given(small_matrices)
@settings(max_examples=100, deadline=None)
def test_kernel_basis_annihilates(mat):
    basis = snf.kernel_basis(mat)
    assert len(basis) == 3 - snf.qq_rank(mat)
    for v in basis:
        for row in mat:
            assert sum(x * y for x, y in zip(row, v)) == 0


def test_column_span_rank():
    assert snf.column_span_rank([]) == 0
    assert snf.column_span_rank([(1, 0), (0, 1), (1, 1)]) == 2


def test_mat_mul_shape_mismatch():
    try:
        snf.mat_mul(((1, 2),), ((1, 2),))
    except ValueError:
        return
    raise AssertionError("expected a shape error")
