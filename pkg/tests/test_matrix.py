from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from tracegate.arith import matrix as mat
from tracegate.errors import SingularMatrix


def square(n, lo=-9, hi=9):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)


def is_hnf(h):
    col = -1
    for row in h:
        pivot = next(j for j, v in enumerate(row) if v)
        assert pivot > col and row[pivot] > 0
        for above in h[: h.index(row)]:
            assert 0 <= above[pivot] < row[pivot]
        col = pivot
    return True


def test_hnf_example():
    assert mat.hnf([[4, 0], [2, 2]]) == [[2, 2], [0, 4]]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), square(n))))
def test_hnf_same_lattice(arg):
    n, m = arg
    h = mat.hnf(m)
    assert is_hnf(h)
    assert len(h) == sympy.Matrix(m).rank()
    if len(h) == n:
        assert mat.det(h) == abs(mat.det(m))
        # rows of m are integral combinations of rows of h and conversely
        hinv = mat.inverse(h)
        assert all(c.denominator == 1 for row in m for c in mat.vecmat(row, hinv))


def test_hnf_lower_puts_one_first():
    m = [[4, 0, 0], [0, 4, 0], [1, 1, 2]]
    low = mat.hnf_lower(m)
    assert all(low[i][j] == 0 for i in range(3) for j in range(i + 1, 3))


@given(square(4))
def test_det_matches_sympy(m):
    assert mat.det(m) == sympy.Matrix(m).det()


@given(square(3))
def test_inverse(m):
    if mat.det(m) == 0:
        with pytest.raises(SingularMatrix):
            mat.inverse(m)
        return
    inv = mat.inverse(m)
    assert mat.matmul(m, inv) == mat.identity(3)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=5))
def test_kernels(m):
    for v in mat.right_kernel(m):
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    assert len(mat.right_kernel(m)) == 4 - mat.rank(m)
    for v in mat.left_kernel(m):
        assert mat.vecmat(v, m) == [0] * 4


@given(st.lists(st.lists(st.integers(0, 6), min_size=3, max_size=3), min_size=1, max_size=4))
def test_kernel_mod_p(m):
    p = 7
    for v in mat.left_kernel_mod_p(m, p):
        assert all(x % p == 0 for x in mat.vecmat(v, m))
    assert len(mat.left_kernel_mod_p(m, p)) == len(m) - mat.rank_mod_p(m, p)


def test_rational_entries():
    m = [[Fraction(1, 2), 1], [1, 2]]
    assert mat.det(m) == 0
    assert mat.rank(m) == 1
