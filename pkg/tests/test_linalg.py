from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tprop import linalg

small = st.integers(-3, 3)
matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
)


def test_rank_examples():
    assert linalg.matrix_rank([[1, 2], [2, 4]]) == 1
    assert linalg.matrix_rank([[1, 0], [0, 1]]) == 2
    assert linalg.matrix_rank([[0, 0]]) == 0


def test_inverse_example():
    assert linalg.inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]
    with pytest.raises(ZeroDivisionError):
        linalg.inverse([[1, 2], [2, 4]])


def test_echelon_span():
    ech = linalg.Echelon()
    assert ech.add({"a": 1, "b": 1})
    assert not ech.add({"a": 2, "b": 2})
    assert ech.contains({"a": Fraction(1, 3), "b": Fraction(1, 3)})
    assert not ech.contains({"a": 1})
    assert linalg.in_span({"x": 0}, [])


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_matches_numpy(m):
    assert linalg.matrix_rank(m) == np.linalg.matrix_rank(np.array(m, dtype=float))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_nullspace_dimension_and_kernel(m):
    ncols = len(m[0])
    ns = linalg.nullspace(m, ncols)
    assert len(ns) == ncols - linalg.matrix_rank(m)
    for x in ns:
        assert all(sum(Fraction(a) * b for a, b in zip(row, x)) == 0 for row in m)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_inverse_is_two_sided(seed):
    from tprop.bialgebras import random_invertible

    g = random_invertible(3, np.random.default_rng(seed))
    gi = linalg.inverse(g)
    ident = [[sum(Fraction(g[i][k]) * gi[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert ident == [[int(i == j) for j in range(3)] for i in range(3)]
