import numpy as np
from hypothesis import given, settings, strategies as st

from tprop.bialgebras import (
    associator,
    coassociator,
    compatibility_defect,
    is_bialgebra,
    random_bialgebra,
    random_invertible,
    semigroup_tables,
    transport,
)

# Delta(ab) - Delta(a) * Delta(b) for the Z/2 product with g -> e(x)g + g(x)e
B2_DEFECT = [[[["0", "0"], ["0", "-1"]], [["0", "0"], ["0", "0"]]],
             [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "-2"]]]]


def test_b1_is_a_bialgebra(B1):
    assert is_bialgebra(B1.star, B1.delta)
    assert B1.basis == ("e", "g")


def test_b2_is_not_compatible(B2):
    assert associator(B2.star).is_zero()
    assert coassociator(B2.delta).is_zero()
    assert not is_bialgebra(B2.star, B2.delta)
    assert compatibility_defect(B2.star, B2.delta).to_nested() == B2_DEFECT


def test_b2_defect_on_g_g(B2):
    # Delta(e) - (e(x)g + g(x)e)^2 = -e(x)e - 2 g(x)g
    assert compatibility_defect(B2.star, B2.delta)((1, 1)) == {(0, 0): -1, (1, 1): -2}


def test_semigroup_table_counts():
    # associative binary operations on 1 and 2 elements
    assert len(semigroup_tables(1)) == 1
    assert len(semigroup_tables(2)) == 8


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 3))
def test_random_bialgebras_are_bialgebras(seed, d):
    rng = np.random.default_rng(seed)
    bi = random_bialgebra(d, rng, integral=bool(seed % 2))
    assert is_bialgebra(bi.star, bi.delta)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_transport_preserves_defects(seed):
    rng = np.random.default_rng(seed)
    from tprop.bialgebras import b2

    moved = transport(b2(), random_invertible(2, rng))
    assert coassociator(moved.delta).is_zero()
    assert not compatibility_defect(moved.star, moved.delta).is_zero()
