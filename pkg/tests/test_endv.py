import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tprop import endv
from tprop.endv import Column, Row
from tprop.tensor import ArityError, Permutation, TensorMap, act_out, compose, tensor_product

from oracles import apply, apply_on_legs, basis, table

seeds = st.integers(0, 2**32 - 1)

# Delta o star of the group bialgebra of Z/2 (outputs first): e,e -> ee; g,g -> ee; e,g and g,e -> gg
DELTA_STAR_B1 = [[[["1", "0"], ["0", "1"]], [["0", "0"], ["0", "0"]]],
                 [[["0", "0"], ["0", "0"]], [["0", "1"], ["1", "0"]]]]


def test_circ_i_scalars():
    a, b = TensorMap(1, 2, 1, [3]), TensorMap(1, 2, 1, [5])
    assert endv.circ_i(a, b, 2) == TensorMap(1, 3, 1, [15])


def test_circ_1_on_b1_matches_basis_evaluation(B1):
    psi = compose(B1.delta, B1.star)
    assert psi.to_nested() == DELTA_STAR_B1
    got = endv.circ_i(psi, B1.delta, 1)
    want = table(lambda ab: apply_on_legs(B1.delta, apply(B1.delta, apply(B1.star, {ab: 1})), 0), 2, 3, 2)
    assert got == want


def test_jcirc_2_on_b1_matches_basis_evaluation(B1):
    psi = compose(B1.delta, B1.star)
    got = endv.jcirc(B1.star, psi, 2)
    want = table(lambda abc: apply(psi, apply_on_legs(B1.star, {abc: 1}, 1)), 3, 2, 2)
    assert got == want


def test_circ_disjoint_commutes(rng):
    psi = TensorMap.random(1, 3, 2, rng)
    t1, t2 = TensorMap.random(1, 2, 2, rng), TensorMap.random(1, 2, 2, rng)
    # t1 on output 3, then t2 on output 1  ==  t2 on output 1, then t1 on output 3 + 1
    lhs = endv.circ_i(endv.circ_i(psi, t1, 3), t2, 1)
    rhs = endv.circ_i(endv.circ_i(psi, t2, 1), t1, 4)
    assert lhs == rhs


def test_jcirc_nested_associates(rng):
    psi = TensorMap.random(2, 1, 2, rng)
    t1, t2 = TensorMap.random(2, 1, 2, rng), TensorMap.random(2, 1, 2, rng)
    lhs = endv.jcirc(t2, endv.jcirc(t1, psi, 2), 3)
    rhs = endv.jcirc(endv.jcirc(t2, t1, 2), psi, 2)
    assert lhs == rhs


def test_circled_entries_on_b1(B1):
    r = endv.circled_i(Row.power(B1.delta, 2), Row.power(B1.delta, 2), 1)
    want = compose(tensor_product(B1.delta, TensorMap.identity(1, 2)), B1.delta)
    assert r.maps == (want, want)
    zero = Row.power(TensorMap.zeros(1, 2, 2), 2)
    assert all(x.is_zero() for x in endv.circled_i(Row.power(B1.delta, 2), zero, 2).maps)


def test_circled_is_entrywise_so_commutes_with_reordering(rng):
    c1 = Row(tuple(TensorMap.random(1, 2, 2, rng) for _ in range(3)))
    c2 = Row(tuple(TensorMap.random(1, 2, 2, rng) for _ in range(3)))
    order = (2, 0, 1)

    def shuffle(r):
        return Row(tuple(r.maps[k] for k in order))

    assert endv.circled_i(shuffle(c1), shuffle(c2), 2) == shuffle(endv.circled_i(c1, c2, 2))


def test_circledcirc_on_b1_is_delta_star(B1):
    got = endv.circledcirc(Column.power(B1.star, 2), Row.power(B1.delta, 2))
    assert got.to_nested() == DELTA_STAR_B1


def test_circledcirc_is_componentwise_product(B1, B2):
    # (Delta a) * (Delta b) computed leg by leg
    for bi in (B1, B2):
        got = endv.circledcirc(Column.power(bi.star, 2), Row.power(bi.delta, 2))

        def prod(ab, bi=bi):
            out = {}
            for (x1, x2), c in bi.delta((ab[0],)).items():
                for (y1, y2), e in bi.delta((ab[1],)).items():
                    for (z1,), f in bi.star((x1, y1)).items():
                        for (z2,), g in bi.star((x2, y2)).items():
                            out[(z1, z2)] = out.get((z1, z2), 0) + c * e * f * g
            return out

        assert got == table(prod, 2, 2, 2)


def test_circledcirc_zero_and_scalars(rng):
    zero_row = Row((TensorMap.random(1, 2, 2, rng), TensorMap.zeros(1, 2, 2)))
    assert endv.circledcirc(Column.power(TensorMap.random(2, 1, 2, rng), 2), zero_row).is_zero()
    col = Column((TensorMap(2, 1, 1, [2]), TensorMap(2, 1, 1, [3])))
    row = Row((TensorMap(1, 2, 1, [5]), TensorMap(1, 2, 1, [7])))
    assert endv.circledcirc(col, row) == TensorMap(2, 2, 1, [2 * 3 * 5 * 7])


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_circledcirc_matches_literal_definition(seed):
    rng = np.random.default_rng(seed)
    m, n = int(rng.integers(2, 4)), int(rng.integers(2, 4))
    col = Column(tuple(TensorMap.random(m, 1, 2, rng) for _ in range(n)))
    row = Row(tuple(TensorMap.random(1, n, 2, rng) for _ in range(m)))
    assert endv.circledcirc(col, row) == endv.circledcirc_literal(col, row)


def test_wedge_and_vee(rng):
    g = TensorMap.random(1, 2, 2, rng)
    assert endv.wedge(g, 3) == Row.power(g, 3)
    a, b = TensorMap.random(2, 1, 2, rng), TensorMap.random(2, 1, 2, rng)
    assert endv.vee(Column((a, b)), 1, 3).maps == (a, a, a, b)
    r1, r2 = TensorMap.random(1, 2, 2, rng), TensorMap.random(1, 2, 2, rng)
    assert endv.vee_row(Row((r1, r2)), 2, 2).maps == (r1, r2, r2)


def test_iterated_structure_maps(B1):
    assert endv.iterated_product(B1.star, 2) == B1.star
    assert endv.iterated_coproduct(B1.delta, 2) == B1.delta
    assert endv.iterated_product(B1.star, 3) == endv.jcirc(B1.star, B1.star, 1)


def test_shape_validation(rng):
    with pytest.raises((ArityError, ValueError)):
        Row((TensorMap.random(1, 2, 2, rng), TensorMap.random(1, 3, 2, rng)))
    with pytest.raises((ArityError, ValueError)):
        endv.circ_i(TensorMap.random(2, 1, 2, rng), TensorMap.random(2, 1, 2, rng), 1)


def test_equivariance_of_circ(rng):
    psi, theta = TensorMap.random(2, 2, 2, rng), TensorMap.random(1, 2, 2, rng)
    # permuting the untouched output before inserting on output 1 is the same as permuting after
    swap = Permutation((1, 0))
    moved = endv.circ_i(act_out(swap, psi), theta, 2)
    direct = act_out(Permutation((1, 2, 0)), endv.circ_i(psi, theta, 1))
    assert moved == direct
