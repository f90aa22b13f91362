import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tprop.tensor import (
    ArityError,
    Permutation,
    TensorMap,
    act,
    act_in,
    act_out,
    block_permutation,
    compose,
    exact,
    koszul_sign,
    permutation_map,
    tensor_product,
)

seeds = st.integers(0, 2**32 - 1)


def test_exact_keeps_integers():
    assert exact(Fraction(6, 3)) == 2 and type(exact(Fraction(6, 3))) is int
    assert exact(Fraction(1, 3)) == Fraction(1, 3)
    assert type(exact(True)) is int


def test_compose_identity_and_scalars(rng):
    b = TensorMap.random(1, 2, 2, rng)
    assert compose(TensorMap.identity(2, 2), b) == b
    a, c = TensorMap(1, 1, 1, [3]), TensorMap(1, 1, 1, [Fraction(-2, 5)])
    assert compose(a, c) == TensorMap(1, 1, 1, [Fraction(-6, 5)])


def test_compose_matches_brute_force(rng):
    a = TensorMap.random(2, 1, 2, rng)  # V^2 -> V
    b = TensorMap.random(2, 2, 2, rng)  # V^2 -> V^2
    got = compose(a, b)
    for out, ins in itertools.product(itertools.product(range(2), repeat=1), itertools.product(range(2), repeat=2)):
        want = sum(a.coeffs[out + mid] * b.coeffs[mid + ins] for mid in itertools.product(range(2), repeat=2))
        assert got.coeffs[out + ins] == want


def test_compose_arity_mismatch(rng):
    with pytest.raises(ArityError):
        compose(TensorMap.random(2, 1, 2, rng), TensorMap.random(1, 1, 2, rng))


def test_tensor_product_oracles(rng):
    assert tensor_product(TensorMap.zeros(1, 2, 2), TensorMap.random(2, 1, 2, rng)).is_zero()
    assert tensor_product(TensorMap.identity(1, 3), TensorMap.identity(1, 3)) == TensorMap.identity(2, 3)
    a, b = TensorMap.random(1, 2, 2, rng), TensorMap.random(2, 1, 2, rng)
    ab = tensor_product(a, b)
    for x in itertools.product(range(2), repeat=3):
        want = {}
        for oa, ca in a(x[:1]).items():
            for ob, cb in b(x[1:]).items():
                want[oa + ob] = want.get(oa + ob, 0) + ca * cb
        assert ab(x) == {k: v for k, v in want.items() if v}


def test_act_out_swaps_output_legs(B1, rng):
    swap = Permutation((1, 0))
    for t in (B1.delta, TensorMap.random(1, 2, 2, rng)):
        moved = act_out(swap, t)
        for i, j, k in itertools.product(range(2), repeat=3):
            assert moved.coeffs[j, i, k] == t.coeffs[i, j, k]
    assert act_out(swap, B1.delta) == B1.delta  # grouplike coproduct is cocommutative


def test_act_in_is_precomposition_with_permutation(rng):
    t = TensorMap.random(3, 1, 2, rng)
    tau = Permutation((2, 0, 1))
    assert act_in(tau, t) == compose(t, permutation_map(tau.inverse(), 2))


def test_identity_permutation_acts_trivially(rng):
    t = TensorMap.random(2, 2, 2, rng)
    assert act(Permutation.identity(2), Permutation.identity(2), t) == t


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_actions_commute(seed):
    rng = np.random.default_rng(seed)
    t = TensorMap.random(3, 2, 2, rng)
    tau, sigma = Permutation.random(3, rng), Permutation.random(2, rng)
    assert act_in(tau, act_out(sigma, t)) == act_out(sigma, act_in(tau, t))


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_action_is_a_group_action(seed):
    rng = np.random.default_rng(seed)
    t = TensorMap.random(1, 3, 2, rng)
    s1, s2 = Permutation.random(3, rng), Permutation.random(3, rng)
    assert act_out(s1, act_out(s2, t)) == act_out(s1 * s2, t)


def test_koszul_sign_examples():
    assert koszul_sign(Permutation.identity(3), [1, 1, 1]) == 1
    assert koszul_sign(Permutation((1, 0)), [1, 1]) == -1
    assert koszul_sign(Permutation((1, 0)), [1, 2]) == 1


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_koszul_sign_is_multiplicative(seed):
    rng = np.random.default_rng(seed)
    k = 5
    degs = rng.integers(0, 3, size=k).tolist()
    p, q = Permutation.random(k, rng), Permutation.random(k, rng)
    moved = [degs[q.inverse()(t)] for t in range(k)]
    assert koszul_sign(p * q, degs) == koszul_sign(q, degs) * koszul_sign(p, moved)


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((0, 0))


def test_block_permutation_identity_blocks():
    p = block_permutation(Permutation((1, 0)), [2, 1])
    assert p == Permutation((1, 2, 0))


def test_tensormap_size_checked():
    with pytest.raises(ArityError):
        TensorMap(1, 1, 2, [1, 2, 3])


def test_linear_structure(rng):
    a, b = TensorMap.random(2, 1, 2, rng), TensorMap.random(2, 1, 2, rng)
    assert (a + b) - b == a
    assert (a - a).is_zero()
    assert Fraction(1, 2) * (2 * a) == a
    assert hash(a.scale(1)) == hash(a)
