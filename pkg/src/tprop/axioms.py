"""Randomized exact verification of the 2/3-PROP identities in End(V).

The nested and disjoint laws for the four partial compositions, the mixed
associativity of the two sides and the equivariance of every composition hold
for arbitrary tensors.  The output and input compatibilities (how ``(o)``
interacts with ``o_i`` and ``_jo``) only hold on families that satisfy the bialgebra
compatibility (End(V) itself is a pre-2/3-PROP), so they are sampled on images
of random bialgebras; :func:`compatibility_counterexample` shows a generic
failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import bi, endv
from .bialgebras import random_bialgebra
from .endv import Column, Row
from .report import CheckReport
from .tensor import Permutation, TensorMap, act_in, act_out

AXIOMS = (
    "circ nested",
    "circ disjoint",
    "jcirc nested",
    "jcirc disjoint",
    "circled nested",
    "circled disjoint",
    "jcircled nested",
    "jcircled disjoint",
    "output compatibility",
    "input compatibility",
    "equivariance",
    "mixed associativity",
)

MIN_ARITY_BOUND = 5


@dataclass
class Compositions:
    """The End(V) compositions under test; swapped out by negative controls."""

    circ: Callable = endv.circ_i
    jcirc: Callable = endv.jcirc

    def circled(self, c1: Row, c2: Row, i: int) -> Row:
        return Row(tuple(self.circ(a, b, i) for a, b in zip(c1.maps, c2.maps)))

    def jcircled(self, c1: Column, c2: Column, j: int) -> Column:
        return Column(tuple(self.jcirc(a, b, j) for a, b in zip(c1.maps, c2.maps)))


def _ri(rng, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def _arities(rng, bound: int, base_min: int, other_min: int, rows: bool):
    """Sample ``(other, k, k1, k2)``: host arity ``k``, inserted arities ``k1, k2 >= 2``.

    ``other`` is the untouched side (copies for rows/columns).  Plain instances
    keep ``other + k + k1 + k2 - 2 <= bound``; row/column instances bound the
    entry arity ``1 + k + k1 + k2 - 2`` and the number of copies separately.
    """
    while True:
        other = _ri(rng, other_min, bound)
        k = _ri(rng, base_min, bound)
        k1, k2 = _ri(rng, 2, bound), _ri(rng, 2, bound)
        total = k + k1 + k2 - 2
        if rows and 1 + total <= bound:
            return other, k, k1, k2
        if not rows and other + k >= 3 and other + total <= bound:
            return other, k, k1, k2


def _sample_nested_out(ops, rng, d, bound, rows: bool, disjoint: bool):
    """Nested/disjoint instances for ``o_i`` or, with ``rows``, ``(o)_i``."""
    while True:
        m, n, n1, n2 = _arities(rng, bound, 2 if rows else 1, 2 if rows else 1, rows)
        if not (disjoint and n < 2):
            break
    if rows:
        psi = Row(tuple(TensorMap.random(1, n, d, rng) for _ in range(m)))
        t1 = Row(tuple(TensorMap.random(1, n1, d, rng) for _ in range(m)))
        t2 = Row(tuple(TensorMap.random(1, n2, d, rng) for _ in range(m)))
        comp = ops.circled
    else:
        psi = TensorMap.random(m, n, d, rng)
        t1, t2 = TensorMap.random(1, n1, d, rng), TensorMap.random(1, n2, d, rng)
        comp = ops.circ
    i = _ri(rng, 1, n)
    if not disjoint:
        j = _ri(rng, i, i + n1 - 1)
        lhs = comp(comp(psi, t1, i), t2, j)
        rhs = comp(psi, comp(t1, t2, j - i + 1), i)
    else:
        choices = [j for j in range(1, n + n1) if j < i or j > i + n1 - 1]
        j = choices[_ri(rng, 0, len(choices) - 1)]
        lhs = comp(comp(psi, t1, i), t2, j)
        if j < i:
            rhs = comp(comp(psi, t2, j), t1, i + n2 - 1)
        else:
            rhs = comp(comp(psi, t2, j - n1 + 1), t1, i)
    return lhs, rhs, f"sizes n={n}, n1={n1}, n2={n2}, i={i}, j={j}"


def _sample_nested_in(ops, rng, d, bound, cols: bool, disjoint: bool):
    """Nested/disjoint instances for ``_jo`` or, with ``cols``, ``_j(o)``."""
    while True:
        n, m, m1, m2 = _arities(rng, bound, 2 if cols else 1, 2 if cols else 1, cols)
        if not (disjoint and m < 2):
            break
    if cols:
        psi = Column(tuple(TensorMap.random(m, 1, d, rng) for _ in range(n)))
        t1 = Column(tuple(TensorMap.random(m1, 1, d, rng) for _ in range(n)))
        t2 = Column(tuple(TensorMap.random(m2, 1, d, rng) for _ in range(n)))
        comp = ops.jcircled
    else:
        psi = TensorMap.random(m, n, d, rng)
        t1, t2 = TensorMap.random(m1, 1, d, rng), TensorMap.random(m2, 1, d, rng)
        comp = ops.jcirc
    i = _ri(rng, 1, m)
    if not disjoint:
        j = _ri(rng, i, i + m1 - 1)
        lhs = comp(t2, comp(t1, psi, i), j)
        rhs = comp(comp(t2, t1, j - i + 1), psi, i)
    else:
        choices = [j for j in range(1, m + m1) if j < i or j > i + m1 - 1]
        j = choices[_ri(rng, 0, len(choices) - 1)]
        lhs = comp(t2, comp(t1, psi, i), j)
        if j < i:
            rhs = comp(t1, comp(t2, psi, j), i + m2 - 1)
        else:
            rhs = comp(t1, comp(t2, psi, j - m1 + 1), i)
    return lhs, rhs, f"sizes m={m}, m1={m1}, m2={m2}, i={i}, j={j}"


def _sample_a(ops, rng, d, bound):
    while True:
        m, n, n1 = _ri(rng, 2, bound), _ri(rng, 2, bound), _ri(rng, 2, bound)
        if m + n + n1 - 1 <= bound:
            break
    b = random_bialgebra(d, rng, integral=True)
    prod = endv.iterated_product(b.star, m)
    alpha = Column(tuple(act_in(Permutation.random(m, rng), prod) for _ in range(n)))
    beta = Row(tuple(TensorMap.random(1, n, d, rng) for _ in range(m)))
    gamma = act_out(Permutation.random(n1, rng), endv.iterated_coproduct(b.delta, n1))
    i = _ri(rng, 1, n)
    lhs = ops.circ(endv.circledcirc(alpha, beta), gamma, i)
    rhs = endv.circledcirc(endv.vee(alpha, i, n1), ops.circled(beta, endv.wedge(gamma, m), i))
    return lhs, rhs, f"m={m}, n={n}, n1={n1}, i={i}"


def _sample_b(ops, rng, d, bound):
    while True:
        m, n, m1 = _ri(rng, 2, bound), _ri(rng, 2, bound), _ri(rng, 2, bound)
        if m + n + m1 - 1 <= bound:
            break
    b = random_bialgebra(d, rng, integral=True)
    cop = endv.iterated_coproduct(b.delta, n)
    alpha = Column(tuple(TensorMap.random(m, 1, d, rng) for _ in range(n)))
    beta = Row(tuple(act_out(Permutation.random(n, rng), cop) for _ in range(m)))
    gamma = act_in(Permutation.random(m1, rng), endv.iterated_product(b.star, m1))
    j = _ri(rng, 1, m)
    lhs = ops.jcirc(gamma, endv.circledcirc(alpha, beta), j)
    rhs = endv.circledcirc(ops.jcircled(Column.power(gamma, n), alpha, j), endv.vee_row(beta, j, m1))
    return lhs, rhs, f"m={m}, n={n}, m1={m1}, j={j}"


def _sample_mixed(ops, rng, d, bound):
    while True:
        m, n = _ri(rng, 1, bound), _ri(rng, 1, bound)
        m1, n1 = _ri(rng, 2, bound), _ri(rng, 2, bound)
        if m + n >= 3 and m + m1 + n + n1 - 2 <= bound:
            break
    psi = TensorMap.random(m, n, d, rng)
    theta = TensorMap.random(m1, 1, d, rng)
    gamma = TensorMap.random(1, n1, d, rng)
    i, j = _ri(rng, 1, n), _ri(rng, 1, m)
    lhs = ops.jcirc(theta, ops.circ(psi, gamma, i), j)
    rhs = ops.circ(ops.jcirc(theta, psi, j), gamma, i)
    return lhs, rhs, f"m={m}, n={n}, m1={m1}, n1={n1}, i={i}, j={j}"


def _sample_equivariance(ops, rng, d, bound):
    op = bi.OPS[_ri(rng, 0, len(bi.OPS) - 1)]
    a, b, idx = bi.random_composable(op, max(bound, 5) if op in ("circled", "jcircled") else bound, rng)
    psi, theta = bi.random_operands(op, a, b, d, rng)
    result, base = bi.transport(op, a, b, idx)
    lhs = bi.end_compose(op, bi.act_element(a, psi), bi.act_element(b, theta), idx)
    rhs = bi.act_element(result, bi.end_compose(op, psi, theta, base))
    return lhs, rhs, f"op={op}, a={a}, b={b}, index={idx}"


def _samplers():
    return {
        "circ nested": lambda o, r, d, b: _sample_nested_out(o, r, d, b, False, False),
        "circ disjoint": lambda o, r, d, b: _sample_nested_out(o, r, d, b, False, True),
        "jcirc nested": lambda o, r, d, b: _sample_nested_in(o, r, d, b, False, False),
        "jcirc disjoint": lambda o, r, d, b: _sample_nested_in(o, r, d, b, False, True),
        "circled nested": lambda o, r, d, b: _sample_nested_out(o, r, d, b, True, False),
        "circled disjoint": lambda o, r, d, b: _sample_nested_out(o, r, d, b, True, True),
        "jcircled nested": lambda o, r, d, b: _sample_nested_in(o, r, d, b, True, False),
        "jcircled disjoint": lambda o, r, d, b: _sample_nested_in(o, r, d, b, True, True),
        "output compatibility": _sample_a,
        "input compatibility": _sample_b,
        "equivariance": _sample_equivariance,
        "mixed associativity": _sample_mixed,
    }


def check_axioms(
    d: int = 2,
    arity_bound: int = 6,
    trials: int = 100,
    seed: int = 0,
    ops: Compositions | None = None,
    axioms=AXIOMS,
) -> CheckReport:
    """Sample ``trials`` instances of every axiom and compare both sides exactly.

    Each axiom draws from its own random stream, derived from ``(seed, axiom)``.
    The smallest instance of the nested, mixed and compatibility laws has total
    arity 5, so ``arity_bound`` must be at least that.
    """
    if arity_bound < MIN_ARITY_BOUND:
        raise ValueError(f"arity bound {arity_bound} is below {MIN_ARITY_BOUND}, the smallest instance size")
    ops = ops or Compositions()
    samplers = _samplers()
    report = CheckReport()
    for k, name in enumerate(AXIOMS):
        if name not in axioms:
            continue
        rng = np.random.default_rng([seed, k])
        res = report[name]
        for t in range(trials):
            lhs, rhs, info = samplers[name](ops, rng, d, arity_bound)
            res.record(lhs == rhs, f"trial {t}: {info}")
    return report


def compatibility_counterexample(d: int = 2, seed: int = 0):
    """Generic tensors violating the output compatibility: returns ``(lhs, rhs)`` with ``lhs != rhs``."""
    rng = np.random.default_rng(seed)
    alpha = Column.power(TensorMap.random(2, 1, d, rng), 2)
    beta = Row.power(TensorMap.random(1, 2, d, rng), 2)
    gamma = TensorMap.random(1, 2, d, rng)
    lhs = endv.circ_i(endv.circledcirc(alpha, beta), gamma, 1)
    rhs = endv.circledcirc(endv.vee(alpha, 1, 2), endv.circled_i(beta, endv.wedge(gamma, 2), 1))
    return lhs, rhs
