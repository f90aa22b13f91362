"""The pre-2/3-PROP End(V): partial compositions of multilinear maps.

Plain components are :class:`~tprop.tensor.TensorMap` values.  The tensor-power
components are stored as pure tensors:

* :class:`Row` -- ``m`` maps ``V -> V^{(x)n}``, an element of ``Hom(V, V^n)^{(x)m}``;
* :class:`Column` -- ``n`` maps ``V^{(x)m} -> V``, an element of ``Hom(V^m, V)^{(x)n}``.

Composition indices are 1-based, as in the usual operadic notation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .tensor import (
    ArityError,
    Permutation,
    TensorMap,
    act_in,
    act_out,
    compose,
    permutation_map,
    tensor_power,
)


@dataclass(frozen=True)
class Row:
    """``m`` copies-slot row: entry ``k`` acts on the ``k``-th input."""

    maps: tuple[TensorMap, ...]

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if not self.maps:
            raise ArityError("a Row needs at least one entry")
        n, d = self.maps[0].n, self.maps[0].d
        for t in self.maps:
            if t.m != 1 or t.n != n or t.d != d:
                raise ArityError(f"Row entries must all be V -> V^{n} over d={d}, got {t!r}")

    @classmethod
    def power(cls, t: TensorMap, m: int) -> "Row":
        return cls((t,) * m)

    @property
    def m(self) -> int:
        return len(self.maps)

    @property
    def n(self) -> int:
        return self.maps[0].n

    @property
    def d(self) -> int:
        return self.maps[0].d

    def is_power(self) -> bool:
        return all(t == self.maps[0] for t in self.maps)

    def act(self, sigma: Permutation) -> "Row":
        return Row(tuple(act_out(sigma, t) for t in self.maps))


@dataclass(frozen=True)
class Column:
    """``n`` entries; entry ``l`` produces the ``l``-th output."""

    maps: tuple[TensorMap, ...]

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))
        if not self.maps:
            raise ArityError("a Column needs at least one entry")
        m, d = self.maps[0].m, self.maps[0].d
        for t in self.maps:
            if t.n != 1 or t.m != m or t.d != d:
                raise ArityError(f"Column entries must all be V^{m} -> V over d={d}, got {t!r}")

    @classmethod
    def power(cls, t: TensorMap, n: int) -> "Column":
        return cls((t,) * n)

    @property
    def m(self) -> int:
        return self.maps[0].m

    @property
    def n(self) -> int:
        return len(self.maps)

    @property
    def d(self) -> int:
        return self.maps[0].d

    def is_power(self) -> bool:
        return all(t == self.maps[0] for t in self.maps)

    def act(self, tau: Permutation) -> "Column":
        return Column(tuple(act_in(tau, t) for t in self.maps))


EndComponent = TensorMap | Row | Column


def _check_d(a, b):
    if a.d != b.d:
        raise ArityError(f"dimension mismatch: {a.d} vs {b.d}")


def circ_i(psi: TensorMap, theta: TensorMap, i: int) -> TensorMap:
    """Apply ``theta: V -> V^{n1}`` to the ``i``-th output of ``psi``."""
    _check_d(psi, theta)
    if theta.m != 1:
        raise ArityError(f"o_i needs a map with one input, got m={theta.m}")
    if not 1 <= i <= psi.n:
        raise ArityError(f"o_{i} out of range for a map with {psi.n} outputs")
    n, n1 = psi.n, theta.n
    arr = np.tensordot(theta.coeffs, psi.coeffs, axes=([n1], [i - 1]))
    # axes now: theta outs (n1), psi outs without i-1 (n-1), psi ins (m)
    order = (
        list(range(n1, n1 + i - 1))
        + list(range(n1))
        + list(range(n1 + i - 1, n1 + n - 1))
        + list(range(n1 + n - 1, arr.ndim))
    )
    return TensorMap._wrap(psi.m, n + n1 - 1, psi.d, np.transpose(arr, order))


def jcirc(theta: TensorMap, psi: TensorMap, j: int) -> TensorMap:
    """Feed the output of ``theta: V^{m1} -> V`` into the ``j``-th input of ``psi``."""
    _check_d(psi, theta)
    if theta.n != 1:
        raise ArityError(f"_jo needs a map with one output, got n={theta.n}")
    if not 1 <= j <= psi.m:
        raise ArityError(f"_{j}o out of range for a map with {psi.m} inputs")
    n, m, m1 = psi.n, psi.m, theta.m
    arr = np.tensordot(psi.coeffs, theta.coeffs, axes=([n + j - 1], [0]))
    # axes now: psi outs (n), psi ins without j-1 (m-1), theta ins (m1)
    order = (
        list(range(n + j - 1))
        + list(range(n + m - 1, n + m - 1 + m1))
        + list(range(n + j - 1, n + m - 1))
    )
    return TensorMap._wrap(m + m1 - 1, n, psi.d, np.transpose(arr, order))


def circled_i(c1: Row, c2: Row, i: int) -> Row:
    """Entrywise ``o_i`` of two rows of the same length."""
    if c1.m != c2.m:
        raise ArityError(f"row lengths differ: {c1.m} vs {c2.m}")
    return Row(tuple(circ_i(a, b, i) for a, b in zip(c1.maps, c2.maps)))


def jcircled(c1: Column, c2: Column, j: int) -> Column:
    """Entrywise ``_jo``: ``c1`` entries are plugged into ``c2`` entries."""
    if c1.n != c2.n:
        raise ArityError(f"column lengths differ: {c1.n} vs {c2.n}")
    return Column(tuple(jcirc(a, b, j) for a, b in zip(c1.maps, c2.maps)))


def regrouping_permutation(m: int, n: int) -> Permutation:
    """Leg ``(k, l)`` of ``V^{(x)mn}`` (block k, slot l) moves to ``(l, k)``."""
    return Permutation(l * m + k for k in range(m) for l in range(n))


def circledcirc(psis: Column, thetas: Row) -> TensorMap:
    """``(Psi_1 (x)...(x) Psi_n) (o) (Theta_1 (x)...(x) Theta_m) = G o F``.

    ``F = Theta_1 (x)...(x) Theta_m`` and ``G`` feeds the ``l``-th output of
    every ``Theta_k`` into ``Psi_l``.
    """
    _check_d(psis, thetas)
    m, n = psis.m, psis.n
    if thetas.m != m:
        raise ArityError(
            f"F = Theta_1 (x)...(x) Theta_{thetas.m} has {thetas.m} inputs but each Psi takes {m}"
        )
    if thetas.n != n:
        raise ArityError(
            f"G needs each Theta to have {n} outputs (one per Psi), got {thetas.n}"
        )
    letters = iter("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
    ins = [next(letters) for _ in range(m)]
    outs = [next(letters) for _ in range(n)]
    mid = [[next(letters) for _ in range(n)] for _ in range(m)]
    operands, subs = [], []
    for k, t in enumerate(thetas.maps):
        operands.append(t.coeffs)
        subs.append("".join(mid[k]) + ins[k])
    for l, p in enumerate(psis.maps):
        operands.append(p.coeffs)
        subs.append(outs[l] + "".join(mid[k][l] for k in range(m)))
    subscripts = ",".join(subs) + "->" + "".join(outs) + "".join(ins)
    arr = np.einsum(subscripts, *operands, optimize="greedy")
    return TensorMap._wrap(m, n, psis.d, arr)


def circledcirc_literal(psis: Column, thetas: Row) -> TensorMap:
    """``circledcirc`` assembled literally from ``F``, the regrouping and ``G``."""
    m, n = psis.m, psis.n
    f = tensor_power(list(thetas.maps))
    regroup = permutation_map(regrouping_permutation(m, n), psis.d)
    g = tensor_power(list(psis.maps))
    return compose(g, compose(regroup, f))


def wedge(gamma: TensorMap, m: int) -> Row:
    """The row with ``m`` identical copies of ``gamma: V -> V^{n1}``."""
    return Row.power(gamma, m)


def vee(alpha: Column, i: int, n1: int) -> Column:
    """Re-read a column at ``n + n1 - 1`` outputs by repeating entry ``i``."""
    maps = alpha.maps
    return Column(maps[: i - 1] + (maps[i - 1],) * n1 + maps[i:])


def vee_row(beta: Row, j: int, m1: int) -> Row:
    """Mirror of :func:`vee` for rows: repeat entry ``j`` ``m1`` times."""
    maps = beta.maps
    return Row(maps[: j - 1] + (maps[j - 1],) * m1 + maps[j:])


def iterated_product(star: TensorMap, k: int) -> TensorMap:
    """``star^{k-1}``: the left-nested product of ``k`` factors (identity for k=1)."""
    out = TensorMap.identity(1, star.d)
    for _ in range(k - 1):
        out = jcirc(star, out, 1) if out.m > 1 else star
    return out


def iterated_coproduct(delta: TensorMap, k: int) -> TensorMap:
    """``Delta^{k-1}``: the left-nested coproduct with ``k`` outputs."""
    out = TensorMap.identity(1, delta.d)
    for _ in range(k - 1):
        out = circ_i(out, delta, 1) if out.n > 1 else delta
    return out
