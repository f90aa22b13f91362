"""The 2/3-PROP Bi of permutation pairs and its evaluation in End(V).

``Bi(m, n)`` is ``S_m^v x S_n``; the row component ``Bi^n_{1..1}`` is ``S_n``
and the column component ``Bi^{1..1}_m`` is ``S_m^v``.  Compositions are the
permutations obtained by transporting group actions through the End(V)
compositions, computed here combinatorially by block substitution.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import endv
from .bialgebras import is_bialgebra
from .endv import Column, Row
from .report import CheckReport
from .tensor import ArityError, Permutation, TensorMap, act, act_in, act_out, block_permutation, compose

OPS = ("circ", "jcirc", "circled", "jcircled", "circledcirc")


class NotABialgebraError(ValueError):
    """The given product/coproduct pair is not a (co)associative bialgebra."""


@dataclass(frozen=True)
class BiPlain:
    tau: Permutation  # acts on the m inputs
    sigma: Permutation  # acts on the n outputs

    def __post_init__(self):
        m, n = len(self.tau), len(self.sigma)
        if m < 1 or n < 1 or m + n < 3:
            raise ArityError(f"Bi({m},{n}) needs m,n >= 1 and m+n >= 3")

    @property
    def m(self) -> int:
        return len(self.tau)

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def identity(cls, m: int, n: int) -> "BiPlain":
        return cls(Permutation.identity(m), Permutation.identity(n))


@dataclass(frozen=True)
class BiRow:
    m: int  # number of tensor factors
    sigma: Permutation

    def __post_init__(self):
        if self.m < 2 or len(self.sigma) < 2:
            raise ArityError("row components need m, n >= 2")

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def identity(cls, m: int, n: int) -> "BiRow":
        return cls(m, Permutation.identity(n))


@dataclass(frozen=True)
class BiColumn:
    n: int
    tau: Permutation

    def __post_init__(self):
        if self.n < 2 or len(self.tau) < 2:
            raise ArityError("column components need m, n >= 2")

    @property
    def m(self) -> int:
        return len(self.tau)

    @classmethod
    def identity(cls, m: int, n: int) -> "BiColumn":
        return cls(n, Permutation.identity(m))


BiElement = BiPlain | BiRow | BiColumn


def _insert(outer: Permutation, slot: int, size: int, inner: Permutation) -> tuple[Permutation, int]:
    """Expand the leg sitting at position ``slot`` (1-based) of ``outer`` into a block.

    Returns the block permutation and the 1-based source leg that was expanded.
    """
    p = outer.inverse()(slot - 1)
    sizes = [1] * len(outer)
    sizes[p] = size
    inners = [Permutation.identity(s) for s in sizes]
    inners[p] = inner
    return block_permutation(outer, sizes, inners), p + 1


def transport(op: str, a: BiElement, b: BiElement, index: int | None = None):
    """Return ``(result, base_index)`` such that for all End(V) operands

        op(a . Psi, b . Theta, index) == result . op(Psi, Theta, base_index).
    """
    if op == "circ":
        if not (isinstance(a, BiPlain) and isinstance(b, BiPlain) and b.m == 1):
            raise ArityError("o_i composes Bi(m,n) with Bi(1,n1)")
        if not 1 <= index <= a.n:
            raise ArityError(f"o_{index} out of range for n={a.n}")
        sigma, base = _insert(a.sigma, index, b.n, b.sigma)
        return BiPlain(a.tau, sigma), base
    if op == "jcirc":
        if not (isinstance(a, BiPlain) and isinstance(b, BiPlain) and a.n == 1):
            raise ArityError("_jo composes Bi(m1,1) with Bi(m,n)")
        if not 1 <= index <= b.m:
            raise ArityError(f"_{index}o out of range for m={b.m}")
        tau, base = _insert(b.tau, index, a.m, a.tau)
        return BiPlain(tau, b.sigma), base
    if op == "circled":
        if not (isinstance(a, BiRow) and isinstance(b, BiRow) and a.m == b.m):
            raise ArityError("(o)_i composes two row elements with the same number of factors")
        if not 1 <= index <= a.n:
            raise ArityError(f"(o)_{index} out of range for n={a.n}")
        sigma, base = _insert(a.sigma, index, b.n, b.sigma)
        return BiRow(a.m, sigma), base
    if op == "jcircled":
        if not (isinstance(a, BiColumn) and isinstance(b, BiColumn) and a.n == b.n):
            raise ArityError("_j(o) composes two column elements with the same number of factors")
        if not 1 <= index <= b.m:
            raise ArityError(f"_{index}(o) out of range for m={b.m}")
        tau, base = _insert(b.tau, index, a.m, a.tau)
        return BiColumn(b.n, tau), base
    if op == "circledcirc":
        if not (isinstance(a, BiColumn) and isinstance(b, BiRow) and a.n == b.n and a.m == b.m):
            raise ArityError("(o) composes a column of Bi^{1..1 (n)}_m with a row of Bi^n_{1..1 (m)}")
        return BiPlain(a.tau, b.sigma), None
    raise ValueError(f"unknown composition {op!r}; expected one of {OPS}")


def bi_compose(op: str, a: BiElement, b: BiElement, index: int | None = None) -> BiElement:
    return transport(op, a, b, index)[0]


def act_element(x: BiElement, y):
    """Action of a Bi element on an End(V) component of matching shape."""
    if isinstance(x, BiPlain):
        return act(x.tau, x.sigma, y)
    if isinstance(x, BiRow):
        return y.act(x.sigma)
    return y.act(x.tau)


def end_compose(op: str, a, b, index: int | None = None):
    """Dispatch to the End(V) composition named ``op``."""
    if op == "circ":
        return endv.circ_i(a, b, index)
    if op == "jcirc":
        return endv.jcirc(a, b, index)
    if op == "circled":
        return endv.circled_i(a, b, index)
    if op == "jcircled":
        return endv.jcircled(a, b, index)
    if op == "circledcirc":
        return endv.circledcirc(a, b)
    raise ValueError(f"unknown composition {op!r}")


def phi(star: TensorMap, delta: TensorMap, x: BiElement, *, check: bool = True, literal: bool = False):
    """Evaluate ``x`` on the bialgebra ``(star, delta)``.

    Plain elements go to ``(tau^v x sigma) . (Delta^{n-1} o star^{m-1})``;
    with ``literal=True`` the permutations are dropped.
    """
    if check and not is_bialgebra(star, delta):
        raise NotABialgebraError(
            "phi is only well defined for an associative, coassociative and compatible pair"
        )
    if isinstance(x, BiPlain):
        base = endv.iterated_coproduct(delta, x.n)
        base = base if x.m == 1 else compose(base, endv.iterated_product(star, x.m))
        return base if literal else act(x.tau, x.sigma, base)
    if isinstance(x, BiRow):
        entry = endv.iterated_coproduct(delta, x.n)
        return Row.power(entry if literal else act_out(x.sigma, entry), x.m)
    entry = endv.iterated_product(star, x.m)
    return Column.power(entry if literal else act_in(x.tau, entry), x.n)


def square_images(star: TensorMap, delta: TensorMap) -> tuple[TensorMap, TensorMap]:
    """Images of ``Id^2 o Id_2`` and ``Id^2_{1,1} (o) Id_2^{1,1}`` under the unchecked map."""
    left = endv.circ_i(
        phi(star, delta, BiPlain.identity(2, 1), check=False),
        phi(star, delta, BiPlain.identity(1, 2), check=False),
        1,
    )
    right = endv.circledcirc(
        phi(star, delta, BiColumn.identity(2, 2), check=False),
        phi(star, delta, BiRow.identity(2, 2), check=False),
    )
    return left, right


# --- random sampling -----------------------------------------------------


def _rand_perm(k: int, rng) -> Permutation:
    return Permutation.random(k, rng)


def random_composable(op: str, bound: int, rng):
    """Random ``(a, b, index)`` composable under ``op`` within ``bound``.

    Plain results satisfy ``m + n <= bound``; for row and column results the
    entries (maps ``V -> V^n`` or ``V^m -> V``) have at most ``bound`` legs and
    there are at most ``bound`` tensor factors.
    """
    for _ in range(1000):
        if op == "circ":
            m, n = int(rng.integers(1, bound)), int(rng.integers(1, bound))
            n1 = int(rng.integers(2, bound))
            if m + n < 3 or m + n + n1 - 1 > bound:
                continue
            a = BiPlain(_rand_perm(m, rng), _rand_perm(n, rng))
            b = BiPlain(Permutation.identity(1), _rand_perm(n1, rng))
            return a, b, int(rng.integers(1, n + 1))
        if op == "jcirc":
            m, n = int(rng.integers(1, bound)), int(rng.integers(1, bound))
            m1 = int(rng.integers(2, bound))
            if m + n < 3 or m + n + m1 - 1 > bound:
                continue
            a = BiPlain(_rand_perm(m1, rng), Permutation.identity(1))
            b = BiPlain(_rand_perm(m, rng), _rand_perm(n, rng))
            return a, b, int(rng.integers(1, m + 1))
        if op == "circled":
            m, n, n1 = (int(rng.integers(2, bound + 1)) for _ in range(3))
            if n + n1 > bound:
                continue
            return BiRow(m, _rand_perm(n, rng)), BiRow(m, _rand_perm(n1, rng)), int(rng.integers(1, n + 1))
        if op == "jcircled":
            n, m, m1 = (int(rng.integers(2, bound + 1)) for _ in range(3))
            if m + m1 > bound:
                continue
            return BiColumn(n, _rand_perm(m1, rng)), BiColumn(n, _rand_perm(m, rng)), int(rng.integers(1, m + 1))
        if op == "circledcirc":
            m, n = int(rng.integers(2, bound)), int(rng.integers(2, bound))
            if m + n > bound:
                continue
            return BiColumn(n, _rand_perm(m, rng)), BiRow(m, _rand_perm(n, rng)), None
    raise ValueError(f"no composable {op} pair within arity bound {bound}")


def random_operands(op: str, a: BiElement, b: BiElement, d: int, rng):
    """Random End(V) operands with the shapes of ``a`` and ``b``.

    For ``circledcirc`` the operands are tensor powers: transport of the group
    actions through ``(o)`` holds only for those.
    """
    def shape(x):
        if isinstance(x, BiPlain):
            return TensorMap.random(x.m, x.n, d, rng)
        if isinstance(x, BiRow):
            if op == "circledcirc":
                return Row.power(TensorMap.random(1, x.n, d, rng), x.m)
            return Row(tuple(TensorMap.random(1, x.n, d, rng) for _ in range(x.m)))
        if op == "circledcirc":
            return Column.power(TensorMap.random(x.m, 1, d, rng), x.n)
        return Column(tuple(TensorMap.random(x.m, 1, d, rng) for _ in range(x.n)))

    return shape(a), shape(b)


def check_transport(op: str, trials: int, d: int = 2, bound: int = 5, seed: int = 0) -> CheckReport:
    """Verify ``op(a.Psi, b.Theta) == (a op b).op(Psi, Theta)`` on random tensors."""
    rng = np.random.default_rng(seed)
    report = CheckReport()
    res = report[f"transport:{op}"]
    for _ in range(trials):
        a, b, idx = random_composable(op, bound, rng)
        psi, theta = random_operands(op, a, b, d, rng)
        result, base = transport(op, a, b, idx)
        lhs = end_compose(op, act_element(a, psi), act_element(b, theta), idx)
        rhs = act_element(result, end_compose(op, psi, theta, base))
        res.record(lhs == rhs, f"a={a}, b={b}, index={idx}")
    return report


def check_phi_morphism(
    star: TensorMap, delta: TensorMap, arity_bound: int = 4, trials: int = 20, seed: int = 0
) -> CheckReport:
    """Check ``phi(a op b) == phi(a) op phi(b)`` for sampled composable pairs."""
    if not is_bialgebra(star, delta):
        raise NotABialgebraError("phi is refused for pairs that are not bialgebras")
    rng = np.random.default_rng(seed)
    report = CheckReport()
    for op in OPS:
        res = report[f"phi:{op}"]
        for _ in range(trials):
            a, b, idx = random_composable(op, arity_bound, rng)
            lhs = phi(star, delta, bi_compose(op, a, b, idx))
            rhs = end_compose(op, phi(star, delta, a), phi(star, delta, b), idx)
            res.record(lhs == rhs, f"a={a}, b={b}, index={idx}")
    g = report["phi:equivariance"]
    for _ in range(trials):
        a, _, _ = random_composable("circ", arity_bound, rng)
        tau, sigma = _rand_perm(a.m, rng), _rand_perm(a.n, rng)
        moved = BiPlain(tau * a.tau, sigma * a.sigma)
        g.record(
            phi(star, delta, moved) == act(tau, sigma, phi(star, delta, a)),
            f"x={a}, g=({tau}, {sigma})",
        )
    return report
