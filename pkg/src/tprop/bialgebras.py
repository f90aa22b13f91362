"""Concrete (co)associative bialgebras and direct defect oracles.

The oracles here evaluate the axioms basis element by basis element with plain
loops, without going through the composition kernels of :mod:`tprop.endv`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .tensor import TensorMap, compose, exact, tensor_product


@dataclass(frozen=True)
class Bialgebra:
    """A product ``star: V (x) V -> V`` and a coproduct ``delta: V -> V (x) V``."""

    star: TensorMap
    delta: TensorMap
    basis: tuple[str, ...] = ()

    def __post_init__(self):
        if self.star.signature != (2, 1) or self.delta.signature != (1, 2):
            raise ValueError("expected star of arity (2,1) and delta of arity (1,2)")
        if self.star.d != self.delta.d:
            raise ValueError("product and coproduct live on different spaces")
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"e{i}" for i in range(self.d)))

    @property
    def d(self) -> int:
        return self.star.d


def b1() -> Bialgebra:
    """Group bialgebra of Z/2: basis {e, g}, group product, ``x -> x (x) x``."""
    star = TensorMap.from_function(2, 1, 2, lambda ab: {((ab[0] + ab[1]) % 2,): 1})
    delta = TensorMap.from_function(1, 2, 2, lambda a: {(a[0], a[0]): 1})
    return Bialgebra(star, delta, ("e", "g"))


def b2() -> Bialgebra:
    """Same product with ``g -> e (x) g + g (x) e``: coassociative, not compatible."""
    star = b1().star

    def cop(a):
        if a[0] == 0:
            return {(0, 0): 1}
        return {(0, 1): 1, (1, 0): 1}

    delta = TensorMap.from_function(1, 2, 2, cop)
    return Bialgebra(star, delta, ("e", "g"))


# --- direct oracles -------------------------------------------------------


def _table(m: int, n: int, d: int, fn) -> TensorMap:
    return TensorMap.from_function(m, n, d, fn)


def associator(star: TensorMap) -> TensorMap:
    """``(a,b,c) -> (ab)c - a(bc)`` by basis evaluation."""
    d = star.d

    def fn(abc):
        a, b, c = abc
        out: dict = {}
        for (x,), u in star((a, b)).items():
            for (y,), v in star((x, c)).items():
                out[(y,)] = out.get((y,), 0) + u * v
        for (x,), u in star((b, c)).items():
            for (y,), v in star((a, x)).items():
                out[(y,)] = out.get((y,), 0) - u * v
        return out

    return _table(3, 1, d, fn)


def coassociator(delta: TensorMap) -> TensorMap:
    """``a -> (Delta (x) 1) Delta a - (1 (x) Delta) Delta a`` by basis evaluation."""
    d = delta.d

    def fn(a):
        out: dict = {}
        for (x, y), u in delta(a).items():
            for (p, q), v in delta((x,)).items():
                out[(p, q, y)] = out.get((p, q, y), 0) + u * v
            for (p, q), v in delta((y,)).items():
                out[(x, p, q)] = out.get((x, p, q), 0) - u * v
        return out

    return _table(1, 3, d, fn)


def compatibility_defect(star: TensorMap, delta: TensorMap) -> TensorMap:
    """``a (x) b -> Delta(a * b) - Delta(a) * Delta(b)`` (component product)."""
    d = star.d

    def fn(ab):
        a, b = ab
        out: dict = {}
        for (x,), u in star((a, b)).items():
            for k, v in delta((x,)).items():
                out[k] = out.get(k, 0) + u * v
        for (a1, a2), u in delta((a,)).items():
            for (b1, b2), v in delta((b,)).items():
                for (p,), s in star((a1, b1)).items():
                    for (q,), t in star((a2, b2)).items():
                        out[(p, q)] = out.get((p, q), 0) - u * v * s * t
        return out

    return _table(2, 2, d, fn)


def is_bialgebra(star: TensorMap, delta: TensorMap) -> bool:
    """Associative, coassociative and compatible, checked by the oracles above."""
    if star.signature != (2, 1) or delta.signature != (1, 2) or star.d != delta.d:
        return False
    return (
        associator(star).is_zero()
        and coassociator(delta).is_zero()
        and compatibility_defect(star, delta).is_zero()
    )


# --- random bialgebras ----------------------------------------------------


@lru_cache(maxsize=None)
def semigroup_tables(d: int) -> tuple[tuple[int, ...], ...]:
    """All associative multiplication tables on ``{0..d-1}`` (row-major)."""
    tables = []
    for tab in itertools.product(range(d), repeat=d * d):
        mul = lambda a, b: tab[a * d + b]
        if all(
            mul(mul(a, b), c) == mul(a, mul(b, c))
            for a in range(d)
            for b in range(d)
            for c in range(d)
        ):
            tables.append(tab)
    return tuple(tables)


def semigroup_bialgebra(table, d: int, scale=1) -> Bialgebra:
    """Semigroup algebra with product scaled by ``scale`` and ``x -> x (x) x / scale``."""
    s = exact(scale)
    star = TensorMap.from_function(2, 1, d, lambda ab: {(table[ab[0] * d + ab[1]],): s})
    delta = TensorMap.from_function(1, 2, d, lambda a: {(a[0], a[0]): exact(1 / Fraction(s))})
    return Bialgebra(star, delta)


def transport(bi: Bialgebra, g) -> Bialgebra:
    """Transport the structure along an invertible matrix ``g`` (new = g old g^{-1})."""
    d = bi.d
    gi = linalg.inverse(g)
    gm = TensorMap(1, 1, d, [[exact(x) for x in row] for row in g])
    gim = TensorMap(1, 1, d, [[exact(x) for x in row] for row in gi])
    star = compose(gm, compose(bi.star, tensor_product(gim, gim)))
    delta = compose(tensor_product(gm, gm), compose(bi.delta, gim))
    return Bialgebra(star, delta)


def random_invertible(d: int, rng: np.random.Generator, unimodular: bool = False) -> list[list[int]]:
    """Random invertible integer matrix; ``unimodular`` keeps the inverse integral."""
    if unimodular:
        g = [[int(i == j) for j in range(d)] for i in range(d)]
        for _ in range(2 * d):
            a, b = rng.choice(d, size=2, replace=False) if d > 1 else (0, 0)
            if a == b:
                break
            c = int(rng.choice([-1, 1]))
            g[a] = [x + c * y for x, y in zip(g[a], g[b])]
        sign = int(rng.choice([-1, 1]))
        g[0] = [sign * x for x in g[0]]
        return g
    while True:
        g = rng.integers(-2, 3, size=(d, d)).tolist()
        if linalg.matrix_rank(g) == d:
            return g


def random_bialgebra(d: int, rng: np.random.Generator, integral: bool = False) -> Bialgebra:
    """A semigroup bialgebra, rescaled and conjugated by a random invertible matrix.

    With ``integral`` the scale is a sign and the conjugation unimodular, so all
    structure constants stay integers (much cheaper to contract).
    """
    tables = semigroup_tables(d)
    table = tables[int(rng.integers(len(tables)))]
    scale = int(rng.choice([-1, 1] if integral else [-2, -1, 1, 2, 3]))
    bi = semigroup_bialgebra(table, d, scale)
    return transport(bi, random_invertible(d, rng, unimodular=integral))
