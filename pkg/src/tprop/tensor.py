"""Exact multilinear maps on a finite-dimensional rational vector space.

A :class:`TensorMap` of arity ``(m, n)`` over ``V = Q^d`` is an element of
``Hom(V^{(x)m}, V^{(x)n})``.  Coefficients live in a numpy array of dtype
``object`` holding Python ints and :class:`fractions.Fraction` values, with
axes ordered ``(out_1, ..., out_n, in_1, ..., in_m)``, so that

    T(e_{j_1} (x) ... (x) e_{j_m}) = sum_i T[i_1..i_n, j_1..j_m] e_{i_1} (x) ... (x) e_{i_n}.

Leg 1 is the leftmost tensor factor everywhere.
"""
from __future__ import annotations

import itertools
import numbers
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Scalar = int | Fraction


class ArityError(ValueError):
    """Raised when operands have incompatible arities or dimensions."""


def exact(x) -> Scalar:
    """Coerce ``x`` to an exact rational, keeping integers as ``int``."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, numbers.Rational):
        return exact(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return exact(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


def format_scalar(x: Scalar) -> str:
    x = exact(x)
    return str(x)


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


class Permutation:
    """A bijection of ``{0, ..., k-1}``, stored as its image table.

    ``Permutation((1, 0, 2))`` sends 0 -> 1, 1 -> 0, 2 -> 2.  Composition
    follows function notation: ``(p * q)(x) == p(q(x))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation table: {images}")
        self.images = images

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(k))

    @classmethod
    def transposition(cls, k: int, a: int, b: int) -> "Permutation":
        images = list(range(k))
        images[a], images[b] = images[b], images[a]
        return cls(images)

    @classmethod
    def random(cls, k: int, rng: np.random.Generator) -> "Permutation":
        return cls(rng.permutation(k).tolist())

    @classmethod
    def all(cls, k: int):
        for p in itertools.permutations(range(k)):
            yield cls(p)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise ArityError(f"cannot compose permutations of sizes {len(self)} and {len(other)}")
        return Permutation(self.images[i] for i in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(("perm", self.images))

    def __repr__(self) -> str:
        return f"Permutation({self.images})"


def block_permutation(
    outer: Permutation, sizes: Sequence[int], inner: Sequence[Permutation] | None = None
) -> Permutation:
    """Substitute blocks into ``outer``.

    Leg ``k`` of ``outer`` is expanded into a block of ``sizes[k]`` consecutive
    legs; blocks are laid out in the order prescribed by ``outer`` and the legs
    inside block ``k`` are permuted by ``inner[k]``.
    """
    if len(sizes) != len(outer):
        raise ArityError("one block size per leg is required")
    if inner is None:
        inner = [Permutation.identity(s) for s in sizes]
    src_offset = list(itertools.accumulate([0, *sizes]))
    inv = outer.inverse()
    tgt_offset = [0] * len(outer)
    acc = 0
    for t in range(len(outer)):
        k = inv(t)
        tgt_offset[k] = acc
        acc += sizes[k]
    images = [0] * acc
    for k, size in enumerate(sizes):
        if len(inner[k]) != size:
            raise ArityError(f"inner permutation {k} has size {len(inner[k])}, block has {size}")
        for r in range(size):
            images[src_offset[k] + r] = tgt_offset[k] + inner[k](r)
    return Permutation(images)


def koszul_sign(p: Permutation, degrees: Sequence[int]) -> int:
    """Sign of permuting graded items: item ``k`` moves to position ``p(k)``."""
    if len(p) != len(degrees):
        raise ArityError("one degree per permuted item is required")
    sign = 1
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p(a) > p(b) and degrees[a] % 2 and degrees[b] % 2:
                sign = -sign
    return sign


def parity_sign(n: int) -> int:
    return -1 if n % 2 else 1


# ---------------------------------------------------------------------------
# Tensor maps
# ---------------------------------------------------------------------------


def _as_object_array(coeffs) -> np.ndarray:
    arr = np.array(coeffs, dtype=object)
    flat = arr.reshape(-1)
    for idx, x in enumerate(flat):
        flat[idx] = exact(x)
    return flat.reshape(arr.shape)


class TensorMap:
    """An exact element of ``Hom(V^{(x)m}, V^{(x)n})`` with ``dim V = d``."""

    __slots__ = ("m", "n", "d", "coeffs", "_key")

    def __init__(self, m: int, n: int, d: int, coeffs=None):
        if m < 0 or n < 0 or d < 1:
            raise ArityError(f"invalid signature m={m}, n={n}, d={d}")
        shape = (d,) * (n + m)
        if coeffs is None:
            arr = np.zeros(shape, dtype=object)
            arr[...] = 0
            if arr.ndim == 0:
                arr = np.array(0, dtype=object)
        else:
            arr = _as_object_array(coeffs)
            if arr.size != d ** (n + m):
                raise ArityError(f"expected {d ** (n + m)} coefficients, got {arr.size}")
            arr = arr.reshape(shape)
        arr.flags.writeable = False
        self.m, self.n, self.d, self.coeffs = m, n, d, arr
        self._key = None

    # constructors -------------------------------------------------------

    @classmethod
    def _wrap(cls, m: int, n: int, d: int, arr: np.ndarray) -> "TensorMap":
        out = cls.__new__(cls)
        arr = np.asarray(arr, dtype=object).reshape((d,) * (n + m))
        arr.flags.writeable = False
        out.m, out.n, out.d, out.coeffs, out._key = m, n, d, arr, None
        return out

    @classmethod
    def zeros(cls, m: int, n: int, d: int) -> "TensorMap":
        return cls(m, n, d)

    @classmethod
    def identity(cls, k: int, d: int) -> "TensorMap":
        """Identity on ``V^{(x)k}``."""
        arr = np.zeros((d,) * (2 * k), dtype=object)
        arr[...] = 0
        for idx in itertools.product(range(d), repeat=k):
            arr[idx + idx] = 1
        return cls._wrap(k, k, d, arr)

    @classmethod
    def scalar(cls, value, d: int = 1) -> "TensorMap":
        return cls(0, 0, d, [value])

    @classmethod
    def random(
        cls, m: int, n: int, d: int, rng: np.random.Generator, low: int = -3, high: int = 3
    ) -> "TensorMap":
        """Random integer-valued map with entries in ``[low, high]``."""
        vals = rng.integers(low, high + 1, size=d ** (n + m)).tolist()
        return cls(m, n, d, vals)

    @classmethod
    def from_function(cls, m: int, n: int, d: int, fn) -> "TensorMap":
        """Build from ``fn(inputs) -> {outputs: coeff}`` on basis multi-indices."""
        arr = np.zeros((d,) * (n + m), dtype=object)
        arr[...] = 0
        for j in itertools.product(range(d), repeat=m):
            for i, c in fn(j).items():
                arr[tuple(i) + tuple(j)] += exact(c)
        return cls._wrap(m, n, d, arr)

    # basic protocol -----------------------------------------------------

    @property
    def signature(self) -> tuple[int, int]:
        return (self.m, self.n)

    @property
    def degree(self) -> int:
        return self.m + self.n - 2

    def __repr__(self) -> str:
        return f"TensorMap(m={self.m}, n={self.n}, d={self.d})"

    def key(self) -> tuple:
        """Hashable, totally ordered identity of the map."""
        if self._key is None:
            self._key = (self.m, self.n, self.d, tuple(Fraction(x) for x in self.coeffs.reshape(-1)))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorMap):
            return NotImplemented
        return self.signature == other.signature and self.d == other.d and all(
            a == b for a, b in zip(self.coeffs.reshape(-1), other.coeffs.reshape(-1))
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coeffs.reshape(-1))

    def _check_same(self, other: "TensorMap") -> None:
        if self.signature != other.signature or self.d != other.d:
            raise ArityError(
                f"signature mismatch: (m={self.m}, n={self.n}, d={self.d}) vs "
                f"(m={other.m}, n={other.n}, d={other.d})"
            )

    def __add__(self, other: "TensorMap") -> "TensorMap":
        self._check_same(other)
        return TensorMap._wrap(self.m, self.n, self.d, self.coeffs + other.coeffs)

    def __sub__(self, other: "TensorMap") -> "TensorMap":
        self._check_same(other)
        return TensorMap._wrap(self.m, self.n, self.d, self.coeffs - other.coeffs)

    def __neg__(self) -> "TensorMap":
        return TensorMap._wrap(self.m, self.n, self.d, -self.coeffs)

    def scale(self, c) -> "TensorMap":
        c = exact(c)
        return TensorMap._wrap(self.m, self.n, self.d, self.coeffs * c)

    def __rmul__(self, c) -> "TensorMap":
        return self.scale(c)

    def __call__(self, inputs: Sequence[int]) -> dict[tuple[int, ...], Scalar]:
        """Image of a basis tensor, as ``{output multi-index: coefficient}``."""
        inputs = tuple(inputs)
        if len(inputs) != self.m or any(not 0 <= x < self.d for x in inputs):
            raise ArityError(f"bad input multi-index {inputs} for {self!r}")
        out = {}
        for i in itertools.product(range(self.d), repeat=self.n):
            c = self.coeffs[i + inputs]
            if c != 0:
                out[i] = c
        return out

    def entries(self):
        """Yield ``(outputs, inputs, coefficient)`` for every nonzero entry."""
        for idx in itertools.product(range(self.d), repeat=self.n + self.m):
            c = self.coeffs[idx]
            if c != 0:
                yield idx[: self.n], idx[self.n :], c

    def to_nested(self) -> list:
        """Coefficients as nested lists of strings, outputs first."""
        return np.vectorize(format_scalar, otypes=[object])(self.coeffs).tolist()


def compose(a: TensorMap, b: TensorMap) -> TensorMap:
    """Plain composition ``a o b`` for ``a: V^k -> V^n``, ``b: V^m -> V^k``."""
    if a.m != b.n or a.d != b.d:
        raise ArityError(
            f"cannot compose A(m={a.m}, n={a.n}, d={a.d}) after B(m={b.m}, n={b.n}, d={b.d})"
        )
    k = a.m
    arr = np.tensordot(a.coeffs, b.coeffs, axes=(list(range(a.n, a.n + k)), list(range(k))))
    return TensorMap._wrap(b.m, a.n, a.d, arr)


def tensor_product(a: TensorMap, b: TensorMap) -> TensorMap:
    """``a (x) b`` with the legs of ``a`` to the left."""
    if a.d != b.d:
        raise ArityError(f"dimension mismatch: {a.d} vs {b.d}")
    arr = np.multiply.outer(a.coeffs, b.coeffs)
    # axes: a_out, a_in, b_out, b_in  ->  a_out, b_out, a_in, b_in
    na, ma, nb, mb = a.n, a.m, b.n, b.m
    order = (
        list(range(na))
        + list(range(na + ma, na + ma + nb))
        + list(range(na, na + ma))
        + list(range(na + ma + nb, na + ma + nb + mb))
    )
    return TensorMap._wrap(a.m + b.m, a.n + b.n, a.d, np.transpose(arr, order))


def tensor_power(maps: Sequence[TensorMap]) -> TensorMap:
    out = maps[0]
    for t in maps[1:]:
        out = tensor_product(out, t)
    return out


def _legs_transposed(arr: np.ndarray, offset: int, p: Permutation) -> np.ndarray:
    # leg k moves to position p(k): result axis p(k) is source axis k
    inv = p.inverse()
    axes = list(range(arr.ndim))
    for t in range(len(p)):
        axes[offset + t] = offset + inv(t)
    return np.transpose(arr, axes)


def act_out(sigma: Permutation, t: TensorMap) -> TensorMap:
    """Permute output legs: output leg ``k`` of ``t`` becomes leg ``sigma(k)``."""
    if len(sigma) != t.n:
        raise ArityError(f"permutation of size {len(sigma)} cannot act on {t.n} outputs")
    return TensorMap._wrap(t.m, t.n, t.d, _legs_transposed(t.coeffs, 0, sigma))


def act_in(tau: Permutation, t: TensorMap) -> TensorMap:
    """Permute input legs: ``t o P_tau^{-1}``, input leg ``k`` becomes leg ``tau(k)``."""
    if len(tau) != t.m:
        raise ArityError(f"permutation of size {len(tau)} cannot act on {t.m} inputs")
    return TensorMap._wrap(t.m, t.n, t.d, _legs_transposed(t.coeffs, t.n, tau))


def act(tau: Permutation, sigma: Permutation, t: TensorMap) -> TensorMap:
    """Action of ``tau^v x sigma`` on ``t``."""
    return act_out(sigma, act_in(tau, t))


def permutation_map(p: Permutation, d: int) -> TensorMap:
    """The map ``V^{(x)k} -> V^{(x)k}`` moving tensor factor ``k`` to ``p(k)``."""
    return act_out(p, TensorMap.identity(len(p), d))
