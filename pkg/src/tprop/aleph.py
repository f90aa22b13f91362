"""The graded Lie algebra of bar elements controlling bialgebra deformations.

Elements are finite combinations of three kinds of generators:

* ``PsiBar(P)`` for ``P: V^m -> V`` (``m >= 2``), degree ``m - 1``;
* ``ThetaBar(T)`` for ``T: V -> V^n`` (``n >= 2``), degree ``n - 1``;
* ``Alpha(A)`` for ``A: V^m -> V^n`` (``m, n >= 2``), degree ``m + n - 2``.

The bar generators are *not* linear in their payload: ``PsiBar(P1 + P2)`` is a
new basis vector, unrelated to ``PsiBar(P1) + PsiBar(P2)``.  They are keyed by
the exact payload tensor, and the bar of the zero map is the zero element.
``Alpha`` is linear in its payload, so that part is stored as one tensor per
signature.

The bracket is only a pre-Lie-bracket on these representatives; the Jacobi
identity holds modulo the ideals spanned by the jacobiators, which
:func:`ideal_membership` tests on a finite context.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import bialgebras, linalg
from .endv import Column, Row, circ_i, circledcirc, jcirc
from .report import CheckReport
from .tensor import ArityError, TensorMap, compose, exact, format_scalar, tensor_product


class NotMaurerCartanError(ValueError):
    """The pair ``(P, T)`` does not solve the Maurer-Cartan equation."""


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _add_maps(maps: Iterable[TensorMap], like: tuple[int, int, int]) -> TensorMap:
    out = TensorMap.zeros(*like)
    for t in maps:
        out = out + t
    return out


# --- tensor-level brackets -------------------------------------------------


def _check_psi(p: TensorMap, name: str = "P") -> None:
    if p.n != 1 or p.m < 1:
        raise ArityError(f"{name} must be a map V^m -> V, got signature {p.signature}")


def _check_theta(t: TensorMap, name: str = "T") -> None:
    if t.m != 1 or t.n < 1:
        raise ArityError(f"{name} must be a map V -> V^n, got signature {t.signature}")


def _check_alpha(a: TensorMap) -> None:
    if a.m < 2 or a.n < 2:
        raise ArityError(f"alpha needs m, n >= 2, got signature {a.signature}")


def pre_lie_in(p1: TensorMap, p2: TensorMap) -> TensorMap:
    """``P1 . P2 = sum_j (-1)^((j-1)(m2-1)) P1 o_j P2`` (``P2`` fed into input ``j``)."""
    _check_psi(p1, "P1")
    _check_psi(p2, "P2")
    terms = [jcirc(p2, p1, j).scale(_sign((j - 1) * (p2.m - 1))) for j in range(1, p1.m + 1)]
    return _add_maps(terms, (p1.m + p2.m - 1, 1, p1.d))


def pre_lie_out(t1: TensorMap, t2: TensorMap) -> TensorMap:
    """Output-side mirror: ``sum_i (-1)^((i-1)(n2-1)) T1 o_i T2``."""
    _check_theta(t1, "T1")
    _check_theta(t2, "T2")
    terms = [circ_i(t1, t2, i).scale(_sign((i - 1) * (t2.n - 1))) for i in range(1, t1.n + 1)]
    return _add_maps(terms, (1, t1.n + t2.n - 1, t1.d))


def gerstenhaber_bracket(p1: TensorMap, p2: TensorMap) -> TensorMap:
    """``[P1, P2] = P1.P2 - (-1)^((m1-1)(m2-1)) P2.P1`` on maps ``V^m -> V``."""
    eps = _sign((p1.m - 1) * (p2.m - 1))
    return pre_lie_in(p1, p2) - pre_lie_in(p2, p1).scale(eps)


def gerstenhaber_cobracket(t1: TensorMap, t2: TensorMap) -> TensorMap:
    """The mirror bracket on maps ``V -> V^n``, built from output insertions."""
    eps = _sign((t1.n - 1) * (t2.n - 1))
    return pre_lie_out(t1, t2) - pre_lie_out(t2, t1).scale(eps)


def mixed_bracket(t: TensorMap, p: TensorMap) -> TensorMap:
    """``T o P - (P,...,P) (o) (T,...,T)``.

    For ``m = n = 2`` this is ``a (x) b -> T(P(a, b)) - T(a) * T(b)``, the
    compatibility defect of a product ``P`` and coproduct ``T``.
    """
    _check_theta(t)
    _check_psi(p)
    if p.m < 2 or t.n < 2:
        raise ArityError(f"mixed bracket needs P: V^m -> V, T: V -> V^n with m, n >= 2; got {p.signature}, {t.signature}")
    return compose(t, p) - circledcirc(Column.power(p, t.n), Row.power(t, p.m))


def bracket_psi_alpha(p: TensorMap, a: TensorMap) -> TensorMap:
    """``[PsiBar(P), Alpha(A)]``: signed insertions of ``P`` into every input of ``A``.

    The global sign ``-(-1)^((m1-1)(m-1))`` uses the input degree of ``A``; it
    makes the Jacobi identities involving one ``Alpha`` hold exactly.
    """
    _check_psi(p)
    _check_alpha(a)
    terms = [jcirc(p, a, j).scale(_sign((j - 1) * (p.m - 1))) for j in range(1, a.m + 1)]
    total = _add_maps(terms, (a.m + p.m - 1, a.n, a.d))
    return total.scale(-_sign((p.m - 1) * (a.m - 1)))


def bracket_alpha_theta(a: TensorMap, t: TensorMap) -> TensorMap:
    """``[Alpha(A), ThetaBar(T)] = sum_i (-1)^((i-1)(n1-1)) A o_i T``."""
    _check_alpha(a)
    _check_theta(t)
    terms = [circ_i(a, t, i).scale(_sign((i - 1) * (t.n - 1))) for i in range(1, a.n + 1)]
    return _add_maps(terms, (a.m, a.n + t.n - 1, a.d))


# --- elements -------------------------------------------------------------


def _order_key(t: TensorMap):
    return t.key()


def _merge(target: dict, key, coeff) -> None:
    c = target.get(key, 0) + coeff
    if c == 0:
        target.pop(key, None)
    else:
        target[key] = exact(c)


@dataclass(frozen=True)
class AlephElement:
    """A finite combination of bar generators plus a linear ``Alpha`` part."""

    psi: dict = field(default_factory=dict)
    theta: dict = field(default_factory=dict)
    alpha: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "psi", {t: exact(c) for t, c in self.psi.items() if c != 0 and not t.is_zero()})
        object.__setattr__(self, "theta", {t: exact(c) for t, c in self.theta.items() if c != 0 and not t.is_zero()})
        object.__setattr__(self, "alpha", {k: a for k, a in self.alpha.items() if not a.is_zero()})
        for t in self.psi:
            if t.n != 1 or t.m < 2:
                raise ArityError(f"PsiBar payload must be V^m -> V with m >= 2, got {t.signature}")
        for t in self.theta:
            if t.m != 1 or t.n < 2:
                raise ArityError(f"ThetaBar payload must be V -> V^n with n >= 2, got {t.signature}")
        for k, a in self.alpha.items():
            _check_alpha(a)
            if k != a.signature:
                raise ArityError(f"alpha stored under {k} has signature {a.signature}")

    # constructors
    @classmethod
    def zero(cls) -> "AlephElement":
        return cls()

    @classmethod
    def psi_bar(cls, p: TensorMap, coeff=1) -> "AlephElement":
        _check_psi(p)
        return cls(psi={p: coeff})

    @classmethod
    def theta_bar(cls, t: TensorMap, coeff=1) -> "AlephElement":
        _check_theta(t)
        return cls(theta={t: coeff})

    @classmethod
    def alpha_of(cls, a: TensorMap) -> "AlephElement":
        return cls(alpha={a.signature: a})

    # linear structure
    def __add__(self, other: "AlephElement") -> "AlephElement":
        psi, theta, alpha = dict(self.psi), dict(self.theta), dict(self.alpha)
        for t, c in other.psi.items():
            _merge(psi, t, c)
        for t, c in other.theta.items():
            _merge(theta, t, c)
        for k, a in other.alpha.items():
            alpha[k] = alpha[k] + a if k in alpha else a
        return AlephElement(psi, theta, alpha)

    def scale(self, c) -> "AlephElement":
        c = exact(c)
        if c == 0:
            return AlephElement()
        return AlephElement(
            {t: v * c for t, v in self.psi.items()},
            {t: v * c for t, v in self.theta.items()},
            {k: a.scale(c) for k, a in self.alpha.items()},
        )

    def __rmul__(self, c) -> "AlephElement":
        return self.scale(c)

    def __neg__(self) -> "AlephElement":
        return self.scale(-1)

    def __sub__(self, other: "AlephElement") -> "AlephElement":
        return self + (-other)

    def is_zero(self) -> bool:
        return not (self.psi or self.theta or self.alpha)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlephElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.to_vector().items()))

    def generators(self):
        """Yield ``(kind, payload, coefficient)`` triples."""
        for t, c in self.psi.items():
            yield "psi", t, c
        for t, c in self.theta.items():
            yield "theta", t, c
        for a in self.alpha.values():
            yield "alpha", a, 1

    def degrees(self) -> set[int]:
        return {generator_degree(kind, t) for kind, t, _ in self.generators()}

    def to_vector(self) -> dict:
        """Coordinates in the key basis, for exact linear algebra."""
        vec = {}
        for t, c in self.psi.items():
            vec[("psi", t.key())] = c
        for t, c in self.theta.items():
            vec[("theta", t.key())] = c
        for (m, n), a in self.alpha.items():
            for outs, ins, v in a.entries():
                vec[("alpha", m, n, outs + ins)] = v
        return vec

    def describe(self) -> dict:
        return {
            "psi_bar": [{"coefficient": format_scalar(c), "payload": t.to_nested()} for t, c in self.psi.items()],
            "theta_bar": [{"coefficient": format_scalar(c), "payload": t.to_nested()} for t, c in self.theta.items()],
            "alpha": {f"{m},{n}": a.to_nested() for (m, n), a in sorted(self.alpha.items())},
        }


def psi_bar(p: TensorMap, coeff=1) -> AlephElement:
    return AlephElement.psi_bar(p, coeff)


def theta_bar(t: TensorMap, coeff=1) -> AlephElement:
    return AlephElement.theta_bar(t, coeff)


def alpha(a: TensorMap) -> AlephElement:
    return AlephElement.alpha_of(a)


def generator_degree(kind: str, t: TensorMap) -> int:
    if kind == "psi":
        return t.m - 1
    if kind == "theta":
        return t.n - 1
    return t.m + t.n - 2


def _generator_bracket(k1: str, t1: TensorMap, k2: str, t2: TensorMap) -> AlephElement:
    """Bracket of two generators with unit coefficients."""
    d1, d2 = generator_degree(k1, t1), generator_degree(k2, t2)
    swap = -_sign(d1 * d2)
    if k1 == k2 == "psi":
        if _order_key(t1) <= _order_key(t2):
            return psi_bar(gerstenhaber_bracket(t1, t2))
        return psi_bar(gerstenhaber_bracket(t2, t1), swap)
    if k1 == k2 == "theta":
        if _order_key(t1) <= _order_key(t2):
            return theta_bar(gerstenhaber_cobracket(t1, t2))
        return theta_bar(gerstenhaber_cobracket(t2, t1), swap)
    if (k1, k2) == ("theta", "psi"):
        return alpha(mixed_bracket(t1, t2))
    if (k1, k2) == ("psi", "theta"):
        return alpha(mixed_bracket(t2, t1)).scale(swap)
    if (k1, k2) == ("psi", "alpha"):
        return alpha(bracket_psi_alpha(t1, t2))
    if (k1, k2) == ("alpha", "psi"):
        return alpha(bracket_psi_alpha(t2, t1)).scale(swap)
    if (k1, k2) == ("alpha", "theta"):
        return alpha(bracket_alpha_theta(t1, t2))
    if (k1, k2) == ("theta", "alpha"):
        return alpha(bracket_alpha_theta(t2, t1)).scale(swap)
    return AlephElement()


def bracket(x: AlephElement, y: AlephElement) -> AlephElement:
    """Bilinear extension of the generator brackets."""
    out = AlephElement()
    for k1, t1, c1 in x.generators():
        for k2, t2, c2 in y.generators():
            if t1.d != t2.d:
                raise ArityError(f"bracket of elements over d={t1.d} and d={t2.d}")
            out = out + _generator_bracket(k1, t1, k2, t2).scale(c1 * c2)
    return out


def homogeneous_degree(x: AlephElement) -> int:
    degs = x.degrees()
    if len(degs) != 1:
        raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
    return degs.pop()


def jacobiator(x: AlephElement, y: AlephElement, z: AlephElement) -> AlephElement:
    """``[[x,y],z] - [x,[y,z]] + (-1)^(|x||y|) [y,[x,z]]`` for homogeneous ``x, y``."""
    if x.is_zero() or y.is_zero() or z.is_zero():
        return AlephElement()
    eps = _sign(homogeneous_degree(x) * homogeneous_degree(y))
    return bracket(bracket(x, y), z) - bracket(x, bracket(y, z)) + bracket(y, bracket(x, z)).scale(eps)


# --- Maurer-Cartan ------------------------------------------------------------


def beta(p: TensorMap, t: TensorMap) -> AlephElement:
    """``PsiBar(P) + ThetaBar(T)``, with zero payloads dropped."""
    return AlephElement(psi={p: 1}, theta={t: 1})


def mc_defect(p: TensorMap, t: TensorMap, normalized: bool = True) -> AlephElement:
    """The Maurer-Cartan defect of ``beta = PsiBar(P) + ThetaBar(T)``.

    ``[beta, beta]`` has components ``PsiBar([P,P])``, ``ThetaBar([T,T])`` and
    ``2 * mixed_bracket(T, P)``.  With ``normalized`` (the default) the result
    is ``[beta, beta] / 2``, whose ``Alpha`` part is exactly the compatibility
    defect.
    """
    if p.signature != (2, 1) or t.signature != (1, 2):
        raise ArityError(f"expected P of signature (2,1) and T of (1,2), got {p.signature}, {t.signature}")
    b = beta(p, t)
    full = bracket(b, b)
    return full.scale(Fraction(1, 2)) if normalized else full


def is_bialgebra(p: TensorMap, t: TensorMap) -> bool:
    """Associativity, coassociativity and compatibility by direct evaluation."""
    return bialgebras.is_bialgebra(p, t)


def twisted_differential(p: TensorMap, t: TensorMap, x: AlephElement, check: bool = True) -> AlephElement:
    """``ad(beta)(x) = [beta, x]`` for a Maurer-Cartan ``beta``."""
    if check and not mc_defect(p, t).is_zero():
        raise NotMaurerCartanError("(P, T) is not a bialgebra, so [beta, -] is not a differential")
    return bracket(beta(p, t), x)


# --- first-order deformations ----------------------------------------------------

# f'(0) for a polynomial of degree <= 4 sampled at t = 0..4
_DERIVATIVE_WEIGHTS = (Fraction(-25, 12), Fraction(4), Fraction(-3), Fraction(4, 3), Fraction(-1, 4))


def _derivative(fn) -> TensorMap:
    values = [fn(k) for k in range(len(_DERIVATIVE_WEIGHTS))]
    return _add_maps((v.scale(w) for v, w in zip(values, _DERIVATIVE_WEIGHTS)), (values[0].m, values[0].n, values[0].d))


def first_order_defects(p, t, p1, t1) -> tuple[TensorMap, TensorMap, TensorMap]:
    """Linear coefficients in ``eps`` of the three bialgebra defects of ``(P + eps P1, T + eps T1)``.

    The defects are polynomials of degree at most 4 in ``eps``; the linear
    coefficient is read off exactly from five evaluations.
    """
    def at(k):
        return p + p1.scale(k), t + t1.scale(k)

    assoc = _derivative(lambda k: bialgebras.associator(at(k)[0]))
    coassoc = _derivative(lambda k: bialgebras.coassociator(at(k)[1]))
    compat = _derivative(lambda k: bialgebras.compatibility_defect(*at(k)))
    return assoc, coassoc, compat


def is_first_order_deformation(p, t, p1, t1) -> bool:
    """True iff ``(P + eps P1, T + eps T1)`` is a bialgebra modulo ``eps^2``."""
    return all(x.is_zero() for x in first_order_defects(p, t, p1, t1))


def linearized_differential(p, t, p1, t1) -> tuple[TensorMap, TensorMap, TensorMap]:
    """Payload-level tangent of the Maurer-Cartan map at ``(P, T)`` along ``(P1, T1)``.

    Returns ``([P, P1], [T, T1], d/de mixed_bracket(T + e T1, P + e P1))``,
    the linear terms that the bar generators hide.
    """
    mixed = _derivative(lambda k: mixed_bracket(t + t1.scale(k), p + p1.scale(k)))
    return gerstenhaber_bracket(p, p1), gerstenhaber_cobracket(t, t1), mixed


def gauge_deformation(p: TensorMap, t: TensorMap, f: TensorMap) -> tuple[TensorMap, TensorMap]:
    """Tangent of conjugating ``(P, T)`` by ``1 + eps f``: always a first-order deformation."""
    ident = TensorMap.identity(1, f.d)
    p1 = compose(f, p) - compose(p, tensor_product(f, ident)) - compose(p, tensor_product(ident, f))
    t1 = compose(tensor_product(f, ident) + tensor_product(ident, f), t) - compose(t, f)
    return p1, t1


# --- ideals --------------------------------------------------------------------

IDEALS = ("I_G", "I^G", "I")


@dataclass(frozen=True)
class Membership:
    """Outcome of an ideal-membership query on a finite context."""

    status: str  # "member", "not_in_span" or "inconclusive"
    generators: int
    span_rank: int

    def __bool__(self) -> bool:
        return self.status == "member"


def ideal_generators(which: str, context: Sequence[TensorMap], depth: int = 1) -> list[AlephElement]:
    """Generators of an ideal built from the tensors in ``context``.

    Base generators are the jacobiators of bar triples (three ``PsiBar`` for
    ``I_G``, three ``ThetaBar`` for ``I^G``, two of one kind and one of the
    other for ``I``).  Each further level brackets the previous level with the
    context bars, up to ``depth`` levels.
    """
    if which not in IDEALS:
        raise ValueError(f"unknown ideal {which!r}; expected one of {IDEALS}")
    psis = [psi_bar(q) for q in context if q.n == 1 and q.m >= 2 and not q.is_zero()]
    thetas = [theta_bar(q) for q in context if q.m == 1 and q.n >= 2 and not q.is_zero()]
    if which == "I_G":
        triples = product(psis, repeat=3)
    elif which == "I^G":
        triples = product(thetas, repeat=3)
    else:
        triples = _mixed_triples(psis, thetas)
    level = [j for j in (jacobiator(*tr) for tr in triples) if not j.is_zero()]
    gens = list(level)
    for _ in range(depth):
        nxt = []
        for g in level:
            for s in psis if which in ("I_G", "I") else []:
                nxt.append(bracket(s, g))
            for s in thetas if which in ("I^G", "I") else []:
                nxt.append(bracket(g, s))
        level = [g for g in nxt if not g.is_zero()]
        gens.extend(level)
    return gens


def _mixed_triples(psis, thetas):
    for a, b in product(psis, repeat=2):
        for c in thetas:
            yield a, b, c
            yield a, c, b
            yield c, a, b
    for a in psis:
        for b, c in product(thetas, repeat=2):
            yield a, b, c
            yield b, a, c
            yield b, c, a


def ideal_membership(x: AlephElement, which: str, context: Sequence[TensorMap], depth: int = 1) -> Membership:
    """Exact test of ``x`` against the finite span of :func:`ideal_generators`.

    ``inconclusive`` means ``x`` involves keys that no generator reaches, so a
    larger context might still contain it.
    """
    vec = x.to_vector()
    if not vec:
        return Membership("member", 0, 0)
    gens = ideal_generators(which, context, depth)
    ech = linalg.Echelon()
    support = set()
    for g in gens:
        v = g.to_vector()
        support.update(v)
        ech.add(v)
    if ech.contains(vec):
        return Membership("member", len(gens), ech.rank)
    if not set(vec) <= support:
        return Membership("inconclusive", len(gens), ech.rank)
    return Membership("not_in_span", len(gens), ech.rank)


# --- Gerstenhaber-Schack embedding ------------------------------------------------


def embed(t: TensorMap) -> AlephElement:
    """The embedding ``U``: ``(m,1) -> PsiBar``, ``(1,n) -> ThetaBar``, otherwise ``Alpha``."""
    if t.m + t.n < 3 or t.m < 1 or t.n < 1:
        raise ArityError(f"GS elements need m, n >= 1 and m + n >= 3, got {t.signature}")
    if t.n == 1:
        return psi_bar(t)
    if t.m == 1:
        return theta_bar(t)
    return alpha(t)


def pullback(x: AlephElement):
    """Inverse of :func:`embed` on its image (up to a scalar on bar generators).

    Returns ``(ok, tensor)``; ``ok`` is ``False`` when ``x`` is not a single
    generator, and the zero element pulls back to ``None``.
    """
    gens = list(x.generators())
    if not gens:
        return True, None
    if len(gens) != 1:
        return False, None
    _, t, c = gens[0]
    return True, t.scale(c)


def gs_bracket(t1: TensorMap, t2: TensorMap):
    """Bracket two homogeneous tensors through ``U``; returns ``(closed, tensor_or_None)``."""
    return pullback(bracket(embed(t1), embed(t2)))


def _random_gs(d: int, bound: int, rng) -> TensorMap:
    while True:
        m, n = int(rng.integers(1, bound)), int(rng.integers(1, bound))
        if 3 <= m + n <= bound:
            t = TensorMap.random(m, n, d, rng)
            if not t.is_zero():
                return t


def tangency_check(trials: int = 100, d: int = 2, bound: int = 5, seed: int = 0) -> CheckReport:
    """Bracket random homogeneous pairs through ``U`` and pull back.

    ``closure``: the bracket is again in the image of ``U``.
    ``gerstenhaber pullback``: on two one-output tensors the pullback is their
    Gerstenhaber bracket (checked whenever a sampled pair has that shape, and
    on one forced pair of that shape per trial).
    """
    rng = np.random.default_rng(seed)
    report = CheckReport()
    closure, pull = report["closure"], report["gerstenhaber pullback"]
    for k in range(trials):
        t1, t2 = _random_gs(d, bound, rng), _random_gs(d, bound, rng)
        ok, _ = gs_bracket(t1, t2)
        closure.record(ok, f"trial {k}: {t1!r}, {t2!r}")
        m1 = int(rng.integers(2, bound - 1))
        m2 = int(rng.integers(2, bound + 1 - m1))
        pairs = [(t1, t2)] if t1.n == t2.n == 1 and t1.m >= 2 and t2.m >= 2 else []
        pairs.append((TensorMap.random(m1, 1, d, rng), TensorMap.random(m2, 1, d, rng)))
        for p1, p2 in pairs:
            ok, got = gs_bracket(p1, p2)
            want = gerstenhaber_bracket(p1, p2)
            same = ok and (got == want if got is not None else want.is_zero())
            pull.record(same, f"trial {k}: {p1!r}, {p2!r}")
    return report


def sign_table() -> list[dict]:
    """The resolved sign conventions of every nonzero generator bracket."""
    return [
        {"pair": "[PsiBar(P1), PsiBar(P2)]", "degrees": "m1-1, m2-1",
         "rule": "PsiBar(P1.P2 - (-1)^((m1-1)(m2-1)) P2.P1), P1.P2 = sum_j (-1)^((j-1)(m2-1)) P2 into input j of P1"},
        {"pair": "[ThetaBar(T1), ThetaBar(T2)]", "degrees": "n1-1, n2-1",
         "rule": "ThetaBar(T1.T2 - (-1)^((n1-1)(n2-1)) T2.T1), T1.T2 = sum_i (-1)^((i-1)(n2-1)) T2 on output i of T1"},
        {"pair": "[ThetaBar(T), PsiBar(P)]", "degrees": "n-1, m-1",
         "rule": "Alpha(T o P - (P,...,P) (o) (T,...,T)), sign chosen so m=n=2 gives T(ab) - T(a)*T(b)"},
        {"pair": "[PsiBar(P), Alpha(A)]", "degrees": "m1-1, m+n-2",
         "rule": "-(-1)^((m1-1)(m-1)) sum_j (-1)^((j-1)(m1-1)) P into input j of A"},
        {"pair": "[Alpha(A), ThetaBar(T)]", "degrees": "m+n-2, n1-1",
         "rule": "sum_i (-1)^((i-1)(n1-1)) T on output i of A"},
        {"pair": "reversed pairs", "degrees": "|x|, |y|",
         "rule": "[y, x] = -(-1)^(|x||y|) [x, y]; bar pairs are evaluated in canonical payload order"},
        {"pair": "all other pairs", "degrees": "-", "rule": "0"},
    ]
