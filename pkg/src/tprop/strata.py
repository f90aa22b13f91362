"""Cellular chain complexes of the stratified spaces K(m,n).

Strata of K(m,n) are canonical free words of signature (m, n) over the cells
``k(a,b)`` (dimension a+b-3), ``st_col(a,n)`` (a-2) and ``st_row(m,b)`` (b-2):

* ``Type1Word`` -- one center ``k(a,b)`` with a, b >= 2 (or a bare edge) with
  trees of ``k(a,1)`` cells on its inputs and ``k(1,b)`` cells on its outputs;
* ``Type2Word`` -- a tree of ``st_col`` cells ``(o)`` a tree of ``st_row``
  cells, present when m, n >= 2.

Codimension-one degenerations of a single cell:

* a tree cell of arity r splits off a consecutive block of 2..r-1 legs;
* a center ``k(a,b)`` splits off a block of 2..b-1 outputs or 2..a-1 inputs;
* a center splits into ``k(a,1)`` below ``k(1,b)`` (the faces obtained by
  collapsing all outputs or all inputs coincide and are counted once);
* a center becomes ``st_col(a,.) (o) st_row(.,b)``, turning the input trees
  into column trees and the output trees into row trees.

Orientation: a stratum is oriented as the ordered product of its cells in
canonical order.  The boundary follows the graded Leibniz rule
``(-1)^(dims of the cells before)`` times the local incidence sign of the
degeneration, times the Koszul sign of reordering the new cells into
canonical order.  Local incidence signs are fixed once per cell type by
propagation on the cell's own complex so that the boundary squares to zero
there; every assembled complex is then verified to satisfy ``d o d = 0``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable

from . import linalg
from .free import Node, Symbol, Type1Word, Type2Word, leaves, preorder
from .tensor import Permutation, koszul_sign

Stratum = Type1Word | Type2Word


class BoundarySquareError(AssertionError):
    """The assembled boundary does not square to zero; carries a witness."""

    def __init__(self, m: int, n: int, stratum, residue: dict):
        self.m, self.n, self.stratum, self.residue = m, n, stratum, residue
        items = ", ".join(f"{c:+d}*[{label(g)}]" for g, c in list(residue.items())[:4])
        super().__init__(f"d o d != 0 on K({m},{n}) at [{label(stratum)}]: {items}")


# --- enumeration ----------------------------------------------------------------------


def compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Ordered ways to write ``total`` as ``parts`` positive integers."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[k + 1] - bounds[k] for k in range(parts))


def _symbol(side: str, arity: int, copies: int) -> Symbol:
    return {
        "down": lambda: Symbol("k", arity, 1),
        "up": lambda: Symbol("k", 1, arity),
        "col": lambda: Symbol("st_col", arity, copies),
        "row": lambda: Symbol("st_row", copies, arity),
    }[side]()


@lru_cache(maxsize=None)
def planar_trees(k: int, side: str, copies: int = 0) -> tuple:
    """All planar trees with ``k`` leaves and internal arities >= 2 (``None`` for k = 1)."""
    if k == 1:
        return (None,)
    out = []
    for r in range(2, k + 1):
        sym = _symbol(side, r, copies)
        for parts in compositions(k, r):
            for kids in itertools.product(*(planar_trees(p, side, copies) for p in parts)):
                out.append(Node(sym, tuple(kids)))
    return tuple(out)


def _forests(total: int, slots: int, side: str) -> Iterable[tuple]:
    for parts in compositions(total, slots):
        yield from itertools.product(*(planar_trees(p, side) for p in parts))


def _check_mn(m: int, n: int) -> None:
    if m < 1 or n < 1 or m + n < 3:
        raise ValueError(f"K(m,n) needs m, n >= 1 and m + n >= 3, got ({m},{n})")


def dim(word: Stratum) -> int:
    return sum(c.symbol.dim for c in word.cells())


def enumerate_strata(m: int, n: int) -> dict[int, list[Stratum]]:
    """All strata of K(m,n), grouped by dimension, in a deterministic order."""
    _check_mn(m, n)
    words: list[Stratum] = []
    for d in planar_trees(m, "down"):
        for u in planar_trees(n, "up"):
            words.append(Type1Word(None, (d,), (u,)))
    for a in range(2, m + 1):
        for b in range(2, n + 1):
            center = Node(Symbol("k", a, b))
            for down in _forests(m, a, "down"):
                for up in _forests(n, b, "up"):
                    words.append(Type1Word(center, down, up))
    if m >= 2 and n >= 2:
        for c in planar_trees(m, "col", n):
            for r in planar_trees(n, "row", m):
                words.append(Type2Word(c, r))
    out: dict[int, list[Stratum]] = {}
    for w in words:
        out.setdefault(dim(w), []).append(w)
    for d in out:
        out[d].sort(key=label)
    return dict(sorted(out.items()))


def label(word: Stratum) -> str:
    """Compact bracket notation, e.g. ``k(2,2)[k(2,1),.][.,.]`` or ``st_col(2,2)[.,.] occ st_row(2,2)[.,.]``."""

    def tree(t: Node | None) -> str:
        if t is None:
            return "."
        return f"{t.symbol.name}[{','.join(tree(c) for c in t.children)}]"

    if isinstance(word, Type2Word):
        return f"{tree(word.col)} occ {tree(word.row)}"
    if word.center is None:
        return f"edge[{tree(word.down[0])}|{tree(word.up[0])}]"
    return f"{word.center.symbol.name}[{','.join(map(tree, word.down))}][{','.join(map(tree, word.up))}]"


# --- tagging and degenerations ---------------------------------------------------------------


def _tag_tree(t: Node | None, counter) -> Node | None:
    if t is None:
        return None
    tag = next(counter)
    return Node(t.symbol, tuple(_tag_tree(c, counter) for c in t.children), tag)


def tagged(word: Stratum) -> Stratum:
    """Copy of ``word`` whose cells carry distinct tags (tags follow canonical order)."""
    counter = itertools.count()
    if isinstance(word, Type2Word):
        col = _tag_tree(word.col, counter)
        return Type2Word(col, _tag_tree(word.row, counter))
    down = tuple(_tag_tree(t, counter) for t in word.down)
    center = None if word.center is None else Node(word.center.symbol, (), next(counter))
    up = tuple(_tag_tree(t, counter) for t in word.up)
    return Type1Word(center, down, up)


def _replace(t: Node | None, tag, new: Node) -> Node | None:
    if t is None:
        return None
    if t.tag == tag:
        return new
    kids = tuple(_replace(c, tag, new) for c in t.children)
    return t if kids == t.children and all(a is b for a, b in zip(kids, t.children)) else replace(t, children=kids)


def _replace_in(word: Stratum, tag, new: Node) -> Stratum:
    if isinstance(word, Type2Word):
        return Type2Word(_replace(word.col, tag, new), _replace(word.row, tag, new))
    return Type1Word(
        word.center,
        tuple(_replace(t, tag, new) for t in word.down),
        tuple(_replace(t, tag, new) for t in word.up),
    )


def _tree_side(sym: Symbol) -> str:
    if sym.kind == "st_col":
        return "col"
    if sym.kind == "st_row":
        return "row"
    return "down" if sym.n == 1 else "up"


def _copies(sym: Symbol) -> int:
    return sym.n if sym.kind == "st_col" else sym.m if sym.kind == "st_row" else 0


@dataclass(frozen=True)
class Degeneration:
    """One codimension-one degeneration of one cell of a stratum."""

    position: int  # canonical index of the degenerating cell
    cell: tuple  # ("tree", arity) | ("center", a, b)
    move: tuple  # ("block", start, size) | ("up"|"down", start, size) | ("split",) | ("bar",)
    face: Stratum  # tagged
    order: tuple  # tags of the face's cells, old order with the new cells in place


_NEW = ("new", 0), ("new", 1)


def degenerations(word: Stratum) -> list[Degeneration]:
    """All codimension-one degenerations of ``word`` (tagged internally)."""
    word = tagged(word)
    cells = word.cells()
    tags = [c.tag for c in cells]
    out: list[Degeneration] = []

    def order_with(k: int, new_tags: tuple) -> tuple:
        return tuple(tags[:k]) + new_tags + tuple(tags[k + 1:])

    for k, cell in enumerate(cells):
        sym = cell.symbol
        if isinstance(word, Type1Word) and cell is word.center:
            a, b = sym.m, sym.n
            key = ("center", a, b)
            for size in range(2, b):
                for start in range(1, b - size + 2):
                    inner = Node(Symbol("k", 1, size), word.up[start - 1:start - 1 + size], _NEW[1])
                    up = word.up[:start - 1] + (inner,) + word.up[start - 1 + size:]
                    face = Type1Word(Node(Symbol("k", a, b - size + 1), (), _NEW[0]), word.down, up)
                    out.append(Degeneration(k, key, ("up", start, size), face, order_with(k, _NEW)))
            for size in range(2, a):
                for start in range(1, a - size + 2):
                    inner = Node(Symbol("k", size, 1), word.down[start - 1:start - 1 + size], _NEW[1])
                    down = word.down[:start - 1] + (inner,) + word.down[start - 1 + size:]
                    face = Type1Word(Node(Symbol("k", a - size + 1, b), (), _NEW[0]), down, word.up)
                    out.append(Degeneration(k, key, ("down", start, size), face, order_with(k, _NEW)))
            lower = Node(Symbol("k", a, 1), word.down, _NEW[0])
            upper = Node(Symbol("k", 1, b), word.up, _NEW[1])
            out.append(Degeneration(k, key, ("split",), Type1Word(None, (lower,), (upper,)), order_with(k, _NEW)))
            m, n = word.m, word.n
            col = Node(Symbol("st_col", a, n), tuple(_convert(t, "col", n) for t in word.down), _NEW[0])
            row = Node(Symbol("st_row", m, b), tuple(_convert(t, "row", m) for t in word.up), _NEW[1])
            out.append(Degeneration(k, key, ("bar",), Type2Word(col, row), order_with(k, _NEW)))
            continue
        side, r, copies = _tree_side(sym), cell.arity, _copies(sym)
        for size in range(2, r):
            for start in range(1, r - size + 2):
                inner = Node(_symbol(side, size, copies), cell.children[start - 1:start - 1 + size], _NEW[1])
                kids = cell.children[:start - 1] + (inner,) + cell.children[start - 1 + size:]
                outer = Node(_symbol(side, r - size + 1, copies), kids, _NEW[0])
                out.append(Degeneration(k, ("tree", r), ("block", start, size), _replace_in(word, cell.tag, outer),
                                        order_with(k, _NEW)))
    return out


def _convert(t: Node | None, side: str, copies: int) -> Node | None:
    if t is None:
        return None
    return Node(_symbol(side, t.arity, copies), tuple(_convert(c, side, copies) for c in t.children), t.tag)


def _reorder_sign(face: Stratum, order: tuple) -> int:
    """Koszul sign of bringing the cells listed in ``order`` into canonical order."""
    cells = face.cells()
    pos = {c.tag: k for k, c in enumerate(cells)}
    dims = {c.tag: c.symbol.dim for c in cells}
    return koszul_sign(Permutation(pos[t] for t in order), [dims[t] for t in order])


# --- local incidence signs -------------------------------------------------------------------


def _top_word(cell: tuple) -> Stratum:
    if cell[0] == "center":
        _, a, b = cell
        return Type1Word(Node(Symbol("k", a, b)), (None,) * a, (None,) * b)
    # tree cells of either side share one sign table; k(r,1) is the representative
    return Type1Word(None, (Node(Symbol("k", cell[1], 1), (None,) * cell[1]),), (None,))


_SIGNS: dict[tuple, dict[tuple, int]] = {}


def local_sign(cell: tuple, move: tuple) -> int:
    """Incidence sign of ``move`` on the top cell of type ``cell`` (computed on first use)."""
    if cell not in _SIGNS:
        _SIGNS[cell] = _solve_signs(cell)
    return _SIGNS[cell][move]


def _pre_sign(word: Stratum, dg: Degeneration) -> int:
    before = sum(c.symbol.dim for c in word.cells()[:dg.position])
    return (-1) ** before * _reorder_sign(dg.face, dg.order)


def _solve_signs(cell: tuple) -> dict[tuple, int]:
    top = _top_word(cell)
    degs = degenerations(top)
    pre = [_pre_sign(top, dg) for dg in degs]
    x: list[int | None] = [None] * len(degs)
    x[0] = 1
    if dim(top) == 1:
        # the two endpoints of an interval: augmentation must vanish
        if len(degs) != 2:
            raise AssertionError(f"one-dimensional cell {cell} with {len(degs)} endpoints")
        x[1] = -pre[0] * pre[1]
        return {dg.move: s for dg, s in zip(degs, x)}
    bnd = [boundary(dg.face) for dg in degs]
    touching: dict = {}
    for f, b in enumerate(bnd):
        for g, c in b.items():
            touching.setdefault(g, []).append((f, c))
    for g, lst in touching.items():
        if len(lst) != 2:
            raise AssertionError(f"codimension-two stratum {label(g)} of {cell} lies in {len(lst)} faces")
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for g, c in bnd[f].items():
            for h, ch in touching[g]:
                if h == f:
                    continue
                want = -x[f] * pre[f] * c * pre[h] * ch
                if x[h] is None:
                    x[h] = want
                    queue.append(h)
                elif x[h] != want:
                    raise AssertionError(f"inconsistent incidence signs on the cell {cell}")
    if any(s is None for s in x):
        raise AssertionError(f"boundary of the cell {cell} is disconnected")
    return {dg.move: s for dg, s in zip(degs, x)}


# --- boundary and complexes ------------------------------------------------------------------


def boundary(word: Stratum) -> dict:
    """Boundary of a stratum as ``{face: coefficient}`` with nonzero coefficients."""
    if dim(word) == 0:
        raise ValueError(f"a 0-dimensional stratum has no boundary: [{label(word)}]")
    return _boundary(word)


@lru_cache(maxsize=None)
def _boundary(word: Stratum) -> dict:
    out: dict = {}
    for dg in degenerations(word):
        s = _pre_sign(tagged(word), dg) * local_sign(dg.cell, dg.move)
        out[dg.face] = out.get(dg.face, 0) + s
    return {f: c for f, c in out.items() if c}


@dataclass
class StrataComplex:
    """The assembled chain complex of K(m,n)."""

    m: int
    n: int
    strata: dict[int, list[Stratum]]
    index: dict  # stratum -> position within its dimension
    differential: dict[int, dict[tuple[int, int], int]]  # d -> {(row in d-1, col in d): coeff}

    @property
    def top_dim(self) -> int:
        return max(self.strata)

    def f_vector(self) -> list[int]:
        return [len(self.strata.get(d, [])) for d in range(self.top_dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.f_vector()))

    def matrix(self, d: int) -> list[list[int]]:
        rows, cols = len(self.strata.get(d - 1, [])), len(self.strata.get(d, []))
        mat = [[0] * cols for _ in range(rows)]
        for (r, c), v in self.differential.get(d, {}).items():
            mat[r][c] = v
        return mat

    def triplets(self, d: int) -> list[tuple[int, int, int]]:
        """Sparse ``(row, col, value)`` entries of the differential out of degree ``d``."""
        return sorted((r, c, v) for (r, c), v in self.differential.get(d, {}).items())

    def ranks(self) -> dict[int, int]:
        return {d: linalg.matrix_rank(self.matrix(d)) if self.differential.get(d) else 0
                for d in range(1, self.top_dim + 1)}

    def homology_ranks(self) -> list[int]:
        f, rk = self.f_vector(), self.ranks()
        return [f[d] - rk.get(d, 0) - rk.get(d + 1, 0) for d in range(self.top_dim + 1)]

    def top(self) -> Stratum:
        (t,) = self.strata[self.top_dim]
        return t

    def to_dot(self) -> str:
        """Hasse diagram of the strata with incidence signs on the edges."""
        lines = [f'digraph "K({self.m},{self.n})" {{', "  rankdir=BT;"]
        for d, ws in self.strata.items():
            for k, w in enumerate(ws):
                lines.append(f'  "{d}_{k}" [label="{label(w)}"];')
        for d in sorted(self.differential):
            for (r, c), v in sorted(self.differential[d].items()):
                lines.append(f'  "{d - 1}_{r}" -> "{d}_{c}" [label="{v:+d}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def assemble(m: int, n: int) -> StrataComplex:
    strata = enumerate_strata(m, n)
    index = {w: k for ws in strata.values() for k, w in enumerate(ws)}
    diff: dict[int, dict] = {}
    for d, ws in strata.items():
        if d == 0:
            continue
        entries = {}
        for c, w in enumerate(ws):
            for face, v in boundary(w).items():
                if face not in index or dim(face) != d - 1:
                    raise AssertionError(f"face [{label(face)}] of [{label(w)}] is not a stratum of K({m},{n})")
                entries[(index[face], c)] = v
        diff[d] = entries
    return StrataComplex(m, n, strata, index, diff)


def verify(cx: StrataComplex) -> None:
    """Raise :class:`BoundarySquareError` with a witness if ``d o d != 0``."""
    for d, ws in cx.strata.items():
        if d < 2:
            continue
        for w in ws:
            residue: dict = {}
            for f, c in boundary(w).items():
                for g, c2 in boundary(f).items():
                    residue[g] = residue.get(g, 0) + c * c2
            residue = {g: v for g, v in residue.items() if v}
            if residue:
                raise BoundarySquareError(cx.m, cx.n, w, residue)


def assemble_and_verify(m: int, n: int) -> StrataComplex:
    """Assemble the complex of K(m,n) and check that the boundary squares to zero."""
    cx = assemble(m, n)
    verify(cx)
    return cx


def homology_ranks(cx: StrataComplex | int, n: int | None = None) -> list[int]:
    """Rational Betti numbers of a verified complex, or of K(m,n) given ``(m, n)``."""
    if not isinstance(cx, StrataComplex):
        cx = assemble_and_verify(cx, n)
    return cx.homology_ranks()


def f_vector(m: int, n: int) -> list[int]:
    return [len(ws) for ws in enumerate_strata(m, n).values()]


def sign_table(max_total: int = 6) -> list[dict]:
    """Local incidence signs of every cell type with arity total up to ``max_total``."""
    rows = []
    cells = [("tree", r) for r in range(3, max_total)]
    cells += [("center", a, s - a) for s in range(4, max_total + 1) for a in range(2, s - 1)]
    for cell in cells:
        local_sign(cell, next(iter(degenerations(_top_word(cell)))).move)
        for move, s in _SIGNS[cell].items():
            rows.append({"cell": cell, "move": move, "sign": s})
    return rows
