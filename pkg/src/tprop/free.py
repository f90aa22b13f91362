"""Free 2/3-PROP words: canonical two-sided trees, grafting, parsing, evaluation.

A composite in the free structure is stored directly in canonical form:

* :class:`Type1Word` -- one central cell with ``m, n >= 2`` (or a bare edge),
  a forest of one-output cells grafted on its inputs and a forest of one-input
  cells grafted on its outputs;
* :class:`Type2Word` -- a column tree ``(o)`` a row tree, the only place a
  ``(o)`` can occur;
* :class:`RowWord` / :class:`ColumnWord` -- trees of row (column) cells.

Grafting onto a ``Type2Word`` uses the two compatibilities: a one-input word
grafted on an output joins the row tree, a one-output word grafted on an
input joins the column tree.  Because every word is kept canonical, two
expressions are equal in the free structure iff their words are equal.

Expressions use the syntax ``k(m,n)``, ``st_col(m,n)``, ``st_row(m,n)`` with
the left-associative infix operators ``o[i]``, ``[j]o``, ``oc[i]``, ``[j]oc``
and ``occ``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterable, Mapping, Union

from . import endv
from .endv import Column, Row
from .tensor import ArityError, TensorMap

KINDS = ("k", "st_col", "st_row")
OP_TEXT = {"circ": "o[{}]", "jcirc": "[{}]o", "circled": "oc[{}]", "jcircled": "[{}]oc", "circledcirc": "occ"}


class FreeWordError(ValueError):
    """An inadmissible composition or malformed expression."""


@dataclass(frozen=True, order=True)
class Symbol:
    """A generator: ``k(m,n)`` plain, ``st_col(m,n)`` column, ``st_row(m,n)`` row."""

    kind: str
    m: int
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FreeWordError(f"unknown generator kind {self.kind!r}")
        if self.kind == "k" and not (self.m >= 1 and self.n >= 1 and self.m + self.n >= 3):
            raise FreeWordError(f"k(m,n) needs m, n >= 1 and m + n >= 3, got {self.name}")
        if self.kind != "k" and not (self.m >= 2 and self.n >= 2):
            raise FreeWordError(f"{self.kind}(m,n) needs m, n >= 2, got {self.name}")

    @property
    def name(self) -> str:
        return f"{self.kind}({self.m},{self.n})"

    def __str__(self) -> str:
        return self.name

    @property
    def dim(self) -> int:
        """Dimension of the matching stratum cell."""
        if self.kind == "k":
            return self.m + self.n - 3
        return (self.m if self.kind == "st_col" else self.n) - 2

    @classmethod
    def parse(cls, text: str) -> "Symbol":
        mt = re.fullmatch(r"\s*(k|st_col|st_row)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*", text)
        if not mt:
            raise FreeWordError(f"not a generator symbol: {text!r}")
        return cls(mt.group(1), int(mt.group(2)), int(mt.group(3)))


GeneratorSymbol = Symbol


@dataclass(frozen=True)
class Node:
    """A cell of a planar tree; ``children[k]`` sits on its ``k``-th free leg (``None`` = leaf).

    ``tag`` is bookkeeping for callers that track cells through rewrites and
    takes no part in equality.
    """

    symbol: Symbol
    children: tuple = ()
    tag: object = field(default=None, compare=False)

    @property
    def arity(self) -> int:
        return len(self.children)


def leaf(symbol: Symbol, arity: int, tag=None) -> Node:
    return Node(symbol, (None,) * arity, tag)


def leaves(t: Node | None) -> int:
    if t is None:
        return 1
    return sum(leaves(c) for c in t.children)


def forest_leaves(forest) -> int:
    return sum(leaves(t) for t in forest)


def preorder(t: Node | None):
    if t is None:
        return
    yield t
    for c in t.children:
        yield from preorder(c)


def graft_tree(t: Node | None, index: int, sub: Node) -> Node:
    """Put ``sub`` on leaf ``index`` (1-based) of ``t``; a bare leaf becomes ``sub``."""
    if t is None:
        if index != 1:
            raise FreeWordError(f"leaf {index} out of range for a bare leg")
        return sub
    kids = list(t.children)
    pos = index
    for k, c in enumerate(kids):
        size = leaves(c)
        if pos <= size:
            kids[k] = graft_tree(c, pos, sub)
            return replace(t, children=tuple(kids))
        pos -= size
    raise FreeWordError(f"leaf {index} out of range (tree has {leaves(t)} leaves)")


def graft_forest(forest: tuple, index: int, sub: Node) -> tuple:
    pos = index
    out = list(forest)
    for k, c in enumerate(out):
        size = leaves(c)
        if pos <= size:
            out[k] = graft_tree(c, pos, sub)
            return tuple(out)
        pos -= size
    raise FreeWordError(f"leg {index} out of range (only {forest_leaves(forest)} legs)")


# --- words ------------------------------------------------------------------------


@dataclass(frozen=True)
class Type1Word:
    """Plain word without ``(o)``: a center (``None`` for a bare edge) and two forests."""

    center: Node | None
    down: tuple
    up: tuple

    kind = "plain"

    @property
    def m(self) -> int:
        return forest_leaves(self.down)

    @property
    def n(self) -> int:
        return forest_leaves(self.up)

    @property
    def signature(self) -> tuple[int, int]:
        return self.m, self.n

    def cells(self) -> list[Node]:
        """Cells in canonical order: input forest, center, output forest (preorder)."""
        out = [c for t in self.down for c in preorder(t)]
        if self.center is not None:
            out.append(self.center)
        out.extend(c for t in self.up for c in preorder(t))
        return out


@dataclass(frozen=True)
class Type2Word:
    """Column tree ``(o)`` row tree; signature (leaves of column, leaves of row)."""

    col: Node
    row: Node

    kind = "plain"

    @property
    def m(self) -> int:
        return leaves(self.col)

    @property
    def n(self) -> int:
        return leaves(self.row)

    @property
    def signature(self) -> tuple[int, int]:
        return self.m, self.n

    def cells(self) -> list[Node]:
        return list(preorder(self.col)) + list(preorder(self.row))


@dataclass(frozen=True)
class RowWord:
    """A tree of row cells with ``copies`` tensor factors."""

    tree: Node
    copies: int

    kind = "row"

    @property
    def m(self) -> int:
        return self.copies

    @property
    def n(self) -> int:
        return leaves(self.tree)

    @property
    def signature(self) -> tuple[int, int]:
        return self.m, self.n

    def cells(self) -> list[Node]:
        return list(preorder(self.tree))


@dataclass(frozen=True)
class ColumnWord:
    """A tree of column cells with ``copies`` tensor factors."""

    tree: Node
    copies: int

    kind = "column"

    @property
    def m(self) -> int:
        return leaves(self.tree)

    @property
    def n(self) -> int:
        return self.copies

    @property
    def signature(self) -> tuple[int, int]:
        return self.m, self.n

    def cells(self) -> list[Node]:
        return list(preorder(self.tree))


FreeWord = Union[Type1Word, Type2Word, RowWord, ColumnWord]


def generator_word(s: Symbol) -> FreeWord:
    """The one-cell word of a generator."""
    if s.kind == "st_row":
        return RowWord(leaf(s, s.n), s.m)
    if s.kind == "st_col":
        return ColumnWord(leaf(s, s.m), s.n)
    if s.n == 1:
        return Type1Word(None, (leaf(s, s.m),), (None,))
    if s.m == 1:
        return Type1Word(None, (None,), (leaf(s, s.n),))
    return Type1Word(leaf(s, 0), (None,) * s.m, (None,) * s.n)


def _up_tree(w: FreeWord, what: str) -> Node:
    """The tree of a plain one-input word (to be grafted on an output)."""
    if isinstance(w, Type1Word) and w.m == 1:
        return w.up[0]
    raise FreeWordError(f"{what} must be a plain word with one input, got {describe(w)}")


def _down_tree(w: FreeWord, what: str) -> Node:
    if isinstance(w, Type1Word) and w.n == 1:
        return w.down[0]
    raise FreeWordError(f"{what} must be a plain word with one output, got {describe(w)}")


def describe(w: FreeWord) -> str:
    name = type(w).__name__
    return f"{name}{w.signature}"


def _check_index(i, lo: int, hi: int, what: str) -> int:
    if i is None or not lo <= i <= hi:
        raise FreeWordError(f"{what} index {i} out of range [{lo}, {hi}]")
    return i


def graft(op: str, w1: FreeWord, w2: FreeWord, index: int | None = None) -> FreeWord:
    """Compose two canonical words; the result is canonical.

    ``circ``: ``w2`` on output ``index`` of ``w1``.  ``jcirc``: ``w1`` into
    input ``index`` of ``w2``.  ``circled`` / ``jcircled``: the same for row /
    column trees, where a plain one-input (one-output) word is first turned
    into a row (column) of copies.  ``circledcirc``: column ``w1`` with row
    ``w2``.
    """
    if op == "circ":
        sub = _up_tree(w2, "the right operand of o[i]")
        if isinstance(w1, Type1Word):
            _check_index(index, 1, w1.n, "o[i]")
            if w1.center is None and w1.up == (None,):
                return Type1Word(None, w1.down, (sub,))
            return Type1Word(w1.center, w1.down, graft_forest(w1.up, index, sub))
        if isinstance(w1, Type2Word):
            _check_index(index, 1, w1.n, "o[i]")
            return Type2Word(w1.col, graft_tree(w1.row, index, sub))
        raise FreeWordError(f"o[i] needs a plain host, got {describe(w1)}")
    if op == "jcirc":
        sub = _down_tree(w1, "the left operand of [j]o")
        if isinstance(w2, Type1Word):
            _check_index(index, 1, w2.m, "[j]o")
            if w2.center is None and w2.down == (None,):
                return Type1Word(None, (sub,), w2.up)
            return Type1Word(w2.center, graft_forest(w2.down, index, sub), w2.up)
        if isinstance(w2, Type2Word):
            _check_index(index, 1, w2.m, "[j]o")
            return Type2Word(graft_tree(w2.col, index, sub), w2.row)
        raise FreeWordError(f"[j]o needs a plain host, got {describe(w2)}")
    if op == "circled":
        if not isinstance(w1, RowWord):
            raise FreeWordError(f"oc[i] needs a row host, got {describe(w1)}")
        if isinstance(w2, RowWord):
            if w2.copies != w1.copies:
                raise FreeWordError(f"oc[i] of rows with {w1.copies} and {w2.copies} copies")
            sub = w2.tree
        else:
            sub = _up_tree(w2, "the right operand of oc[i]")
        _check_index(index, 1, w1.n, "oc[i]")
        return RowWord(graft_tree(w1.tree, index, sub), w1.copies)
    if op == "jcircled":
        if not isinstance(w2, ColumnWord):
            raise FreeWordError(f"[j]oc needs a column host, got {describe(w2)}")
        if isinstance(w1, ColumnWord):
            if w1.copies != w2.copies:
                raise FreeWordError(f"[j]oc of columns with {w1.copies} and {w2.copies} copies")
            sub = w1.tree
        else:
            sub = _down_tree(w1, "the left operand of [j]oc")
        _check_index(index, 1, w2.m, "[j]oc")
        return ColumnWord(graft_tree(w2.tree, index, sub), w2.copies)
    if op == "circledcirc":
        if isinstance(w1, Type2Word) or isinstance(w2, Type2Word):
            raise FreeWordError("occ would create a second (o) in one word")
        if not isinstance(w1, ColumnWord) or not isinstance(w2, RowWord):
            raise FreeWordError(f"occ needs a column and a row, got {describe(w1)} and {describe(w2)}")
        return Type2Word(w1.tree, w2.tree)
    raise FreeWordError(f"unknown operation {op!r}")


# --- expressions ------------------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    symbol: Symbol

    def __str__(self) -> str:
        return self.symbol.name


@dataclass(frozen=True)
class Op:
    op: str
    left: "Expr"
    right: "Expr"
    index: int | None = None

    def __str__(self) -> str:
        return to_text(self)


Expr = Union[Gen, Op]


def to_text(e: Expr, top: bool = True) -> str:
    if isinstance(e, Gen):
        return e.symbol.name
    text = f"{to_text(e.left, False)} {OP_TEXT[e.op].format(e.index)} {to_text(e.right, False)}"
    return text if top else f"({text})"


_TOKEN = re.compile(r"\s*(?:(st_col|st_row|occ|oc|o|k)|(\d+)|([()\[\],]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise FreeWordError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        name, num, punct = mt.groups()
        out.append(("name", name) if name else ("int", num) if num else ("punct", punct))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self, k: int = 0):
        return self.toks[self.pos + k] if self.pos + k < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise FreeWordError(f"expected {want} at token {self.pos}, got {tok[1]!r}")
        self.pos += 1
        return tok[1]

    def integer(self) -> int:
        return int(self.take("int"))

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek()[0] is not None:
            raise FreeWordError(f"trailing input at token {self.pos}: {self.peek()[1]!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while True:
            tok = self.peek()
            if tok == ("name", "occ"):
                self.take()
                e = Op("circledcirc", e, self.term())
            elif tok in (("name", "o"), ("name", "oc")):
                self.take()
                self.take("punct", "[")
                i = self.integer()
                self.take("punct", "]")
                e = Op("circ" if tok[1] == "o" else "circled", e, self.term(), i)
            elif tok == ("punct", "["):
                self.take()
                j = self.integer()
                self.take("punct", "]")
                name = self.take("name")
                if name not in ("o", "oc"):
                    raise FreeWordError(f"expected o or oc after [{j}], got {name!r}")
                e = Op("jcirc" if name == "o" else "jcircled", e, self.term(), j)
            else:
                return e

    def term(self) -> Expr:
        tok = self.peek()
        if tok == ("punct", "("):
            self.take()
            e = self.expr()
            self.take("punct", ")")
            return e
        if tok[0] == "name" and tok[1] in KINDS:
            kind = self.take()
            self.take("punct", "(")
            m = self.integer()
            self.take("punct", ",")
            n = self.integer()
            self.take("punct", ")")
            return Gen(Symbol(kind, m, n))
        raise FreeWordError(f"expected a generator or '(' at token {self.pos}, got {tok[1]!r}")


def parse(text: str) -> Expr:
    """Parse the textual word syntax into an expression tree."""
    return _Parser(text).parse()


@lru_cache(maxsize=200_000)
def _word_of(e: Expr) -> FreeWord:
    if isinstance(e, Gen):
        return generator_word(e.symbol)
    return graft(e.op, _word_of(e.left), _word_of(e.right), e.index)


def normal_form(w) -> FreeWord:
    """Canonical word of an expression (or of its text); words are returned unchanged."""
    if isinstance(w, str):
        w = parse(w)
    if isinstance(w, (Gen, Op)):
        return _word_of(w)
    if isinstance(w, (Type1Word, Type2Word, RowWord, ColumnWord)):
        return w
    raise TypeError(f"cannot normalize {type(w).__name__}")


# --- back to expressions ----------------------------------------------------------


def _graft_sequence(t: Node) -> list[tuple[int, Symbol]]:
    """Grafts ``(leaf, symbol)`` rebuilding ``t`` from its root, in preorder."""
    seq: list[tuple[int, Symbol]] = []

    def walk(node: Node, offset: int) -> None:
        # offset = leaves of the partial tree left of this node's first leg
        pos = offset
        for c in node.children:
            if c is not None:
                seq.append((pos + 1, c.symbol))
                walk(c, pos)
                pos += leaves(c)
            else:
                pos += 1

    walk(t, 0)
    return seq


def _up_expr(t: Node) -> Expr:
    e: Expr = Gen(t.symbol)
    for k in range(len(t.children) - 1, -1, -1):
        if t.children[k] is not None:
            e = Op("circ", e, _up_expr(t.children[k]), k + 1)
    return e


def _down_expr(t: Node) -> Expr:
    e: Expr = Gen(t.symbol)
    for k in range(len(t.children) - 1, -1, -1):
        if t.children[k] is not None:
            e = Op("jcirc", _down_expr(t.children[k]), e, k + 1)
    return e


def _row_expr(t: Node) -> Expr:
    # grafting in preorder at partial-tree positions: later grafts sit right
    # of or below earlier ones, so each recorded index is valid when applied
    e: Expr = Gen(t.symbol)
    for pos, sym in _graft_sequence(t):
        sub = Gen(sym)
        e = Op("circled", e, sub, pos)
    return e


def _col_expr(t: Node) -> Expr:
    e: Expr = Gen(t.symbol)
    for pos, sym in _graft_sequence(t):
        e = Op("jcircled", Gen(sym), e, pos)
    return e


def to_expr(w: FreeWord) -> Expr:
    """A canonical expression whose normal form is ``w``."""
    if isinstance(w, Type1Word):
        if w.center is None:
            d, u = w.down[0], w.up[0]
            if d is None:
                return _up_expr(u)
            if u is None:
                return _down_expr(d)
            return Op("circ", _down_expr(d), _up_expr(u), 1)
        e: Expr = Gen(w.center.symbol)
        for k in range(len(w.up) - 1, -1, -1):
            if w.up[k] is not None:
                e = Op("circ", e, _up_expr(w.up[k]), k + 1)
        for k in range(len(w.down) - 1, -1, -1):
            if w.down[k] is not None:
                e = Op("jcirc", _down_expr(w.down[k]), e, k + 1)
        return e
    if isinstance(w, RowWord):
        return _row_expr(w.tree)
    if isinstance(w, ColumnWord):
        return _col_expr(w.tree)
    if isinstance(w, Type2Word):
        return Op("circledcirc", _col_expr(w.col), _row_expr(w.row))
    raise TypeError(f"not a free word: {w!r}")


def word_text(w: FreeWord) -> str:
    return to_text(to_expr(w))


# --- evaluation in End(V) ------------------------------------------------------------

Assignment = Mapping


def _entry(assignment: Assignment, s: Symbol) -> TensorMap:
    """The map assigned to ``s``; rows and columns are read as tensor powers of one entry."""
    v = assignment.get(s, assignment.get(s.name)) if hasattr(assignment, "get") else assignment[s]
    if v is None:
        raise FreeWordError(f"no value assigned to {s.name}")
    if isinstance(v, (Row, Column)):
        if not v.is_power():
            raise FreeWordError(f"{s.name} must be assigned a tensor power, got distinct entries")
        v = v.maps[0]
    want = {"k": (s.m, s.n), "st_col": (s.m, 1), "st_row": (1, s.n)}[s.kind]
    if v.signature != want:
        raise ArityError(f"{s.name} needs an entry of signature {want}, got {v.signature}")
    return v


def _eval_up(t: Node, a: Assignment) -> TensorMap:
    x = _entry(a, t.symbol)
    for k in range(len(t.children) - 1, -1, -1):
        if t.children[k] is not None:
            x = endv.circ_i(x, _eval_up(t.children[k], a), k + 1)
    return x


def _eval_down(t: Node, a: Assignment) -> TensorMap:
    x = _entry(a, t.symbol)
    for k in range(len(t.children) - 1, -1, -1):
        if t.children[k] is not None:
            x = endv.jcirc(_eval_down(t.children[k], a), x, k + 1)
    return x


def _identity_like(a: Assignment) -> TensorMap:
    for v in a.values():
        return TensorMap.identity(1, v.d)
    raise FreeWordError("empty assignment")


def evaluate(w, assignment: Assignment):
    """Evaluate a canonical word (or an expression, via its word) in End(V)."""
    if isinstance(w, (str, Gen, Op)):
        w = normal_form(w)
    a = assignment
    if isinstance(w, Type1Word):
        x = _identity_like(a) if w.center is None else _entry(a, w.center.symbol)
        for k in range(len(w.up) - 1, -1, -1):
            if w.up[k] is not None:
                x = endv.circ_i(x, _eval_up(w.up[k], a), k + 1)
        for k in range(len(w.down) - 1, -1, -1):
            if w.down[k] is not None:
                x = endv.jcirc(_eval_down(w.down[k], a), x, k + 1)
        return x
    if isinstance(w, RowWord):
        return Row.power(_eval_up(w.tree, a), w.copies)
    if isinstance(w, ColumnWord):
        return Column.power(_eval_down(w.tree, a), w.copies)
    if isinstance(w, Type2Word):
        m, n = w.m, w.n
        return endv.circledcirc(Column.power(_eval_down(w.col, a), n), Row.power(_eval_up(w.row, a), m))
    raise TypeError(f"not a free word: {w!r}")


def end_apply(op: str, x, y, index: int | None = None):
    """An End(V) composition, with plain maps promoted to powers where the free word does."""
    if op == "circ":
        return endv.circ_i(x, y, index)
    if op == "jcirc":
        return endv.jcirc(x, y, index)
    if op == "circled":
        if isinstance(y, TensorMap):
            y = endv.wedge(y, x.m)
        return endv.circled_i(x, y, index)
    if op == "jcircled":
        if isinstance(x, TensorMap):
            x = Column.power(x, y.n)
        return endv.jcircled(x, y, index)
    if op == "circledcirc":
        if x.n != y.n:
            x = Column.power(x.maps[0], y.n)
        if y.m != x.m:
            y = Row.power(y.maps[0], x.m)
        return endv.circledcirc(x, y)
    raise FreeWordError(f"unknown operation {op!r}")


def evaluate_expr(e: Expr, assignment: Assignment):
    """Evaluate an expression node by node, without normalizing."""
    if isinstance(e, str):
        e = parse(e)
    if isinstance(e, Gen):
        s = e.symbol
        x = _entry(assignment, s)
        if s.kind == "st_row":
            return Row.power(x, s.m)
        if s.kind == "st_col":
            return Column.power(x, s.n)
        return x
    normal_form(e)  # reject inadmissible expressions with a word-level message
    return end_apply(e.op, evaluate_expr(e.left, assignment), evaluate_expr(e.right, assignment), e.index)


# --- enumeration and the rewrite-closure oracle ------------------------------------------


def total_arity(w: FreeWord) -> int:
    return w.m + w.n


def _try_word(e: Expr) -> FreeWord | None:
    try:
        return _word_of(e)
    except FreeWordError:
        return None


def _candidate_indices(op: str, a: FreeWord, b: FreeWord) -> Iterable[int | None]:
    if op == "circledcirc":
        return (None,)
    if op in ("circ", "circled"):
        return range(1, a.n + 1)
    return range(1, b.m + 1)


def enumerate_expressions(generators: Iterable[Symbol], bound: int) -> list[Expr]:
    """All admissible expressions whose every subexpression has total arity ``<= bound``."""
    gens = [Gen(s) for s in generators]
    by_size: dict[int, list[tuple[Expr, FreeWord]]] = {1: []}
    for g in gens:
        w = _word_of(g)
        if total_arity(w) <= bound:
            by_size[1].append((g, w))
    size = 2
    while True:
        layer = []
        for s1 in range(1, size):
            for e1, w1 in by_size.get(s1, ()):
                for e2, w2 in by_size.get(size - s1, ()):
                    for op in OP_TEXT:
                        for idx in _candidate_indices(op, w1, w2):
                            e = Op(op, e1, e2, idx)
                            w = _try_word(e)
                            if w is not None and total_arity(w) <= bound:
                                layer.append((e, w))
        if not layer:
            break
        by_size[size] = layer
        size += 1
    return [e for s in sorted(by_size) for e, _ in by_size[s]]


def _outs(e: Expr) -> int:
    return _word_of(e).n


def _ins(e: Expr) -> int:
    return _word_of(e).m


def _inner(op_row: str, t1: Expr) -> str:
    """Inner operation when reassociating a row (column) graft: plain operands use o / [j]o."""
    plain = isinstance(_word_of(t1), Type1Word)
    if op_row == "circled":
        return "circ" if plain else "circled"
    return "jcirc" if plain else "jcircled"


def _top_rewrites(e: Expr) -> Iterable[Expr]:
    """Expressions one axiom application away at the root (both directions)."""
    if not isinstance(e, Op):
        return
    L, R, i = e.left, e.right, e.index
    # output side: (X o[i] T1) o[j] T2, and the same for rows
    for outer, same in (("circ", "circ"), ("circled", "circled")):
        if e.op == outer and isinstance(L, Op) and L.op == same:
            X, T1, i1 = L.left, L.right, L.index
            n1, n2, j = _outs(T1), _outs(R), i
            if i1 <= j <= i1 + n1 - 1:
                yield Op(outer, X, Op(_inner(outer, T1) if outer == "circled" else "circ", T1, R, j - i1 + 1), i1)
            elif j < i1:
                yield Op(outer, Op(outer, X, R, j), T1, i1 + n2 - 1)
            else:
                yield Op(outer, Op(outer, X, R, j - n1 + 1), T1, i1)
        if e.op == outer and isinstance(R, Op) and R.op in (("circ", "circled") if outer == "circled" else ("circ",)):
            T1, T2, k = R.left, R.right, R.index
            yield Op(outer, Op(outer, L, T1, i), T2, i + k - 1)
    # input side: T2 [j]o (T1 [i]o X), and the same for columns
    for outer in ("jcirc", "jcircled"):
        if e.op == outer and isinstance(R, Op) and R.op == outer:
            T1, X, i1 = R.left, R.right, R.index
            m1, m2, j = _ins(T1), _ins(L), i
            if i1 <= j <= i1 + m1 - 1:
                yield Op(outer, Op(_inner(outer, T1) if outer == "jcircled" else "jcirc", L, T1, j - i1 + 1), X, i1)
            elif j < i1:
                yield Op(outer, T1, Op(outer, L, X, j), i1 + m2 - 1)
            else:
                yield Op(outer, T1, Op(outer, L, X, j - m1 + 1), i1)
        if e.op == outer and isinstance(L, Op) and L.op in (("jcirc", "jcircled") if outer == "jcircled" else ("jcirc",)):
            T2, T1, k = L.left, L.right, L.index
            yield Op(outer, T2, Op(outer, T1, R, i), i + k - 1)
    # mixed associativity
    if e.op == "jcirc" and isinstance(R, Op) and R.op == "circ":
        yield Op("circ", Op("jcirc", L, R.left, i), R.right, R.index)
    if e.op == "circ" and isinstance(L, Op) and L.op == "jcirc":
        yield Op("jcirc", L.left, Op("circ", L.right, R, i), L.index)
    # a single edge read from either end
    if e.op == "circ" and i == 1:
        yield Op("jcirc", L, R, 1)
    if e.op == "jcirc" and i == 1:
        yield Op("circ", L, R, 1)
    # compatibilities
    if e.op == "circ" and isinstance(L, Op) and L.op == "circledcirc":
        yield Op("circledcirc", L.left, Op("circled", L.right, R, i))
    if e.op == "circledcirc" and isinstance(R, Op) and R.op == "circled":
        yield Op("circ", Op("circledcirc", L, R.left), R.right, R.index)
    if e.op == "jcirc" and isinstance(R, Op) and R.op == "circledcirc":
        yield Op("circledcirc", Op("jcircled", L, R.left, i), R.right)
    if e.op == "circledcirc" and isinstance(L, Op) and L.op == "jcircled":
        yield Op("jcirc", L.left, Op("circledcirc", L.right, R), L.index)


def rewrites(e: Expr) -> Iterable[Expr]:
    """All admissible expressions one rewrite away, at any position."""
    for r in _top_rewrites(e):
        if r != e and _try_word(r) is not None:
            yield r
    if isinstance(e, Op):
        for r in rewrites(e.left):
            cand = Op(e.op, r, e.right, e.index)
            if _try_word(cand) is not None:
                yield cand
        for r in rewrites(e.right):
            cand = Op(e.op, e.left, r, e.index)
            if _try_word(cand) is not None:
                yield cand


def orbit(e: Expr, limit: int = 100_000) -> set[Expr]:
    """The closure of ``{e}`` under :func:`rewrites` (breadth first)."""
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for y in rewrites(x):
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise RuntimeError(f"orbit of {to_text(e)} exceeds {limit} expressions")
                queue.append(y)
    return seen


@dataclass
class OracleReport:
    expressions: int
    classes: int
    unsound: list  # (expr, rewritten expr) with different normal forms
    split: list  # normal-form classes not connected by rewrites

    @property
    def agrees(self) -> bool:
        return not self.unsound and not self.split


def compare_with_orbits(exprs: Iterable[Expr]) -> OracleReport:
    """Check that normal forms coincide exactly with rewrite orbits on ``exprs``."""
    exprs = list(exprs)
    classes: dict[FreeWord, list[Expr]] = {}
    for e in exprs:
        classes.setdefault(_word_of(e), []).append(e)
    unsound, split = [], []
    for w, members in classes.items():
        orb = orbit(members[0])
        for x in orb:
            if _word_of(x) != w:
                unsound.append((members[0], x))
                break
        missing = [x for x in members if x not in orb]
        if missing:
            split.append((members[0], missing[0]))
    return OracleReport(len(exprs), len(classes), unsound, split)


def default_generators(bound: int = 5) -> list[Symbol]:
    """Plain generators with ``m + n <= bound`` and the smallest row/column generators."""
    out = [Symbol("k", m, s - m) for s in range(3, bound + 1) for m in range(1, s)]
    out += [Symbol("st_col", 2, 2), Symbol("st_row", 2, 2)]
    return out
