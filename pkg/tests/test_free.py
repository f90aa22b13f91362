import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tprop import free
from tprop.endv import Column, Row
from tprop.free import (
    ColumnWord,
    FreeWordError,
    Gen,
    Op,
    RowWord,
    Symbol,
    Type1Word,
    Type2Word,
    evaluate,
    evaluate_expr,
    generator_word,
    graft,
    normal_form,
    parse,
    word_text,
)
from tprop.tensor import TensorMap

from oracles import compatible_assignment
from test_endv import DELTA_STAR_B1

EXPRS = free.enumerate_expressions(free.default_generators(5), 5)


def _symbols(e):
    if isinstance(e, Gen):
        return {e.symbol}
    return _symbols(e.left) | _symbols(e.right)


def test_parse_examples():
    e = parse("k(2,1) o[1] k(1,2)")
    assert e == Op("circ", Gen(Symbol("k", 2, 1)), Gen(Symbol("k", 1, 2)), 1)
    assert parse("(st_col(2,2) occ st_row(2,2))").op == "circledcirc"
    assert parse("k(1,2) [2]o k(3,1)").index == 2
    assert str(e) == "k(2,1) o[1] k(1,2)"


@pytest.mark.parametrize("text", ["", "k(2,1) o k(1,2)", "k(1,1)", "q(2,1)", "k(2,1) [1]x k(1,2)", "(k(2,1)", "k(2,1) k(1,2)"])
def test_parse_errors(text):
    with pytest.raises(FreeWordError):
        normal_form(parse(text))


def test_symbol_validation():
    assert Symbol.parse("st_row(2, 3)") == Symbol("st_row", 2, 3)
    assert Symbol("k", 2, 2).dim == 1 and Symbol("st_col", 3, 2).dim == 1
    with pytest.raises(FreeWordError):
        Symbol("st_col", 1, 2)


def test_graft_onto_plain_word():
    host = generator_word(Symbol("k", 2, 2))
    w = graft("circ", host, generator_word(Symbol("k", 1, 2)), 1)
    assert isinstance(w, Type1Word) and w.signature == (2, 3)
    assert [c.symbol.name for c in w.cells()] == ["k(2,2)", "k(1,2)"]


def test_column_with_row_gives_type2():
    col, row = generator_word(Symbol("st_col", 2, 2)), generator_word(Symbol("st_row", 2, 2))
    w = graft("circledcirc", col, row)
    assert isinstance(w, Type2Word) and w.signature == (2, 2)
    with pytest.raises(FreeWordError, match="second"):
        graft("circledcirc", col, graft("circledcirc", col, row))


def test_row_and_column_shapes():
    r = normal_form("st_row(2,2) oc[1] k(1,2)")
    assert isinstance(r, RowWord) and r.signature == (2, 3)
    c = normal_form("k(2,1) [2]oc st_col(2,2)")
    assert isinstance(c, ColumnWord) and c.signature == (3, 2)
    with pytest.raises(FreeWordError):
        normal_form("st_row(2,2) oc[1] st_row(3,2)")
    with pytest.raises(FreeWordError):
        normal_form("k(2,2) o[3] k(1,2)")


def test_edge_and_bar_words_agree_on_b1(B1):
    assignment = {"k(2,1)": B1.star, "k(1,2)": B1.delta, "st_col(2,2)": B1.star, "st_row(2,2)": B1.delta}
    edge = evaluate("k(2,1) o[1] k(1,2)", assignment)
    bar = evaluate("st_col(2,2) occ st_row(2,2)", assignment)
    assert edge.to_nested() == bar.to_nested() == DELTA_STAR_B1
    assert normal_form("k(2,1) o[1] k(1,2)") != normal_form("st_col(2,2) occ st_row(2,2)")


def test_central_edge_read_from_both_ends():
    assert normal_form("k(2,1) o[1] k(1,2)") == normal_form("k(2,1) [1]o k(1,2)")


def test_power_semantics(rng):
    entry = TensorMap.random(1, 2, 2, rng)
    assert evaluate("st_row(2,2)", {"st_row(2,2)": Row.power(entry, 2)}) == Row.power(entry, 2)
    with pytest.raises(FreeWordError, match="power"):
        evaluate("st_row(2,2)", {"st_row(2,2)": Row((entry, entry.scale(2)))})
    with pytest.raises(FreeWordError, match="no value"):
        evaluate("k(2,1)", {"k(1,2)": entry})


def test_normal_form_idempotent_and_round_trips():
    for e in EXPRS:
        w = normal_form(e)
        assert normal_form(w) == w
        assert normal_form(parse(word_text(w))) == w


def test_enumeration_agrees_with_rewrite_orbits():
    report = free.compare_with_orbits(EXPRS)
    assert report.expressions == 92 and report.classes == 63
    assert report.agrees, (report.unsound[:3], report.split[:3])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_evaluation_is_a_homomorphism(seed):
    rng = np.random.default_rng(seed)
    e = EXPRS[int(rng.integers(len(EXPRS)))]
    a = compatible_assignment(_symbols(e), rng)
    assert evaluate_expr(e, a) == evaluate(normal_form(e), a)


def test_generic_plain_words_evaluate_without_compatibility(rng):
    # nested and mixed associativity need no bialgebra: generic values suffice
    syms = [Symbol("k", 2, 2), Symbol("k", 1, 2), Symbol("k", 2, 1)]
    a = {s: TensorMap.random(s.m, s.n, 2, rng) for s in syms}
    for text in ("(k(2,2) o[2] k(1,2)) o[1] k(1,2)", "k(2,1) [1]o (k(2,2) o[1] k(1,2))"):
        e = parse(text)
        for other in free.orbit(e):
            assert evaluate_expr(other, a) == evaluate(normal_form(e), a)
