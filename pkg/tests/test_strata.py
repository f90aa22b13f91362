from fractions import Fraction
from math import comb

import pytest

from tprop import free, strata

F_VECTORS = {
    (1, 2): [1], (2, 1): [1],
    (1, 3): [2, 1], (2, 2): [2, 1], (3, 1): [2, 1],
    (1, 4): [5, 5, 1], (4, 1): [5, 5, 1], (2, 3): [4, 4, 1], (3, 2): [4, 4, 1],
    (1, 5): [14, 21, 9, 1], (5, 1): [14, 21, 9, 1], (2, 4): [10, 15, 7, 1], (4, 2): [10, 15, 7, 1],
    (3, 3): [8, 12, 6, 1],
}


def _labels(bd):
    return {strata.label(k): v for k, v in bd.items()}


def _dissections(n):
    """Faces of the associahedron on n leaves by dimension (Kirkman-Cayley count)."""
    top = n - 2
    return [int(Fraction(comb(n - 2, k) * comb(n + k, k), k + 1)) for k in range(top, -1, -1)]


@pytest.mark.parametrize("mn", sorted(F_VECTORS))
def test_f_vectors_and_homology(mn):
    cx = strata.assemble_and_verify(*mn)
    assert cx.f_vector() == F_VECTORS[mn]
    assert cx.homology_ranks() == [1] + [0] * (len(F_VECTORS[mn]) - 1)
    assert cx.euler_characteristic() == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_one_sided_complexes_are_associahedra(n):
    assert strata.f_vector(1, n) == _dissections(n)
    assert strata.f_vector(n, 1) == _dissections(n)


def test_frozen_boundaries():
    assert _labels(strata.boundary(free.normal_form("k(2,2)"))) == {
        "edge[k(2,1)[.,.]|k(1,2)[.,.]]": 1,
        "st_col(2,2)[.,.] occ st_row(2,2)[.,.]": -1,
    }
    assert _labels(strata.boundary(free.normal_form("k(3,2)"))) == {
        "k(2,2)[k(2,1)[.,.],.][.,.]": 1,
        "k(2,2)[.,k(2,1)[.,.]][.,.]": -1,
        "edge[k(3,1)[.,.,.]|k(1,2)[.,.]]": -1,
        "st_col(3,2)[.,.,.] occ st_row(3,2)[.,.]": 1,
    }
    assert _labels(strata.boundary(free.normal_form("k(1,3)"))) == {
        "edge[.|k(1,2)[k(1,2)[.,.],.]]": 1,
        "edge[.|k(1,2)[.,k(1,2)[.,.]]]": -1,
    }


def test_size_two_blocks_alternate():
    rows = [r for r in strata.sign_table(5) if r["move"][0] == "block" and r["move"][2] == 2]
    assert rows
    for r in rows:
        assert r["sign"] == (-1) ** (r["move"][1] - 1)


@pytest.mark.parametrize("mn", [(2, 3), (3, 3), (1, 5), (2, 4)])
def test_codimension_one_faces_appear_once(mn):
    cx = strata.assemble(*mn)
    top = cx.top()
    bd = strata.boundary(top)
    assert set(bd) == set(cx.strata[cx.top_dim - 1])
    assert set(bd.values()) <= {1, -1}


def test_unique_top_cell_and_dimensions():
    cx = strata.assemble(2, 3)
    assert len(cx.strata[cx.top_dim]) == 1
    assert strata.dim(cx.top()) == cx.top_dim == 2
    for d, cells in cx.strata.items():
        assert all(strata.dim(c) == d for c in cells)


def test_vertices_have_no_boundary():
    with pytest.raises(ValueError):
        strata.boundary(free.normal_form("k(2,1)"))


def test_invalid_arity_rejected():
    with pytest.raises(ValueError):
        strata.assemble(1, 1)


def test_dot_output():
    dot = strata.assemble(2, 2).to_dot()
    assert dot.startswith('digraph "K(2,2)"')
    assert dot.count("->") == 2


def test_matrix_shapes():
    cx = strata.assemble(2, 3)
    mat = cx.matrix(1)
    assert len(mat) == 4 and len(mat[0]) == 4
    assert cx.ranks()[1] == 3
