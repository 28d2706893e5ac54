import numpy as np
import pytest

from twoended.dihedral_engine import (
    DihedralModel,
    color_dihedral_H,
    color_reflections,
    color_translation_pairs,
)
from twoended.errors import InvalidInput
from twoended.marked_group import QuotientElement
from twoended.multigraph import Multigraph, brute_force_chromatic_index, color_count, is_proper


def check(model, res):
    g = model.multigraph()
    assert is_proper(g, res.colors)[0]
    assert color_count(res.colors) <= model.deg_h + 1
    assert set(g.degrees().tolist()) == {model.deg_h}
    # every orbit misses some color in 1..deg_H+1
    present = np.zeros((g.n_vertices, model.deg_h + 2), bool)
    present[g.u, res.colors] = True
    present[g.v, res.colors] = True
    assert (~present[:, 1:]).any(axis=1).all()
    return g


def test_single_reflection_matching():
    model = DihedralModel(3, (0,), ())
    cols = color_reflections(model)
    g = model.multigraph()
    assert g.n_edges == 3 and cols.tolist() == [1, 1, 1]
    ends = np.concatenate([g.u, g.v]).tolist()
    assert sorted(ends) == list(range(6))
    # the reflection fixes no quotient element
    s = QuotientElement(0, 1)
    for n in range(3):
        for e in (0, 1):
            q = s * QuotientElement(n, e)
            assert (q.n % 3, q.eps) != (n, e)


def test_parallel_reflections():
    model = DihedralModel(4, (0, 0), ())
    res = color_dihedral_H(model)
    g = check(model, res)
    assert g.edges()[:4] == g.edges()[4:]
    assert set(res.colors[:4].tolist()) == {1} and set(res.colors[4:].tolist()) == {2}


def test_no_reflections():
    model = DihedralModel(8, (), (1,))
    assert color_reflections(model).size == 0


def test_one_pair_even():
    model = DihedralModel(10, (), (1,))
    cols, _ = color_translation_pairs(model)
    assert set(cols.tolist()) == {1, 2}


def test_one_pair_odd():
    M = 7
    model = DihedralModel(M, (), (1,))
    res = color_dihedral_H(model)
    check(model, res)
    sparse = np.flatnonzero(res.colors == model.sparse_color)
    g = model.multigraph()
    cosets = (g.u[sparse] // M).tolist()
    assert sorted(cosets) == [0, 1]
    coset = Multigraph.from_edges(M, [(j, (j + 1) % M) for j in range(M)])
    assert brute_force_chromatic_index(coset) == 3


def test_two_pairs():
    model = DihedralModel(24, (), (1, 2))
    res = color_dihedral_H(model)
    check(model, res)
    assert color_count(res.colors) <= 5


def test_reflections_only():
    model = DihedralModel.from_generators(6, [QuotientElement(0, 1), QuotientElement(1, 1)])
    res = color_dihedral_H(model)
    check(model, res)
    assert color_count(res.colors) == 2 < model.deg_h + 1


def test_mixed():
    model = DihedralModel.from_generators(
        12, [QuotientElement(0, 1), QuotientElement(1), QuotientElement(-1)]
    )
    res = color_dihedral_H(model)
    check(model, res)
    assert color_count(res.colors) <= 4


def test_empty_rejected():
    with pytest.raises(InvalidInput):
        DihedralModel(5, (), ())
    with pytest.raises(InvalidInput):
        DihedralModel.from_generators(8, [QuotientElement(1)])


@pytest.mark.parametrize("M", [24, 25, 48, 61])
@pytest.mark.parametrize("refl, trans", [((0,), (1, 2)), ((0, 3, 3), (1, 1, 3)), ((), (2, 3))])
def test_shared_sparse_color_is_a_matching(M, refl, trans):
    model = DihedralModel(M, refl, trans)
    res = color_dihedral_H(model)
    g = check(model, res)
    sparse = np.flatnonzero(res.colors == model.sparse_color)
    ends = np.concatenate([g.u[sparse], g.v[sparse]])
    assert len(set(ends.tolist())) == ends.size
    # reflection colors and translation colors are disjoint palettes
    R = len(model.reflections)
    assert set(res.colors[: R * M].tolist()) <= set(range(1, R + 1))
    assert set(res.colors[R * M :].tolist()) <= set(range(R + 1, model.deg_h + 2))
