import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import named_simple_graphs, random_simple_graphs
from twoended.errors import ParallelEdges
from twoended.finite_group import named_group
from twoended.marked_group import cayley_graph
from twoended.multigraph import (
    Multigraph,
    brute_force_chromatic_index,
    color_count,
    is_proper,
    max_degree,
)
from twoended.vizing import FanState, kempe_flip, vizing_color


def test_matching_one_color():
    g = Multigraph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    assert vizing_color(g).tolist() == [1, 1, 1]


def test_five_cycle():
    g = Multigraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    cols = vizing_color(g)
    assert is_proper(g, cols)[0]
    assert color_count(cols) == brute_force_chromatic_index(g) == 3


def test_s3_transposition_cayley():
    s3 = named_group("S3")
    transpositions = s3.involutions()
    assert len(transpositions) == 3
    g = cayley_graph(s3, transpositions, [(i, i) for i in range(3)])
    assert g.n_edges == 9 and set(g.degrees().tolist()) == {3}
    cols = vizing_color(g)
    assert is_proper(g, cols)[0]
    assert color_count(cols) <= 4
    assert brute_force_chromatic_index(g) == 3


def test_empty_graph():
    assert vizing_color(Multigraph.from_edges(3, [])).size == 0


def test_parallel_edges_rejected():
    with pytest.raises(ParallelEdges):
        vizing_color(Multigraph.from_edges(2, [(0, 1), (1, 0)]))


def test_deterministic():
    _, n, edges = next(x for x in named_simple_graphs() if x[0] == "Petersen")
    g = Multigraph.from_edges(n, edges)
    assert vizing_color(g).tobytes() == vizing_color(g).tobytes()


@pytest.mark.parametrize("name, n, edges", named_simple_graphs())
def test_named_graphs(name, n, edges):
    g = Multigraph.from_edges(n, edges)
    cols = vizing_color(g, debug=True)
    assert is_proper(g, cols)[0]
    assert cols.max() <= max_degree(g) + 1
    assert color_count(cols) >= brute_force_chromatic_index(g)


def test_random_graphs_debug():
    for _, n, edges in random_simple_graphs(150, seed=7):
        g = Multigraph.from_edges(n, edges)
        if g.n_edges == 0:
            continue
        cols = vizing_color(g, debug=True)
        assert is_proper(g, cols)[0]
        assert cols.max() <= max_degree(g) + 1


def _state_from(n, edges, colors, palette):
    state = FanState(n, edges, palette)
    for e, c in enumerate(colors):
        if c:
            state.paint(e, c)
    return state


def test_kempe_noop():
    state = _state_from(3, [(0, 1), (1, 2)], [1, 2], 3)
    kempe_flip(state, 0, (2, 3))
    assert state.color == [1, 2]


def test_kempe_single_edge():
    state = _state_from(2, [(0, 1)], [1], 2)
    kempe_flip(state, 0, (1, 2))
    assert state.color == [2]


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_kempe_involution(seed):
    rng = np.random.default_rng(seed)
    _, n, edges = random_simple_graphs(1, seed=seed % 10_000)[0]
    if not edges:
        return
    g = Multigraph.from_edges(n, edges)
    full = vizing_color(g)
    # random partial coloring: drop some colors from a proper one
    keep = rng.random(len(edges)) < 0.7
    colors = np.where(keep, full, 0).tolist()
    palette = max_degree(g) + 1
    state = _state_from(n, edges, colors, palette)
    x = int(rng.integers(0, n))
    a, b = rng.choice(np.arange(1, palette + 1), size=2, replace=False) if palette >= 2 else (1, 2)
    kempe_flip(state, x, (int(a), int(b)))
    state.check()
    colored = [e for e in range(len(edges)) if state.color[e]]
    sub = Multigraph.from_edges(n, [edges[e] for e in colored])
    assert is_proper(sub, [state.color[e] for e in colored])[0]
    kempe_flip(state, x, (int(a), int(b)))
    assert state.color == colors
