"""Misra–Gries edge coloring of simple graphs with at most ``Δ + 1`` colors."""

from __future__ import annotations

import numpy as np

from .errors import ParallelEdges
from .multigraph import Multigraph

__all__ = ["FanState", "kempe_flip", "vizing_color"]


class FanState:
    """Partial proper coloring with per-vertex ``color -> edge`` indices."""

    def __init__(self, n_vertices: int, edges: list[tuple[int, int]], n_colors: int):
        self.edges = edges
        self.n_colors = n_colors
        self.color = [0] * len(edges)
        self.at: list[dict[int, int]] = [{} for _ in range(n_vertices)]
        self.edge_between: dict[tuple[int, int], int] = {}
        for e, (a, b) in enumerate(edges):
            self.edge_between[(a, b)] = e
            self.edge_between[(b, a)] = e

    def other(self, e: int, x: int) -> int:
        a, b = self.edges[e]
        return b if a == x else a

    def is_free(self, x: int, c: int) -> bool:
        return c not in self.at[x]

    def free_colors(self, x: int) -> list[int]:
        return [c for c in range(1, self.n_colors + 1) if c not in self.at[x]]

    def first_free(self, x: int) -> int:
        for c in range(1, self.n_colors + 1):
            if c not in self.at[x]:
                return c
        raise AssertionError(f"vertex {x} has no free color")

    def uncolor(self, e: int) -> None:
        c = self.color[e]
        if c:
            a, b = self.edges[e]
            del self.at[a][c]
            del self.at[b][c]
            self.color[e] = 0

    def paint(self, e: int, c: int) -> None:
        self.uncolor(e)
        a, b = self.edges[e]
        assert c not in self.at[a] and c not in self.at[b], (e, c)
        self.at[a][c] = e
        self.at[b][c] = e
        self.color[e] = c

    def check(self) -> None:
        for x, slots in enumerate(self.at):
            for c, e in slots.items():
                assert self.color[e] == c and x in self.edges[e]


def kempe_flip(state: FanState, vertex: int, colors: tuple[int, int]) -> FanState:
    """Swap the two colors on the maximal alternating path or cycle through ``vertex``."""
    a, b = colors
    seen: set[int] = set()
    stack = [vertex]
    visited = {vertex}
    while stack:
        x = stack.pop()
        for c in (a, b):
            e = state.at[x].get(c)
            if e is None or e in seen:
                continue
            seen.add(e)
            w = state.other(e, x)
            if w not in visited:
                visited.add(w)
                stack.append(w)
    chain = sorted(seen)
    swapped = [(e, b if state.color[e] == a else a) for e in chain]
    for e in chain:
        state.uncolor(e)
    for e, c in swapped:
        state.paint(e, c)
    return state


def _color_edge(state: FanState, e0: int) -> None:
    x, f0 = state.edges[e0]
    fan = [f0]
    in_fan = {f0}
    while True:
        last = fan[-1]
        nxt = None
        for c in state.free_colors(last):
            e = state.at[x].get(c)
            if e is not None:
                w = state.other(e, x)
                if w not in in_fan:
                    nxt = w
                    break
        if nxt is None:
            break
        fan.append(nxt)
        in_fan.add(nxt)

    c = state.first_free(x)
    d = state.first_free(fan[-1])
    if c != d:
        kempe_flip(state, x, (c, d))

    # longest prefix that is still a fan, stopping at the first leaf missing d
    stop = None
    for i, w in enumerate(fan):
        if i > 0:
            prev_edge_color = state.color[state.edge_between[(x, w)]]
            if not prev_edge_color or not state.is_free(fan[i - 1], prev_edge_color):
                break
        if state.is_free(w, d):
            stop = i
            break
    if stop is None:
        raise AssertionError(f"no rotatable fan prefix for edge {e0}")

    for j in range(stop):
        src = state.edge_between[(x, fan[j + 1])]
        c_next = state.color[src]
        state.uncolor(src)
        state.paint(state.edge_between[(x, fan[j])], c_next)
    state.paint(state.edge_between[(x, fan[stop])], d)


def vizing_color(g: Multigraph, debug: bool = False) -> np.ndarray:
    """Proper coloring with colors ``1..Δ+1``, edges inserted in id order."""
    if not g.is_simple():
        raise ParallelEdges("Vizing coloring needs a simple graph")
    if g.n_edges == 0:
        return np.zeros(0, dtype=np.int64)
    deg = int(g.degrees().max())
    state = FanState(g.n_vertices, g.edges(), deg + 1)
    for e in range(g.n_edges):
        _color_edge(state, e)
        if debug:
            state.check()
    return np.array(state.color, dtype=np.int64)
