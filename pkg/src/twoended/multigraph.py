"""Multigraph storage, coloring verification and an exact chromatic-index oracle.

A coloring is a plain integer array aligned with edge ids; color 0 marks an
uncolored edge and real colors start at 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInput, PartialColoring, TooLarge, UnknownFormat

__all__ = [
    "Multigraph",
    "is_proper",
    "brute_force_chromatic_index",
    "max_degree",
    "color_count",
    "serialize",
    "load_graph_document",
]


@dataclass(eq=False)
class Multigraph:
    """Undirected loopless multigraph; edge ``e`` joins ``u[e]`` and ``v[e]``."""

    n_vertices: int
    u: np.ndarray
    v: np.ndarray
    labels: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        self.u = np.asarray(self.u, dtype=np.int64).reshape(-1)
        self.v = np.asarray(self.v, dtype=np.int64).reshape(-1)
        if self.u.shape != self.v.shape:
            raise InvalidInput("endpoint arrays differ in length")
        if self.u.size:
            lo = min(self.u.min(), self.v.min())
            hi = max(self.u.max(), self.v.max())
            if lo < 0 or hi >= self.n_vertices:
                raise InvalidInput(f"endpoint out of range 0..{self.n_vertices - 1}")
            loops = np.flatnonzero(self.u == self.v)
            if loops.size:
                raise InvalidInput(f"edge {int(loops[0])} is a loop")
        for name, arr in self.labels.items():
            if len(arr) != self.u.size:
                raise InvalidInput(f"label {name!r} has wrong length")

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Sequence[int]]) -> Multigraph:
        pairs = [(int(a), int(b)) for a, b in edges]
        if not pairs:
            return cls(n_vertices, np.zeros(0, np.int64), np.zeros(0, np.int64))
        u, v = zip(*pairs)
        return cls(n_vertices, np.array(u), np.array(v))

    @property
    def n_edges(self) -> int:
        return int(self.u.size)

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.u.tolist(), self.v.tolist()))

    def degrees(self) -> np.ndarray:
        return np.bincount(self.u, minlength=self.n_vertices) + np.bincount(
            self.v, minlength=self.n_vertices
        )

    def is_simple(self) -> bool:
        if self.n_edges == 0:
            return True
        lo = np.minimum(self.u, self.v)
        hi = np.maximum(self.u, self.v)
        keys = np.sort(lo * self.n_vertices + hi)
        return not bool(np.any(keys[1:] == keys[:-1]))

    def incident(self, x: int) -> np.ndarray:
        return np.flatnonzero((self.u == x) | (self.v == x))


def max_degree(g: Multigraph) -> int:
    if g.n_vertices == 0 or g.n_edges == 0:
        return 0
    return int(g.degrees().max())


def color_count(colors: np.ndarray) -> int:
    """Number of distinct colors (not the largest color index)."""
    colors = np.asarray(colors)
    if colors.size == 0:
        return 0
    return int(np.count_nonzero(np.bincount(colors)))


def _check_total(g: Multigraph, colors) -> np.ndarray:
    colors = np.asarray(colors)
    if colors.shape != (g.n_edges,):
        raise PartialColoring(f"coloring has {colors.size} entries for {g.n_edges} edges")
    if colors.size and colors.min() < 1:
        raise PartialColoring(f"edge {int(np.argmin(colors))} is uncolored")
    return colors


def is_proper(g: Multigraph, colors) -> tuple[bool, tuple[int, int, int] | None]:
    """Return ``(True, None)`` or ``(False, (vertex, e1, e2))``.

    The witness is the smallest offending vertex; ``e1 < e2`` are its two
    smallest-id edges sharing a color.  Each color class is checked to be a
    matching with one ``bincount`` so the check is linear in ``|E|``.
    """
    colors = _check_total(g, colors)
    if colors.size == 0:
        return True, None
    worst: tuple[int, int] | None = None
    for c in np.flatnonzero(np.bincount(colors)):
        sel = colors == c
        hits = np.bincount(g.u[sel], minlength=g.n_vertices)
        hits += np.bincount(g.v[sel], minlength=g.n_vertices)
        bad = np.flatnonzero(hits > 1)
        if bad.size and (worst is None or bad[0] < worst[0]):
            worst = (int(bad[0]), int(c))
    if worst is None:
        return True, None
    x, c = worst
    es = np.flatnonzero(((g.u == x) | (g.v == x)) & (colors == c))
    return False, (x, int(es[0]), int(es[1]))


def brute_force_chromatic_index(g: Multigraph, edge_budget: int = 16) -> int:
    """Exact chromatic index by backtracking.

    Edges are ordered by descending endpoint degree, and a new color name is
    only ever introduced as ``max used + 1`` (colors are interchangeable).
    """
    if g.n_edges > edge_budget:
        raise TooLarge(f"{g.n_edges} edges exceed the oracle budget of {edge_budget}")
    if g.n_edges == 0:
        return 0
    deg = g.degrees()
    edges = g.edges()
    order = sorted(range(len(edges)), key=lambda e: (-(deg[edges[e][0]] + deg[edges[e][1]]), e))
    seq = [edges[e] for e in order]
    lower = max_degree(g)

    def colorable(k: int) -> bool:
        used = [0] * g.n_vertices

        def go(i: int, top: int) -> bool:
            if i == len(seq):
                return True
            a, b = seq[i]
            busy = used[a] | used[b]
            for c in range(min(top + 1, k)):
                bit = 1 << c
                if busy & bit:
                    continue
                used[a] |= bit
                used[b] |= bit
                if go(i + 1, max(top, c + 1)):
                    return True
                used[a] ^= bit
                used[b] ^= bit
            return False

        return go(0, 0)

    k = lower
    while not colorable(k):
        k += 1
    return k


def serialize(g: Multigraph, colors, fmt: str = "json") -> str:
    """DOT or JSON document, ordered by edge id."""
    colors = np.asarray(colors)
    if colors.shape != (g.n_edges,):
        raise PartialColoring("coloring does not match the graph")
    rows = zip(g.u.tolist(), g.v.tolist(), colors.tolist())
    if fmt == "json":
        return json.dumps(
            {"vertices": g.n_vertices, "edges": [[a, b, c] for a, b, c in rows]},
            separators=(",", ":"),
        )
    if fmt == "dot":
        lines = ["graph G {"]
        lines += [f"  {a} -- {b} [color={c}];" for a, b, c in rows]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise UnknownFormat(f"unknown format {fmt!r}; expected 'json' or 'dot'")


def load_graph_document(doc: dict) -> tuple[Multigraph, np.ndarray | None]:
    """Inverse of the JSON serialization; a third column, if present, is a coloring."""
    try:
        n = int(doc["vertices"])
        rows = doc["edges"]
    except (KeyError, TypeError) as exc:
        raise InvalidInput("graph document needs 'vertices' and 'edges'") from exc
    g = Multigraph.from_edges(n, [(r[0], r[1]) for r in rows])
    if rows and all(len(r) >= 3 for r in rows):
        return g, np.array([r[2] for r in rows], dtype=np.int64)
    return g, None
