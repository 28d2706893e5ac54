"""(2k+1)-edge coloring of the cyclic multigraph ``y -> y + n_i`` on ``Z/N``.

Each generator slot ``i`` gets its own two colors, and all slots share one
extra color ``2k+1``.  Slot ``i`` may use the shared color only on edges
with both ends in ``A_i``, and the ``A_i`` are disjoint, so merging the
slots is conflict-free.  The ``A_i`` come from a maximal discrete marker set
cut into ``k`` interleaved classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInput, ModelTooSmall, NoAnchor, RunTooShort, TooFewMarkers
from .multigraph import Multigraph

__all__ = [
    "CycleModel",
    "CycleColoring",
    "greedy_discrete_markers",
    "recurrent_partition",
    "three_color_with_sparse",
    "color_H_i",
    "color_cyclic_H",
]


@dataclass(frozen=True)
class CycleModel:
    N: int
    gens: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted(int(n) for n in self.gens))
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise InvalidInput("at least one positive generator is required")
        if gens[0] < 1:
            raise InvalidInput(f"generators must be positive, got {gens}")
        if self.N <= 2 * gens[-1]:
            raise ModelTooSmall(f"N={self.N} must exceed 2*{gens[-1]}", 2 * gens[-1] + 1)

    @property
    def k(self) -> int:
        return len(self.gens)

    @property
    def sparse_color(self) -> int:
        return 2 * self.k + 1

    @property
    def recommended_N(self) -> int:
        return 4 * self.k * self.gens[-1]

    def multigraph(self) -> Multigraph:
        """Slot-major edges: edge ``i*N + y`` joins ``y`` and ``y + n_i``."""
        y = np.arange(self.N, dtype=np.int64)
        u = np.tile(y, self.k)
        v = np.concatenate([(y + n) % self.N for n in self.gens])
        slot = np.repeat(np.arange(self.k, dtype=np.int16), self.N)
        return Multigraph(self.N, u, v, {"slot": slot})


@dataclass(frozen=True, eq=False)
class CycleColoring:
    model: CycleModel
    colors: np.ndarray
    markers: np.ndarray
    # owner[y] is the class i with y in A_i
    owner: np.ndarray

    @property
    def sparse_color(self) -> int:
        return self.model.sparse_color

    @property
    def sparse_edge_count(self) -> int:
        return int(np.count_nonzero(self.colors == self.sparse_color))


def greedy_discrete_markers(N: int, D: int) -> np.ndarray:
    """Maximal set of points of ``Z/N`` at pairwise cyclic distance ``>= D``.

    Scanning ``0, 1, ...`` and keeping every point at distance ``>= D`` from
    the last kept one, while leaving room ``D`` before wrapping to 0, keeps
    exactly the multiples of ``D`` up to ``N - D``.
    """
    if N < 1 or D < 1:
        raise InvalidInput("N and D must be positive")
    if N < 2 * D:
        return np.zeros(1, dtype=np.int64)
    return np.arange(0, N - D + 1, D, dtype=np.int64)


def recurrent_partition(markers: Sequence[int], k: int, N: int, run_floor: int) -> np.ndarray:
    """Owner array: ``y`` belongs to class ``rank(x) mod k`` where ``x`` is the
    last marker at or before ``y`` (cyclically)."""
    b = np.asarray(markers, dtype=np.int64)
    if b.size < k:
        raise TooFewMarkers(int(b.size), k)
    if b.size > 1:
        gaps = np.diff(np.append(b, b[0] + N))
        if gaps.min() < run_floor:
            raise InvalidInput(f"marker gap {int(gaps.min())} is below the run floor {run_floor}")
    else:
        gaps = np.array([N])
    cls = (np.arange(b.size) % k).astype(np.int16)
    owner = np.repeat(cls, gaps)
    # the run from the last marker wraps past 0
    return np.roll(owner, int(b[0]))


def _mask(members, size: int) -> np.ndarray:
    if isinstance(members, np.ndarray) and members.dtype == bool:
        return members
    ids = np.fromiter(members, dtype=np.int64)
    mask = np.zeros(max(size, int(ids.max()) + 1 if ids.size else 0), dtype=bool)
    mask[ids] = True
    return mask


def three_color_with_sparse(
    cycle: Sequence[int] | np.ndarray,
    members: Iterable[int] | np.ndarray,
    palette: tuple[int, int, int] = (1, 2, 3),
) -> np.ndarray:
    """Proper 3-edge coloring of a cycle using ``palette[2]`` only inside ``members``.

    Edge ``j`` joins ``cycle[j]`` and ``cycle[j+1]``.  ``members`` is a set of
    vertex ids or a boolean mask indexed by vertex id.  Anchors are the starts
    of maximal runs of members along the cycle (just ``cycle[0]`` if the whole
    cycle is a run).  Between consecutive anchors the edges alternate
    ``c1, c2, ...``; when the gap is odd its first edge, which lies inside a
    run, takes ``c3`` instead and the alternation restarts after it.
    """
    cyc = np.asarray(cycle, dtype=np.int64)
    L = cyc.size
    if L < 3:
        raise InvalidInput(f"cycle of length {L} is too short")
    c1, c2, c3 = palette
    in_a = _mask(members, int(cyc.max()) + 1)[cyc]
    if not in_a.any():
        raise NoAnchor("the member set does not meet this cycle")
    nxt = np.roll(in_a, -1)
    starts = in_a & ~np.roll(in_a, 1)
    if np.any(starts & ~nxt):
        j = int(np.flatnonzero(starts & ~nxt)[0])
        raise RunTooShort(f"run of length 1 at cycle position {j} (vertex {int(cyc[j])})")
    anchors = np.flatnonzero(starts)
    if anchors.size == 0:
        anchors = np.zeros(1, dtype=np.int64)

    gaps = np.diff(np.append(anchors, anchors[0] + L))
    first = np.repeat(np.cumsum(gaps) - gaps, gaps)
    m = np.arange(L) - first
    odd = np.repeat(gaps % 2 == 1, gaps)
    # odd gaps shift the alternation by one after the c3 edge at m == 0
    phase = (m + odd) % 2
    out = np.where(phase == 0, c1, c2)
    out[odd & (m == 0)] = c3

    colors = np.empty(L, dtype=np.int64)
    colors[(anchors[0] + np.arange(L)) % L] = out
    return colors


def color_H_i(
    model: CycleModel,
    i: int,
    owner_mask: np.ndarray,
    palette: tuple[int, int, int],
) -> np.ndarray:
    """Color slot ``i`` (0-based); entry ``y`` is the color of edge ``(y, y + n_i)``.

    The slot splits into ``gcd(n_i, N)`` cycles, one per residue class.
    """
    N, n = model.N, model.gens[i]
    g = math.gcd(n, N)
    L = N // g
    steps = (np.arange(L, dtype=np.int64) * n) % N
    out = np.zeros(N, dtype=np.int64)
    for r in range(g):
        cyc = (r + steps) % N
        out[cyc] = three_color_with_sparse(cyc, owner_mask, palette)
    return out


def color_cyclic_H(model: CycleModel) -> CycleColoring:
    """Proper coloring of the full slot multigraph with colors ``1..2k+1``.

    Slot ``i`` (0-based) uses ``2i+1, 2i+2`` and the shared ``2k+1``.
    """
    k, N = model.k, model.N
    D = 2 * model.gens[-1]
    markers = greedy_discrete_markers(N, D)
    owner = recurrent_partition(markers, k, N, run_floor=D if markers.size > 1 else 1)
    colors = np.concatenate(
        [
            color_H_i(model, i, owner == i, (2 * i + 1, 2 * i + 2, model.sparse_color))
            for i in range(k)
        ]
    )
    return CycleColoring(model, colors, markers, owner)
