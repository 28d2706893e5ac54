"""Independent checkers shared by the engine and acceptance tests."""

from __future__ import annotations

import numpy as np


def cyclic_distance(a: int, b: int, N: int) -> int:
    d = abs(a - b) % N
    return min(d, N - d)


def literal_marker_scan(N: int, D: int) -> list[int]:
    """Scan 0..N-1 and keep every point at cyclic distance >= D from all kept points."""
    kept: list[int] = []
    for x in range(N):
        if all(cyclic_distance(x, b, N) >= D for b in kept):
            kept.append(x)
    return kept


def runs_along(cycle, members) -> list[list[int]]:
    """Maximal circular runs of consecutive cycle positions whose vertices are members."""
    L = len(cycle)
    inside = [cycle[j] in members for j in range(L)]
    if all(inside):
        return [list(range(L))]
    start = next(j for j in range(L) if not inside[j])
    runs, cur = [], []
    for t in range(1, L + 1):
        j = (start + t) % L
        if inside[j]:
            cur.append(j)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return runs


def cycle_with_runs(rng: np.random.Generator, max_len: int = 60):
    """A random relabelled cycle and a member set whose runs all have length >= 2."""
    while True:
        segs = []
        total = 0
        target = int(rng.integers(3, max_len + 1))
        while total < target:
            a = int(rng.integers(2, 7))
            b = int(rng.integers(1, 6))
            segs.append((a, b))
            total += a + b
        if rng.random() < 0.1:
            segs = [(total, 0)]
        labels = rng.permutation(total * 2)[:total]
        mask = []
        for a, b in segs:
            mask += [True] * a + [False] * b
        shift = int(rng.integers(0, total))
        mask = mask[shift:] + mask[:shift]
        cycle = labels.tolist()
        members = {cycle[j] for j in range(total) if mask[j]}
        if total >= 3:
            return cycle, members


def named_simple_graphs() -> list[tuple[str, int, list[tuple[int, int]]]]:
    out = []
    for n in range(3, 17):
        out.append((f"C{n}", n, [(i, (i + 1) % n) for i in range(n)]))
    for n in range(2, 6):
        out.append((f"K{n}", n, [(a, b) for a in range(n) for b in range(a + 1, n)]))
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    out.append(("Petersen", 10, outer + spokes + inner))
    out.append(("K33", 6, [(a, b) for a in range(3) for b in range(3, 6)]))
    for n in range(4, 9):
        out.append((f"W{n}", n, [(0, i) for i in range(1, n)] + [(i, i % (n - 1) + 1) for i in range(1, n)]))
        out.append((f"Star{n}", n, [(0, i) for i in range(1, n)]))
    out.append(("matching", 8, [(0, 1), (2, 3), (4, 5), (6, 7)]))
    out.append(("K4-e", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]))
    return out


def random_simple_graphs(count: int, seed: int = 0, max_edges: int = 16):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(2, 10))
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        m = int(rng.integers(0, min(max_edges, len(pairs)) + 1))
        chosen = rng.choice(len(pairs), size=m, replace=False) if m else []
        edges = [pairs[i] for i in sorted(chosen, key=lambda i: rng.random())]
        out.append((f"random{len(out)}", n, edges))
    return out
