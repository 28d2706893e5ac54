"""Finite groups given by multiplication tables, and their automorphisms.

Elements are the indices ``0..m-1``; index 0 is always the identity.  The
named constructors fix an element enumeration so that every downstream
coloring is reproducible:

* ``cyclic m``: ``i`` is the residue ``i mod m``.
* ``dihedral m`` (order ``2m``): ``a + m*b`` is ``r^a s^b``.
* ``symmetric-3``: permutations of ``(0, 1, 2)`` in lexicographic order,
  composed as functions, ``(p*q)(i) = p[q[i]]``.
* ``product(A, B)``: ``a*|B| + b`` is the pair ``(a, b)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotBijection,
    NotHomomorphism,
    UnsupportedKind,
    InvalidInput,
)

__all__ = [
    "FiniteGroup",
    "Automorphism",
    "make_group",
    "named_group",
    "parse_group",
    "validate_automorphism",
    "inversion_map",
    "conjugation",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    inverse: np.ndarray
    name: str = ""

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def involutions(self) -> list[int]:
        return [a for a in range(1, self.order) if self.inverse[a] == a]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or 'table'}, order={self.order})"


def make_group(table: Sequence[Sequence[int]] | np.ndarray, name: str = "") -> FiniteGroup:
    """Validate a multiplication table exhaustively and wrap it."""
    try:
        t = np.asarray(table, dtype=np.int64)
    except ValueError as exc:
        raise InvalidInput("multiplication table is ragged") from exc
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise InvalidInput(f"multiplication table must be square and nonempty, got shape {t.shape}")
    m = t.shape[0]
    if t.min() < 0 or t.max() >= m:
        raise InvalidInput(f"table entries must lie in 0..{m - 1}")

    idx = np.arange(m)
    bad = np.flatnonzero((t[0] != idx) | (t[:, 0] != idx))
    if bad.size:
        raise NoIdentity(int(bad[0]))

    # (ab)c vs a(bc) over all triples
    left = t[t]
    right = t[idx[:, None, None], t[None, :, :]]
    mismatch = np.argwhere(left != right)
    if mismatch.size:
        a, b, c = (int(v) for v in mismatch[0])
        raise NotAssociative(a, b, c)

    inverse = np.empty(m, dtype=np.int64)
    for a in range(m):
        cands = np.flatnonzero((t[a] == 0) & (t[:, a] == 0))
        if cands.size == 0:
            raise NoInverse(a)
        inverse[a] = cands[0]
    return FiniteGroup(_frozen(t), _frozen(inverse), name)


def _cyclic(m: int) -> np.ndarray:
    i = np.arange(m)
    return (i[:, None] + i[None, :]) % m


def _dihedral(m: int) -> np.ndarray:
    n = 2 * m
    t = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        a, b = x % m, x // m
        for y in range(n):
            c, e = y % m, y // m
            rot = (a + (c if b == 0 else -c)) % m
            t[x, y] = rot + m * ((b + e) % 2)
    return t


def _symmetric3() -> np.ndarray:
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    t = np.empty((6, 6), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            t[i, j] = index[tuple(p[q[x]] for x in range(3))]
    return t


def _product(g: FiniteGroup, h: FiniteGroup) -> np.ndarray:
    mg, mh = g.order, h.order
    a = np.arange(mg * mh)
    ga, ha = a // mh, a % mh
    return g.table[ga[:, None], ga[None, :]] * mh + h.table[ha[:, None], ha[None, :]]


def named_group(kind: str, *args) -> FiniteGroup:
    """Build ``cyclic m``, ``dihedral m``, ``symmetric-3`` or ``product G H``."""
    if kind == "trivial":
        return make_group([[0]], "trivial")
    if kind == "cyclic":
        (m,) = args
        if m < 1:
            raise InvalidInput("cyclic order must be positive")
        return make_group(_cyclic(m), f"cyclic:{m}")
    if kind == "dihedral":
        (m,) = args
        if m < 1:
            raise InvalidInput("dihedral parameter must be positive")
        return make_group(_dihedral(m), f"dihedral:{m}")
    if kind in ("symmetric-3", "S3"):
        return make_group(_symmetric3(), "S3")
    if kind == "product":
        g, h = args
        return make_group(_product(g, h), f"{g.name or 'G'} x {h.name or 'H'}")
    raise UnsupportedKind(f"unknown group kind {kind!r}")


def parse_group(key: str) -> FiniteGroup:
    """Parse CLI group keys: ``trivial``, ``cyclic:3``, ``dihedral:4``, ``S3``,
    and products such as ``cyclic:2 x cyclic:2``."""
    parts = [p.strip() for p in key.split(" x ")]
    if len(parts) > 1:
        g = parse_group(parts[0])
        for p in parts[1:]:
            g = named_group("product", g, parse_group(p))
        return g
    kind, _, arg = key.strip().partition(":")
    if arg:
        try:
            return named_group(kind, int(arg))
        except ValueError as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise UnsupportedKind(f"bad group key {key!r}") from exc
    return named_group(kind)


@dataclass(frozen=True)
class Automorphism:
    perm: tuple[int, ...]

    def __call__(self, x):
        return np.asarray(self.perm)[x] if isinstance(x, np.ndarray) else self.perm[x]

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.perm, dtype=np.int64)

    def compose(self, other: Automorphism) -> Automorphism:
        """``self ∘ other``."""
        return Automorphism(tuple(self.perm[i] for i in other.perm))

    def inverse(self) -> Automorphism:
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return Automorphism(tuple(inv))

    def power(self, r: int) -> Automorphism:
        r %= self.order
        out = Automorphism(tuple(range(len(self.perm))))
        for _ in range(r):
            out = self.compose(out)
        return out

    @cached_property
    def order(self) -> int:
        ident = tuple(range(len(self.perm)))
        cur, r = self.perm, 1
        while cur != ident:
            cur = tuple(self.perm[i] for i in cur)
            r += 1
        return r

    def is_identity(self) -> bool:
        return self.order == 1


def validate_automorphism(g: FiniteGroup, perm: Sequence[int]) -> Automorphism:
    m = g.order
    p = [int(x) for x in perm]
    if len(p) != m or sorted(p) != list(range(m)):
        raise NotBijection(f"{p} is not a permutation of 0..{m - 1}")
    arr = np.asarray(p)
    # f(ab) == f(a) f(b) for all a, b
    bad = np.argwhere(arr[g.table] != g.table[arr[:, None], arr[None, :]])
    if bad.size:
        a, b = (int(v) for v in bad[0])
        raise NotHomomorphism(a, b, g.mul(a, b))
    return Automorphism(tuple(p))


def inversion_map(g: FiniteGroup) -> Automorphism:
    """``x -> x^-1``; an automorphism exactly when ``g`` is abelian."""
    return validate_automorphism(g, g.inverse.tolist())


def conjugation(g: FiniteGroup, h: int) -> Automorphism:
    """Inner automorphism ``x -> h x h^-1``."""
    hi = g.inv(h)
    return Automorphism(tuple(int(g.table[g.table[h, x], hi]) for x in range(g.order)))
