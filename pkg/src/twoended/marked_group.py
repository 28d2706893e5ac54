"""Two-ended marked groups ``Δ ⋊ Q`` with ``Q`` the integers or the infinite
dihedral group, their finite Cayley models, and the quotient multigraph on
Δ-orbits.

A group element is ``(delta, q)`` with ``q = (n, eps)`` standing for
``t^n s^eps`` (``t`` the unit translation, ``s`` the reflection).  The
product is ``(d1, q1)(d2, q2) = (d1 * phi(q1)(d2), q1 q2)`` where
``phi(n, eps) = alpha^n ∘ rho^eps``.

Vertex layout of a finite model of size ``N``: the quotient element
``(n, eps)`` (``n`` reduced mod ``N``) is the orbit ``y = eps*N + n`` and the
vertex ``(delta, q)`` has index ``y*|Δ| + delta``, so every Δ-orbit is a
contiguous block.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    IdentityGenerator,
    InvalidInput,
    ModelTooSmall,
    SymmetryViolation,
    TwistNotClosed,
)
from .finite_group import Automorphism, FiniteGroup, validate_automorphism
from .multigraph import Multigraph

__all__ = [
    "Z",
    "DINF",
    "QuotientElement",
    "GammaElement",
    "MarkedGroupSpec",
    "GeneratorPartition",
    "FiniteModel",
    "gamma_mul",
    "gamma_inv",
    "partition_generators",
    "finite_model",
    "build_quotient_multigraph",
    "minimal_model_size",
]

Z = "Z"
DINF = "Dinf"


@dataclass(frozen=True, order=True)
class QuotientElement:
    n: int
    eps: int = 0

    def __mul__(self, other: QuotientElement) -> QuotientElement:
        sign = -1 if self.eps else 1
        return QuotientElement(self.n + sign * other.n, self.eps ^ other.eps)

    def inverse(self) -> QuotientElement:
        return self if self.eps else QuotientElement(-self.n, 0)

    @property
    def is_identity(self) -> bool:
        return self.n == 0 and self.eps == 0

    @property
    def is_reflection(self) -> bool:
        return self.eps == 1


class GammaElement(NamedTuple):
    delta: int
    q: QuotientElement

    @classmethod
    def of(cls, delta: int, n: int, eps: int = 0) -> GammaElement:
        return cls(int(delta), QuotientElement(int(n), int(eps)))

    def as_list(self) -> list[int]:
        return [self.delta, self.q.n, self.q.eps]


IDENTITY_Q = QuotientElement(0, 0)


@dataclass(frozen=True, eq=False)
class MarkedGroupSpec:
    delta: FiniteGroup
    quotient: str
    generators: tuple[GammaElement, ...]
    alpha: Automorphism | None = None
    rho: Automorphism | None = None
    # allows repeated generators, for engine-level experiments only
    multiset: bool = False

    def __post_init__(self):
        m = self.delta.order
        ident = Automorphism(tuple(range(m)))
        if self.quotient not in (Z, DINF):
            raise InvalidInput(f"quotient must be {Z!r} or {DINF!r}, got {self.quotient!r}")
        alpha = ident if self.alpha is None else validate_automorphism(self.delta, self.alpha.perm)
        object.__setattr__(self, "alpha", alpha)
        if self.quotient == Z:
            if self.rho is not None:
                raise InvalidInput("rho is only meaningful for the infinite dihedral quotient")
        else:
            rho = ident if self.rho is None else validate_automorphism(self.delta, self.rho.perm)
            if rho.order > 2:
                raise InvalidInput("rho must be an involution")
            if rho.compose(alpha).compose(rho) != alpha.inverse():
                raise InvalidInput("rho ∘ alpha ∘ rho must equal alpha^-1")
            object.__setattr__(self, "rho", rho)

        gens = tuple(
            g if isinstance(g, GammaElement) else GammaElement.of(*g) for g in self.generators
        )
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if not 0 <= g.delta < m:
                raise InvalidInput(f"generator {g.as_list()} has delta index outside 0..{m - 1}")
            if g.q.eps not in (0, 1) or (self.quotient == Z and g.q.eps):
                raise InvalidInput(f"generator {g.as_list()} has an invalid reflection bit")
            if g.delta == 0 and g.q.is_identity:
                raise IdentityGenerator("the identity cannot be a generator")
        counts = Counter(gens)
        if not self.multiset and len(counts) != len(gens):
            dup = next(g for g, c in counts.items() if c > 1)
            raise InvalidInput(f"generator {dup.as_list()} is repeated")
        for g, c in counts.items():
            gi = gamma_inv(self, g)
            if counts.get(gi, 0) != c:
                raise SymmetryViolation(
                    f"generator {g.as_list()} occurs {c} time(s) but its inverse "
                    f"{gi.as_list()} occurs {counts.get(gi, 0)}"
                )

    @property
    def d(self) -> int:
        return len(self.generators)

    @cached_property
    def _alpha_powers(self) -> list[np.ndarray]:
        out = [np.arange(self.delta.order)]
        a = self.alpha.array
        for _ in range(self.alpha.order - 1):
            out.append(a[out[-1]])
        return out

    def phi(self, q: QuotientElement) -> np.ndarray:
        """The automorphism of Δ by which ``q`` acts, as an index array."""
        pa = self._alpha_powers[q.n % self.alpha.order]
        if q.eps:
            return pa[self.rho.array]
        return pa


def gamma_mul(spec: MarkedGroupSpec, a: GammaElement, b: GammaElement) -> GammaElement:
    return GammaElement(spec.delta.mul(a.delta, int(spec.phi(a.q)[b.delta])), a.q * b.q)


def gamma_inv(spec: MarkedGroupSpec, a: GammaElement) -> GammaElement:
    qi = a.q.inverse()
    return GammaElement(int(spec.phi(qi)[spec.delta.inv(a.delta)]), qi)


@dataclass(frozen=True)
class GeneratorPartition:
    """Generators (as indices into ``spec.generators``) grouped by quotient image."""

    by_image: dict[QuotientElement, tuple[int, ...]]
    d: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def s0(self) -> tuple[int, ...]:
        return self.by_image.get(IDENTITY_Q, ())

    @property
    def d0(self) -> int:
        return len(self.s0)

    @property
    def counts(self) -> dict[int, int]:
        """``n -> d_n`` over translation images."""
        return {q.n: len(v) for q, v in self.by_image.items() if not q.eps}

    @property
    def k(self) -> int:
        return sum(len(v) for q, v in self.by_image.items() if not q.eps and q.n > 0)

    @property
    def reflections(self) -> tuple[int, ...]:
        return tuple(i for q, v in self.by_image.items() if q.eps for i in v)

    @property
    def translations(self) -> tuple[int, ...]:
        return tuple(i for q, v in self.by_image.items() if not q.eps and q.n != 0 for i in v)

    @property
    def deg_h(self) -> int:
        return self.d - self.d0


def partition_generators(spec: MarkedGroupSpec) -> GeneratorPartition:
    gens = spec.generators
    by_image: dict[QuotientElement, list[int]] = {}
    for i, g in enumerate(gens):
        by_image.setdefault(g.q, []).append(i)

    for q, idx in by_image.items():
        mirror = by_image.get(q.inverse(), [])
        inv = Counter(gamma_inv(spec, gens[i]) for i in idx)
        if inv != Counter(gens[j] for j in mirror):
            raise SymmetryViolation(f"generators over {q} are not the inverses of those over {q.inverse()}")

    # pair each occurrence with an occurrence of its inverse; the
    # representative of a translation pair is the member moving forward
    taken = [False] * len(gens)
    pairs = []
    for i, g in enumerate(gens):
        if taken[i]:
            continue
        gi = gamma_inv(spec, g)
        if gi == g:
            taken[i] = True
            pairs.append((i, i))
            continue
        j = next(j for j in range(i + 1, len(gens)) if not taken[j] and gens[j] == gi)
        taken[i] = taken[j] = True
        rep, other = (j, i) if (not g.q.eps and g.q.n < 0) else (i, j)
        pairs.append((rep, other))

    ordered = {q: tuple(by_image[q]) for q in sorted(by_image)}
    return GeneratorPartition(ordered, len(gens), tuple(pairs))


def minimal_model_size(spec: MarkedGroupSpec) -> int:
    span = max((abs(g.q.n) for g in spec.generators), default=0)
    r = spec.alpha.order
    return (2 * span // r + 1) * r


@dataclass(eq=False)
class FiniteModel:
    spec: MarkedGroupSpec
    N: int
    partition: GeneratorPartition
    graph: Multigraph
    # offsets[p]:offsets[p+1] is the edge block of generator pair p
    offsets: np.ndarray
    pair_interior: np.ndarray = field(repr=False)

    @property
    def m(self) -> int:
        return self.spec.delta.order

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return self.partition.pairs

    @property
    def n_orbits(self) -> int:
        return self.N if self.spec.quotient == Z else 2 * self.N

    @property
    def n_vertices(self) -> int:
        return self.n_orbits * self.m

    def orbit_of(self, x):
        return x // self.m

    def orbit_index(self, q: QuotientElement) -> int:
        return q.eps * self.N + q.n % self.N

    def orbit_element(self, y: int) -> QuotientElement:
        return QuotientElement(y % self.N, y // self.N)

    def vertex(self, g: GammaElement) -> int:
        return self.orbit_index(g.q) * self.m + g.delta

    def block(self, p: int) -> slice:
        return slice(int(self.offsets[p]), int(self.offsets[p + 1]))

    def interior_mask(self) -> np.ndarray:
        return self.pair_interior[self.graph.labels["pair"]]

    def act(self, g: GammaElement, x: np.ndarray) -> np.ndarray:
        """Left multiplication ``x -> g x`` on vertex indices."""
        return _act(self.spec, self.N, g, x)


def _act(spec: MarkedGroupSpec, N: int, g: GammaElement, x: np.ndarray) -> np.ndarray:
    m = spec.delta.order
    y, dx = np.divmod(x, m)
    new_delta = spec.delta.table[g.delta][spec.phi(g.q)[dx]]
    if spec.quotient == Z:
        y2 = (y + g.q.n) % N
    else:
        eps, n = np.divmod(y, N)
        n2 = (g.q.n - n if g.q.eps else g.q.n + n) % N
        y2 = (eps ^ g.q.eps) * N + n2
    return y2 * m + new_delta


def finite_model(spec: MarkedGroupSpec, N: int) -> FiniteModel:
    """Cayley graph of ``Δ ⋊ Q_N`` (``Q_N`` = ``Z/N`` or the dihedral group of order 2N)."""
    N = int(N)
    if N < 1:
        raise ModelTooSmall(f"N={N} is not positive", minimal_model_size(spec))
    if N % spec.alpha.order:
        raise TwistNotClosed(f"alpha has order {spec.alpha.order}, which does not divide N={N}")
    minimal = minimal_model_size(spec)
    if N < minimal:
        span = max(abs(g.q.n) for g in spec.generators)
        raise ModelTooSmall(f"N={N} must exceed twice the largest translation {span}", minimal)
    if spec.multiset and len(set(spec.generators)) != spec.d:
        raise InvalidInput("finite models need a duplicate-free generating set")

    part = partition_generators(spec)
    m = spec.delta.order
    n_orbits = N if spec.quotient == Z else 2 * N
    x = np.arange(n_orbits * m, dtype=np.int64)
    us, vs, labels = [], [], []
    interior = []
    for p, (rep, other) in enumerate(part.pairs):
        g = spec.generators[rep]
        target = _act(spec, N, g, x)
        if rep == other:
            keep = x < target
            us.append(x[keep])
            vs.append(target[keep])
        else:
            us.append(x)
            vs.append(target)
        labels.append(np.full(us[-1].size, p, dtype=np.int16))
        interior.append(g.q.is_identity)
    sizes = [a.size for a in us]
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    empty = np.zeros(0, np.int64)
    graph = Multigraph(
        n_orbits * m,
        np.concatenate(us) if us else empty,
        np.concatenate(vs) if vs else empty,
        {"pair": np.concatenate(labels) if labels else np.zeros(0, np.int16)},
    )
    return FiniteModel(spec, N, part, graph, offsets, np.array(interior, dtype=bool))


def _crossing_order(model: FiniteModel) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Crossing pairs split into (reflection occurrences, translation pairs).

    Reflection occurrences are ``(pair, coset of the lifted source)``; an
    involutive generator contributes one occurrence and a non-involutive
    pair two parallel ones.  Translation pairs are ``(pair, n)`` sorted by
    ``n``, stably in pair order.
    """
    gens = model.spec.generators
    refl, trans = [], []
    for p, (rep, other) in enumerate(model.pairs):
        q = gens[rep].q
        if q.is_identity:
            continue
        if q.eps:
            refl.append((p, 0))
            if rep != other:
                refl.append((p, 1))
        else:
            trans.append((p, q.n))
    trans.sort(key=lambda t: (t[1], t[0]))
    return refl, trans


def build_quotient_multigraph(model: FiniteModel) -> Multigraph:
    """The multigraph ``H`` on Δ-orbits with one edge per crossing generator slot.

    Edge order: reflection occurrences first (each a perfect matching listed
    by its coset-0 endpoint), then translation pairs by increasing step, each
    listed by source orbit.  Label ``pair`` names the generator pair and
    ``source`` the orbit whose vertices ``x`` give the lifted edges
    ``(x, rep·x)``.
    """
    N, n_orbits = model.N, model.n_orbits
    gens = model.spec.generators
    refl, trans = _crossing_order(model)
    us, vs, pair, source = [], [], [], []
    ys = np.arange(N, dtype=np.int64)
    for p, coset in refl:
        a = gens[model.pairs[p][0]].q.n
        partner = N + (a - ys) % N
        us.append(ys)
        vs.append(partner)
        source.append(ys if coset == 0 else partner)
        pair.append(np.full(N, p, np.int16))
    yall = np.arange(n_orbits, dtype=np.int64)
    for p, n in trans:
        eps, j = np.divmod(yall, N)
        us.append(yall)
        vs.append(eps * N + (j + n) % N)
        source.append(yall)
        pair.append(np.full(n_orbits, p, np.int16))
    cat = lambda parts, dt: np.concatenate(parts) if parts else np.zeros(0, dt)  # noqa: E731
    return Multigraph(
        n_orbits,
        cat(us, np.int64),
        cat(vs, np.int64),
        {"pair": cat(pair, np.int16), "source": cat(source, np.int64)},
    )


def cayley_graph(group: FiniteGroup, gens: Sequence[int], pairs: Iterable[tuple[int, int]]) -> Multigraph:
    """Left Cayley graph of a finite group, edge blocks laid out like the finite model's."""
    x = np.arange(group.order)
    us, vs = [], []
    for rep, other in pairs:
        t = group.table[gens[rep]][x]
        keep = x < t if rep == other else np.ones_like(x, dtype=bool)
        us.append(x[keep])
        vs.append(t[keep])
    if not us:
        return Multigraph(group.order, np.zeros(0, np.int64), np.zeros(0, np.int64))
    return Multigraph(group.order, np.concatenate(us), np.concatenate(vs))
