"""Edge coloring of the quotient multigraph when the quotient is infinite dihedral.

The model is the dihedral group of order ``2M``; orbit ``eps*M + n`` is
``t^n s^eps``.  Every reflection occurrence is a perfect matching and gets a
color of its own.  Translation pairs run the cyclic line engine on each
translation coset, sharing one sparse color.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput, ModelTooSmall
from .line_engine import CycleColoring, CycleModel, color_cyclic_H
from .marked_group import QuotientElement
from .multigraph import Multigraph

__all__ = [
    "DihedralModel",
    "DihedralColoring",
    "color_reflections",
    "color_translation_pairs",
    "color_dihedral_H",
]


@dataclass(frozen=True)
class DihedralModel:
    M: int
    reflections: tuple[int, ...]
    translations: tuple[int, ...]

    def __post_init__(self):
        refl = tuple(int(a) % self.M for a in self.reflections)
        trans = tuple(sorted(int(n) for n in self.translations))
        object.__setattr__(self, "reflections", refl)
        object.__setattr__(self, "translations", trans)
        if not refl and not trans:
            raise InvalidInput("the generator list is empty")
        if trans and trans[0] < 1:
            raise InvalidInput("translation pairs are listed by their positive member")
        if trans and self.M <= 2 * trans[-1]:
            raise ModelTooSmall(f"M={self.M} must exceed 2*{trans[-1]}", 2 * trans[-1] + 1)

    @classmethod
    def from_generators(cls, M: int, gens: list[QuotientElement]) -> DihedralModel:
        """From an inverse-closed multiset of quotient elements."""
        refl = [q.n for q in gens if q.eps]
        pos = sorted(q.n for q in gens if not q.eps and q.n > 0)
        neg = sorted(-q.n for q in gens if not q.eps and q.n < 0)
        if any(q.is_identity for q in gens):
            raise InvalidInput("the identity is not a generator")
        if pos != neg:
            raise InvalidInput("translations are not inverse-closed")
        return cls(M, tuple(refl), tuple(pos))

    @property
    def n_orbits(self) -> int:
        return 2 * self.M

    @property
    def deg_h(self) -> int:
        return len(self.reflections) + 2 * len(self.translations)

    @property
    def sparse_color(self) -> int | None:
        if not self.translations:
            return None
        return len(self.reflections) + 2 * len(self.translations) + 1

    def multigraph(self) -> Multigraph:
        """Reflection matchings listed by coset-0 endpoint, then translation
        pairs listed by source orbit."""
        M = self.M
        ys = np.arange(M, dtype=np.int64)
        yall = np.arange(2 * M, dtype=np.int64)
        eps, j = np.divmod(yall, M)
        us = [ys for _ in self.reflections] + [yall for _ in self.translations]
        vs = [M + (a - ys) % M for a in self.reflections]
        vs += [eps * M + (j + n) % M for n in self.translations]
        if not us:
            return Multigraph(2 * M, np.zeros(0, np.int64), np.zeros(0, np.int64))
        return Multigraph(2 * M, np.concatenate(us), np.concatenate(vs))


@dataclass(frozen=True, eq=False)
class DihedralColoring:
    model: DihedralModel
    colors: np.ndarray
    line: CycleColoring | None

    @property
    def sparse_edge_count(self) -> int:
        if self.model.sparse_color is None:
            return 0
        return int(np.count_nonzero(self.colors == self.model.sparse_color))


def color_reflections(model: DihedralModel) -> np.ndarray:
    """Occurrence ``j`` colors its whole matching with ``j + 1``."""
    M = model.M
    return np.repeat(np.arange(1, len(model.reflections) + 1, dtype=np.int64), M)


def color_translation_pairs(model: DihedralModel) -> tuple[np.ndarray, CycleColoring | None]:
    """Colors ``R+1 .. R+2t+1`` for the translation edges, ``R`` = reflection count.

    Both translation cosets are ``M``-cycles under the unit translation and get
    the same line-engine coloring, traversed in ascending translation power.
    """
    if not model.translations:
        return np.zeros(0, dtype=np.int64), None
    line = color_cyclic_H(CycleModel(model.M, model.translations))
    shift = len(model.reflections)
    per_slot = line.colors.reshape(len(model.translations), model.M) + shift
    return np.tile(per_slot, (1, 2)).reshape(-1), line


def color_dihedral_H(model: DihedralModel) -> DihedralColoring:
    trans, line = color_translation_pairs(model)
    colors = np.concatenate([color_reflections(model), trans])
    return DihedralColoring(model, colors, line)
