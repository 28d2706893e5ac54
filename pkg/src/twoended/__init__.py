"""Deterministic (d+1)-edge colorings of Cayley models of two-ended groups."""

from .finite_group import FiniteGroup, Automorphism, make_group, named_group, validate_automorphism
from .marked_group import (
    DINF,
    Z,
    GammaElement,
    MarkedGroupSpec,
    QuotientElement,
    build_quotient_multigraph,
    finite_model,
    gamma_inv,
    gamma_mul,
    partition_generators,
)
from .multigraph import Multigraph, brute_force_chromatic_index, color_count, is_proper, max_degree
from .pipeline import FinalColoring, run

__version__ = "0.1.0"

__all__ = [
    "FiniteGroup",
    "Automorphism",
    "make_group",
    "named_group",
    "validate_automorphism",
    "DINF",
    "Z",
    "GammaElement",
    "MarkedGroupSpec",
    "QuotientElement",
    "build_quotient_multigraph",
    "finite_model",
    "gamma_inv",
    "gamma_mul",
    "partition_generators",
    "Multigraph",
    "brute_force_chromatic_index",
    "color_count",
    "is_proper",
    "max_degree",
    "FinalColoring",
    "run",
]
