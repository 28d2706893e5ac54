"""Exception hierarchy shared by every stage of the coloring pipeline."""

from __future__ import annotations


class TwoEndedError(Exception):
    """Base class. ``stage`` is filled in by :func:`twoended.pipeline.run`."""

    stage: str | None = None

    def __str__(self) -> str:
        msg = super().__str__()
        if self.stage:
            return f"[{self.stage}] {msg}"
        return msg


class InvalidInput(TwoEndedError, ValueError):
    pass


# finite groups
class NotAssociative(InvalidInput):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"(ab)c != a(bc) for a={a}, b={b}, c={c}")
        self.witness = (a, b, c)


class NoIdentity(InvalidInput):
    def __init__(self, element: int):
        super().__init__(f"index 0 is not a two-sided identity (fails at {element})")
        self.witness = element


class NoInverse(InvalidInput):
    def __init__(self, element: int):
        super().__init__(f"element {element} has no two-sided inverse")
        self.witness = element


class UnsupportedKind(InvalidInput):
    pass


class NotBijection(InvalidInput):
    pass


class NotHomomorphism(InvalidInput):
    def __init__(self, a: int, b: int, ab: int):
        super().__init__(f"f({a}*{b}) != f({a})*f({b}) (product index {ab})")
        self.witness = (a, b, ab)


# marked groups and models
class SymmetryViolation(InvalidInput):
    pass


class IdentityGenerator(InvalidInput):
    pass


class TwistNotClosed(InvalidInput):
    pass


class ModelTooSmall(InvalidInput):
    def __init__(self, msg: str, minimal: int):
        super().__init__(f"{msg}; minimal admissible size is {minimal}")
        self.minimal = minimal


class SlotMismatch(TwoEndedError):
    pass


# graphs and colorings
class PartialColoring(InvalidInput):
    pass


class TooLarge(InvalidInput):
    pass


class UnknownFormat(InvalidInput):
    pass


class ParallelEdges(InvalidInput):
    pass


# coloring engines
class TooFewMarkers(TwoEndedError):
    def __init__(self, n_markers: int, k: int):
        super().__init__(
            f"{n_markers} markers cannot be split into {k} recurrent classes; "
            "increase the cycle length"
        )
        self.n_markers = n_markers
        self.k = k


class RunTooShort(InvalidInput):
    pass


class NoAnchor(InvalidInput):
    pass


class NoFreeColor(TwoEndedError, AssertionError):
    """Internal invariant failure: a regular quotient vertex saw every color."""
