"""Deliberately broken operators, used to show the checkers catch real defects."""

from __future__ import annotations

from ..operators import ModerateContraction, NaturalContraction, TrivialContraction
from ..orders import Ranks, bottom, minimal, restack
from .tables import members_of


class DroppedBeliefsContraction(NaturalContraction):
    """Forgets to keep the old belief worlds when contracting."""

    name = "drop-beliefs"

    def belief_models(self, ranks: Ranks, mask: int) -> int:
        full = (1 << len(ranks)) - 1
        return minimal(ranks, full & ~mask) or bottom(ranks)


def _swap_extremes(ranks: Ranks, pool: int) -> Ranks:
    """Swap the ranks of the lowest and highest world in ``pool`` if they differ."""
    ws = members_of(pool)
    if not ws:
        return ranks
    lo = min(ws, key=lambda w: (ranks[w], w))
    hi = max(ws, key=lambda w: (ranks[w], -w))
    if ranks[lo] == ranks[hi]:
        return ranks
    out = list(ranks)
    out[lo], out[hi] = out[hi], out[lo]
    return tuple(out)


class SwappedModelsContraction(ModerateContraction):
    """Moderate contraction that inverts two models of the input above the beliefs."""

    name = "swap-models"

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        out = super().change(ranks, mask)
        return _swap_extremes(out, mask & ~bottom(out))


class SwappedCountermodelsContraction(ModerateContraction):
    """Moderate contraction that inverts two counter-models of the input above the beliefs."""

    name = "swap-countermodels"

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        out = super().change(ranks, mask)
        full = (1 << len(ranks)) - 1
        return _swap_extremes(out, full & ~mask & ~bottom(out))


class UnseparatedModerateContraction(ModerateContraction):
    """Moderate contraction without lifting counter-models above models."""

    name = "unseparated-moderate"

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        b = self.belief_models(ranks, mask)
        full = (1 << len(ranks)) - 1
        return restack(ranks, [b, full & ~b], flat_first=True)


class UnflattenedTrivialContraction(TrivialContraction):
    """Trivial belief map that keeps the old order above the beliefs instead of flattening."""

    name = "unflattened-trivial"

    def assignment(self, ranks: Ranks) -> Ranks:
        return ranks

    def belief_models(self, ranks: Ranks, mask: int) -> int:
        full = (1 << len(ranks)) - 1
        b = bottom(ranks)
        return b if b & ~mask else b | (full & ~mask)

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        b = self.belief_models(ranks, mask)
        full = (1 << len(ranks)) - 1
        return restack(ranks, [b, full & ~b], flat_first=True)


MUTANTS = {
    "drop-beliefs": DroppedBeliefsContraction(),
    "swap-models": SwappedModelsContraction(),
    "swap-countermodels": SwappedCountermodelsContraction(),
    "unseparated-moderate": UnseparatedModerateContraction(),
    "unflattened-trivial": UnflattenedTrivialContraction(),
}
