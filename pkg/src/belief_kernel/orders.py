"""Total preorders on worlds and epistemic states built from them.

A preorder is stored as a tuple of dense ranks indexed by world number;
lower rank means more plausible.  The functions at the top of the module
work on bare rank tuples and bitmasks so the operators and the postulate
lab can use them in tight loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import InconsistentInputError, PreorderFormatError, ScopeError
from .logic import BeliefSet, Formula, Signature, World, as_mask, members

MAX_ENUM_WORLDS = 8

Ranks = tuple[int, ...]


def normalize(ranks: Sequence[int]) -> Ranks:
    """Map ranks onto ``0..k`` without gaps, keeping their order."""
    dense = {r: i for i, r in enumerate(sorted(set(ranks)))}
    return tuple(dense[r] for r in ranks)


def minimal(ranks: Ranks, mask: int) -> int:
    """Mask of the lowest-ranked worlds inside ``mask`` (0 for the empty set)."""
    best = None
    out = 0
    for w in members(mask):
        r = ranks[w]
        if best is None or r < best:
            best, out = r, 1 << w
        elif r == best:
            out |= 1 << w
    return out


def bottom(ranks: Ranks) -> int:
    return sum(1 << w for w, r in enumerate(ranks) if r == 0)


def restack(ranks: Ranks, blocks: Sequence[int], flat_first: bool = False) -> Ranks:
    """Stack world blocks on top of each other, each keeping its old internal order.

    ``blocks`` must partition the world-space; empty blocks are skipped.
    With ``flat_first`` the first block becomes a single level.
    """
    out = [0] * len(ranks)
    offset = 0
    for i, block in enumerate(blocks):
        ws = list(members(block))
        if not ws:
            continue
        if flat_first and i == 0:
            local = [0] * len(ws)
        else:
            local = normalize([ranks[w] for w in ws])
        for w, r in zip(ws, local):
            out[w] = offset + r
        offset += max(local) + 1
    return tuple(out)


@dataclass(frozen=True)
class TotalPreorder:
    """Normalized rank map over the world-space of ``sig``."""

    sig: Signature
    ranks: Ranks

    def __post_init__(self):
        ranks = tuple(self.ranks)
        if len(ranks) != self.sig.n_worlds:
            raise PreorderFormatError(
                f"expected {self.sig.n_worlds} ranks, got {len(ranks)}"
            )
        if normalize(ranks) != ranks:
            raise PreorderFormatError(f"ranks {ranks} are not normalized")
        object.__setattr__(self, "ranks", ranks)

    @classmethod
    def from_ranks(cls, sig: Signature, ranks: Sequence[int]) -> "TotalPreorder":
        if any(r < 0 for r in ranks):
            raise PreorderFormatError("ranks must be non-negative")
        return cls(sig, normalize(ranks))

    @classmethod
    def from_levels(cls, sig: Signature, levels: Sequence[Union[int, Iterable[World]]]) -> "TotalPreorder":
        """Build from a list of world sets, most plausible first."""
        ranks = [-1] * sig.n_worlds
        for k, level in enumerate(levels):
            for w in members(sig.mask_of(level)):
                if ranks[w] != -1:
                    raise PreorderFormatError(f"world {sig.world_text(w)} listed twice")
                ranks[w] = k
        if -1 in ranks:
            raise PreorderFormatError("levels do not cover every world")
        return cls.from_ranks(sig, ranks)

    @classmethod
    def flat(cls, sig: Signature) -> "TotalPreorder":
        return cls(sig, (0,) * sig.n_worlds)

    @property
    def height(self) -> int:
        return max(self.ranks) + 1

    @property
    def levels(self) -> list[int]:
        out = [0] * self.height
        for w, r in enumerate(self.ranks):
            out[r] |= 1 << w
        return out

    @property
    def bottom(self) -> int:
        return bottom(self.ranks)

    def rank(self, w: Union[World, int]) -> int:
        return self.ranks[w if isinstance(w, int) else w.index]

    def le(self, w1: Union[World, int], w2: Union[World, int]) -> bool:
        return self.rank(w1) <= self.rank(w2)

    def lt(self, w1: Union[World, int], w2: Union[World, int]) -> bool:
        return self.rank(w1) < self.rank(w2)

    def minimal(self, mask: int) -> int:
        return minimal(self.ranks, mask)

    def to_json(self) -> dict:
        return {
            "signature": list(self.sig.atoms),
            "ranks": {self.sig.world_text(w): r for w, r in enumerate(self.ranks)},
        }

    @classmethod
    def from_json(cls, data: dict, sig: Optional[Signature] = None) -> "TotalPreorder":
        try:
            declared = Signature(data["signature"]) if "signature" in data else sig
            ranks_in = data["ranks"]
        except (KeyError, TypeError, ValueError) as exc:
            raise PreorderFormatError(f"malformed preorder: {exc}") from None
        if declared is None:
            raise PreorderFormatError("preorder has no signature")
        if sig is not None and declared != sig:
            raise PreorderFormatError("preorder signature differs from the scenario signature")
        if not isinstance(ranks_in, dict):
            raise PreorderFormatError("'ranks' must be an object")
        ranks = [None] * declared.n_worlds
        for text, r in ranks_in.items():
            w = declared.world(text).index
            if ranks[w] is not None:
                raise PreorderFormatError(f"world {text!r} given twice")
            if not isinstance(r, int) or isinstance(r, bool) or r < 0:
                raise PreorderFormatError(f"rank of {text!r} must be a non-negative integer")
            ranks[w] = r
        missing = [declared.world_text(w) for w, r in enumerate(ranks) if r is None]
        if missing:
            raise PreorderFormatError(f"missing worlds: {', '.join(missing)}")
        return cls.from_ranks(declared, ranks)

    def __str__(self) -> str:
        parts = []
        for k, level in enumerate(self.levels):
            names = ", ".join(self.sig.world_text(w) for w in members(level))
            parts.append(f"{k}: {{{names}}}")
        return "; ".join(parts)


@dataclass(frozen=True)
class EpistemicState:
    """A state is its plausibility order; the label is bookkeeping only."""

    order: TotalPreorder
    label: Optional[str] = field(default=None, compare=False)

    @property
    def sig(self) -> Signature:
        return self.order.sig

    @property
    def beliefs(self) -> BeliefSet:
        return BeliefSet(self.sig, self.order.bottom)


def min_worlds(ws: Union[int, Iterable[World]], r: TotalPreorder) -> frozenset[World]:
    mask = r.sig.mask_of(ws)
    return frozenset(World(r.sig, i) for i in members(r.minimal(mask)))


def _least_rank(r: TotalPreorder, mask: int) -> Optional[int]:
    return min((r.ranks[w] for w in members(mask)), default=None)


def formula_precedes(r: TotalPreorder, phi, psi, strict: bool = False) -> bool:
    """Lifted comparison: every minimal psi-world is matched by a (strictly) lower phi-world."""
    sig = r.sig
    lo_phi = _least_rank(r, as_mask(phi, sig))
    for w in members(r.minimal(as_mask(psi, sig))):
        if lo_phi is None:
            return False
        if lo_phi > r.ranks[w] or (strict and lo_phi == r.ranks[w]):
            return False
    return True


def formula_strictly_precedes(r: TotalPreorder, phi, psi) -> bool:
    return formula_precedes(r, phi, psi, strict=True)


def _dominated(r: TotalPreorder, losers: int, winners: int) -> bool:
    """Every world in ``losers`` has some strictly lower world in ``winners``."""
    for w1 in members(losers):
        if not any(r.ranks[w2] < r.ranks[w1] for w2 in members(winners)):
            return False
    return True


def preorder_accepts_conditional(r: TotalPreorder, antecedent, consequent) -> bool:
    """Revision-style acceptance of ``(consequent | antecedent)``."""
    sig = r.sig
    a, b = as_mask(antecedent, sig), as_mask(consequent, sig)
    return _dominated(r, a & ~b, a & b)


def preorder_accepts_contractional(r: TotalPreorder, removed, retained) -> bool:
    """Contraction-style acceptance of ``(retained -: removed)``."""
    sig = r.sig
    a, b = as_mask(removed, sig), as_mask(retained, sig)
    not_a = sig.full & ~a
    return r.bottom & ~b == 0 and _dominated(r, not_a & ~b, not_a & b)


def _ordered_partitions(mask: int) -> Iterator[list[int]]:
    if mask == 0:
        yield []
        return
    sub = mask
    # walk the non-empty submasks of ``mask`` in increasing order
    subs = []
    while sub:
        subs.append(sub)
        sub = (sub - 1) & mask
    for first in reversed(subs):
        for rest in _ordered_partitions(mask & ~first):
            yield [first, *rest]


def enumerate_rank_tuples(n_worlds: int) -> Iterator[Ranks]:
    if n_worlds > MAX_ENUM_WORLDS:
        raise ScopeError(f"enumeration is limited to {MAX_ENUM_WORLDS} worlds")
    for levels in _ordered_partitions((1 << n_worlds) - 1):
        ranks = [0] * n_worlds
        for k, level in enumerate(levels):
            for w in members(level):
                ranks[w] = k
        yield tuple(ranks)


def enumerate_preorders(sig: Signature) -> Iterator[TotalPreorder]:
    """Every weak order on the world-space exactly once, in a fixed order."""
    for ranks in enumerate_rank_tuples(sig.n_worlds):
        yield TotalPreorder(sig, ranks)


def beliefs(state: EpistemicState) -> BeliefSet:
    return state.beliefs


def state_for_belief_set(belief_set: BeliefSet, label: Optional[str] = None) -> EpistemicState:
    """Two-level state: the models at rank 0, every other world at rank 1."""
    if not belief_set.consistent:
        raise InconsistentInputError("an epistemic state needs a consistent belief set")
    sig = belief_set.sig
    ranks = [0 if belief_set.mask >> w & 1 else 1 for w in range(sig.n_worlds)]
    return EpistemicState(TotalPreorder.from_ranks(sig, ranks), label)


def state_from_formula(text: Union[str, Formula], sig: Signature, label: Optional[str] = None) -> EpistemicState:
    return state_for_belief_set(BeliefSet(sig, as_mask(text, sig)), label)
