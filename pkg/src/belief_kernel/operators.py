"""Iterated contraction and revision strategies on epistemic states.

Every operator works on rank tuples through :meth:`ChangeOperator.change`
and exposes :meth:`ChangeOperator.assignment`, the plausibility order it
associates with a state.  For most strategies that order is the stored one.
Trivial contraction forgets everything above the beliefs, so its order is
the two-level flattening of the stored one; this is the order its belief
map is compatible with.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import InconsistentInputError, ScriptError
from .logic import BeliefSet, Formula, World, as_mask, members, parse_formula
from .orders import (
    EpistemicState,
    Ranks,
    TotalPreorder,
    bottom,
    minimal,
    normalize,
    restack,
)

FormulaLike = Union[str, Formula, int]


class ChangeOperator:
    """Base class; subclasses implement :meth:`change` on rank tuples."""

    name: str = ""
    flavor: str = ""  # "contraction" or "revision"

    @property
    def kind(self) -> str:
        prefix = "contract" if self.flavor == "contraction" else "revise"
        return f"{prefix}-{self.name}"

    def assignment(self, ranks: Ranks) -> Ranks:
        return ranks

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        raise NotImplementedError

    def belief_models(self, ranks: Ranks, mask: int) -> int:
        """Models of the posterior beliefs predicted by the compatibility equation."""
        raise NotImplementedError

    def apply(self, state: EpistemicState, formula: FormulaLike) -> EpistemicState:
        sig = state.sig
        ranks = self.change(state.order.ranks, as_mask(formula, sig))
        return EpistemicState(TotalPreorder(sig, ranks), state.label)

    __call__ = apply

    def order_of(self, state: EpistemicState) -> TotalPreorder:
        return TotalPreorder(state.sig, self.assignment(state.order.ranks))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.kind}>"

    def __reduce__(self):
        return (type(self), ())


class Contraction(ChangeOperator):
    flavor = "contraction"

    def belief_models(self, ranks: Ranks, mask: int) -> int:
        order = self.assignment(ranks)
        full = (1 << len(ranks)) - 1
        return bottom(order) | minimal(order, full & ~mask)


class Revision(ChangeOperator):
    flavor = "revision"

    def belief_models(self, ranks: Ranks, mask: int) -> int:
        if mask == 0:
            raise InconsistentInputError("cannot revise by an inconsistent formula")
        return minimal(self.assignment(ranks), mask)


class NaturalContraction(Contraction):
    """Promote the new belief worlds to the bottom and leave everything else alone."""

    name = "natural"

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        b = self.belief_models(ranks, mask)
        full = (1 << len(ranks)) - 1
        return restack(ranks, [b, full & ~b], flat_first=True)


class ModerateContraction(Contraction):
    """Like natural contraction, but every remaining counter-model of the input
    moves strictly below every remaining model of it."""

    name = "moderate"

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        b = self.belief_models(ranks, mask)
        full = (1 << len(ranks)) - 1
        return restack(ranks, [b, full & ~mask & ~b, mask & ~b], flat_first=True)


class TrivialContraction(Contraction):
    """Keep the beliefs if the input is not believed, otherwise add all its counter-models.

    The output order has two levels, beliefs and the rest.
    """

    name = "trivial"

    def assignment(self, ranks: Ranks) -> Ranks:
        return tuple(0 if r == 0 else 1 for r in ranks)

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        m = self.belief_models(ranks, mask)
        return normalize([0 if m >> w & 1 else 1 for w in range(len(ranks))])


class NaturalRevision(Revision):
    """Move the most plausible input models to the bottom, nothing else changes."""

    name = "natural"

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        b = self.belief_models(ranks, mask)
        full = (1 << len(ranks)) - 1
        return restack(ranks, [b, full & ~b], flat_first=True)


class LexicographicRevision(Revision):
    """Put every input model strictly below every counter-model."""

    name = "lex"

    @property
    def kind(self) -> str:
        return "revise-lexicographic"

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        if mask == 0:
            raise InconsistentInputError("cannot revise by an inconsistent formula")
        full = (1 << len(ranks)) - 1
        return restack(ranks, [mask, full & ~mask])


CONTRACTIONS: dict[str, Contraction] = {
    "natural": NaturalContraction(),
    "moderate": ModerateContraction(),
    "trivial": TrivialContraction(),
}

REVISIONS: dict[str, Revision] = {
    "natural": NaturalRevision(),
    "lex": LexicographicRevision(),
}

ALL_OPERATORS: list[ChangeOperator] = [*CONTRACTIONS.values(), *REVISIONS.values()]


def get_operator(name: str, flavor: Optional[str] = None) -> ChangeOperator:
    """Look up by kind ("contract-moderate") or by short name plus flavor."""
    key = name.lower()
    for op in ALL_OPERATORS:
        if key == op.kind:
            return op
    if key in ("revise-lex", "lexicographic"):
        return REVISIONS["lex"]
    table = REVISIONS if flavor == "revision" else CONTRACTIONS
    if key in table:
        return table[key]
    raise KeyError(f"unknown {flavor or 'contraction'} operator {name!r}")


def _worlds(state: EpistemicState, mask: int) -> frozenset[World]:
    return frozenset(World(state.sig, i) for i in members(mask))


def contracted_belief_models(state: EpistemicState, alpha: FormulaLike) -> frozenset[World]:
    """``Mod(Psi) | min(Mod(not alpha))`` over the state's stored order."""
    sig = state.sig
    mask = sig.full & ~as_mask(alpha, sig)
    ranks = state.order.ranks
    return _worlds(state, bottom(ranks) | minimal(ranks, mask))


def revised_belief_models(state: EpistemicState, alpha: FormulaLike) -> frozenset[World]:
    mask = as_mask(alpha, state.sig)
    if mask == 0:
        raise InconsistentInputError("cannot revise by an inconsistent formula")
    return _worlds(state, minimal(state.order.ranks, mask))


def contract_natural(state: EpistemicState, alpha: FormulaLike) -> EpistemicState:
    return CONTRACTIONS["natural"].apply(state, alpha)


def contract_moderate(state: EpistemicState, alpha: FormulaLike) -> EpistemicState:
    return CONTRACTIONS["moderate"].apply(state, alpha)


def contract_trivial(state: EpistemicState, alpha: FormulaLike) -> EpistemicState:
    return CONTRACTIONS["trivial"].apply(state, alpha)


def revise_natural(state: EpistemicState, alpha: FormulaLike) -> EpistemicState:
    return REVISIONS["natural"].apply(state, alpha)


def revise_lexicographic(state: EpistemicState, alpha: FormulaLike) -> EpistemicState:
    return REVISIONS["lex"].apply(state, alpha)


@dataclass(frozen=True)
class TraceStep:
    index: int
    verb: str
    formula: Formula
    state: EpistemicState

    @property
    def beliefs(self) -> BeliefSet:
        return self.state.beliefs


@dataclass(frozen=True)
class Trace:
    initial: EpistemicState
    steps: tuple[TraceStep, ...]

    @property
    def states(self) -> list[EpistemicState]:
        return [self.initial, *(s.state for s in self.steps)]

    @property
    def belief_sets(self) -> list[BeliefSet]:
        return [s.beliefs for s in self.states]

    @property
    def final(self) -> EpistemicState:
        return self.states[-1]


def apply_script(
    state: EpistemicState,
    script: Iterable[tuple[str, FormulaLike]],
    contraction: Union[str, ChangeOperator] = "natural",
    revision: Union[str, ChangeOperator] = "natural",
) -> Trace:
    """Apply ``(verb, formula)`` steps in order; errors carry the 1-based step index."""
    ops = {
        "contract": contraction if isinstance(contraction, ChangeOperator) else get_operator(contraction, "contraction"),
        "revise": revision if isinstance(revision, ChangeOperator) else get_operator(revision, "revision"),
    }
    steps: list[TraceStep] = []
    current = state
    for i, (verb, formula) in enumerate(script, start=1):
        try:
            if verb not in ops:
                raise ValueError(f"unknown verb {verb!r}")
            phi = formula if isinstance(formula, Formula) else (
                parse_formula(formula, state.sig) if isinstance(formula, str) else None
            )
            if phi is None:
                raise TypeError("script formulas must be text or Formula objects")
            current = ops[verb].apply(current, phi)
        except Exception as exc:
            raise ScriptError(i, exc) from exc
        steps.append(TraceStep(i, verb, phi, current))
    return Trace(state, tuple(steps))

