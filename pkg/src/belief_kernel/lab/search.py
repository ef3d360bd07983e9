"""Counterexample search.

:func:`find_counterexample` looks for a violation by one operator, trying
singleton-belief states and formulas with one or two counter-models
first, since violations of iteration principles tend to show up there.

:func:`universal_violation` backs claims that *no* contraction satisfies a
postulate.  It fixes a belief set and, for every prior order with those
beliefs, looks for formulas that break the postulate whatever posterior
order the first contraction produces, as long as that posterior is
compatible with the prior.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Optional, Union

from ..logic import Signature, popcount
from ..operators import NaturalContraction
from ..orders import Ranks, bottom, enumerate_rank_tuples, minimal
from .catalog import CONTRACTION, Postulate, lookup
from .engine import (
    EXHAUSTIVE,
    Witness,
    _check_flavor,
    _failed,
    _scope_guard,
    _witness,
    as_signature,
    domains,
    shape_priority,
    sweep,
)
from .tables import Tables


def prioritized_states(sig: Signature) -> list[Ranks]:
    states = list(enumerate_rank_tuples(sig.n_worlds))
    return sorted(states, key=lambda r: popcount(bottom(r)) != 1)


def prioritized_domains(p: Postulate, sig: Signature) -> list[list[int]]:
    full = sig.full
    return [sorted(d, key=lambda m: shape_priority(m, full)) for d in domains(p, sig)]


def find_counterexample(
    op,
    postulate: Union[str, Postulate],
    sig: Union[int, Signature] = 2,
    workers: Optional[int] = None,
) -> Optional[Witness]:
    """First violating instance in priority order, or None if the postulate holds in scope."""
    sig = as_signature(sig)
    p = lookup(postulate) if isinstance(postulate, str) else postulate
    _check_flavor(op, p)
    _scope_guard(sig, EXHAUSTIVE)
    tally = sweep(
        op,
        p,
        sig,
        EXHAUSTIVE,
        workers=workers,
        stop_at_first=True,
        state_list=prioritized_states(sig),
        doms=prioritized_domains(p, sig),
    )
    return _witness(op, p, sig, tally.first) if tally.first else None


class _PinnedContraction(NaturalContraction):
    """Compatible contraction whose result for one (prior, formula) pair is fixed."""

    name = "pinned"

    def __init__(self, prior: Ranks, alpha: int, posterior: Ranks):
        self.prior = prior
        self.alpha = alpha
        self.posterior = posterior

    def change(self, ranks: Ranks, mask: int) -> Ranks:
        if ranks == self.prior and mask == self.alpha:
            return self.posterior
        return super().change(ranks, mask)


@dataclass(frozen=True)
class UniversalWitness:
    """For each prior order with beliefs ``belief_models``, formulas violating the postulate under every compatible posterior."""

    postulate: str
    sig: Signature
    belief_models: int
    cases: tuple[tuple[Ranks, tuple[int, ...]], ...]

    def to_json(self) -> dict:
        from .engine import formula_from_models
        from ..orders import TotalPreorder

        p = lookup(self.postulate)
        return {
            "postulate": self.postulate,
            "beliefs": str(formula_from_models(self.belief_models, self.sig)),
            "cases": [
                {
                    "prior": TotalPreorder(self.sig, r).to_json(),
                    "formulas": {
                        v: str(formula_from_models(m, self.sig)) for v, m in zip(p.variables, f)
                    },
                }
                for r, f in self.cases
            ],
        }


def fails_for_every_posterior(p: Postulate, sig: Signature, prior: Ranks, formulas: tuple[int, ...], posteriors_by_bottom) -> bool:
    a = formulas[0]
    target = bottom(prior) | minimal(prior, sig.full & ~a)
    for post in posteriors_by_bottom[target]:
        op = _PinnedContraction(prior, a, post)
        t = Tables(op, sig)
        if not _failed(p.body(t, t.intern(prior), *formulas)):
            return False
    return True


def universal_violation(postulate: Union[str, Postulate], sig: Union[int, Signature] = 2) -> Optional[UniversalWitness]:
    """Evidence that no contraction compatible with its assignment satisfies ``postulate``."""
    sig = as_signature(sig)
    p = lookup(postulate) if isinstance(postulate, str) else postulate
    if p.flavor != CONTRACTION:
        raise ValueError("universal search is defined for contraction postulates")
    _scope_guard(sig, EXHAUSTIVE)
    by_bottom: dict[int, list[Ranks]] = defaultdict(list)
    for r in enumerate_rank_tuples(sig.n_worlds):
        by_bottom[bottom(r)].append(r)
    doms = prioritized_domains(p, sig)
    for belief in sorted(by_bottom, key=lambda m: (popcount(m) != 1, m)):
        cases = []
        for prior in by_bottom[belief]:
            hit = next(
                (f for f in product(*doms) if fails_for_every_posterior(p, sig, prior, f, by_bottom)),
                None,
            )
            if hit is None:
                break
            cases.append((prior, hit))
        else:
            return UniversalWitness(p.name, sig, belief, tuple(cases))
    return None
