"""Exhaustive and sampled sweeps of one postulate against one operator."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence, Union

from ..errors import FlavorMismatchError, ScopeError
from ..logic import Signature, formula_from_models, members, popcount
from ..operators import ChangeOperator
from ..orders import Ranks, TotalPreorder, enumerate_rank_tuples, normalize
from .catalog import Postulate, lookup
from .tables import Tables

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"
MAX_EXHAUSTIVE_ATOMS = 2
MAX_SAMPLED_ATOMS = 3
DEFAULT_SAMPLES = 10_000


def worker_count(workers: Optional[int] = None) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get("BELIEF_KERNEL_WORKERS", "1")))
    except ValueError:
        return 1


def as_signature(sig: Union[int, Signature]) -> Signature:
    return Signature.of_size(sig) if isinstance(sig, int) else sig


@dataclass(frozen=True)
class Scope:
    signature_size: int
    mode: str
    seed: Optional[int] = None
    count: Optional[int] = None

    def to_json(self) -> dict:
        out = {"signature_size": self.signature_size, "mode": self.mode}
        if self.mode == SAMPLED:
            out.update(seed=self.seed, count=self.count)
        return out


@dataclass(frozen=True)
class Witness:
    """One violating instance; replayable through :func:`replay`."""

    postulate: str
    operator: str
    state: TotalPreorder
    formulas: tuple[int, ...]
    worlds: Optional[tuple[int, int]] = None

    @property
    def sig(self) -> Signature:
        return self.state.sig

    def formula_text(self, i: int) -> str:
        return str(formula_from_models(self.formulas[i], self.sig))

    def to_json(self) -> dict:
        sig = self.sig
        p = lookup(self.postulate)
        out = {
            "state": self.state.to_json(),
            "formulas": {
                name: {
                    "formula": self.formula_text(i),
                    "models": [sig.world_text(w) for w in members(m)],
                }
                for i, (name, m) in enumerate(zip(p.variables, self.formulas))
            },
        }
        if self.worlds is not None:
            out["worlds"] = [sig.world_text(w) for w in self.worlds]
        return out


@dataclass(frozen=True)
class PostulateVerdict:
    postulate: str
    operator: str
    scope: Scope
    status: str  # "holds" or "fails"
    checks_performed: int
    vacuous: int = 0
    failures: int = 0
    witness: Optional[Witness] = field(default=None, compare=False)

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def to_json(self) -> dict:
        out = {
            "postulate": self.postulate,
            "operator": self.operator,
            "scope": self.scope.to_json(),
            "status": self.status,
            "checks_performed": self.checks_performed,
            "vacuous": self.vacuous,
            "failures": self.failures,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def evaluate(p: Postulate, t: Tables, s: int, formulas: Sequence[int]):
    """Raw body result for one instance: None, True, False or a world pair."""
    return p.body(t, s, *formulas)


def _failed(result) -> bool:
    return result is not True and result is not None


def domains(p: Postulate, sig: Signature) -> list[range]:
    full = sig.full
    return [range(1 if c else 0, full + 1) for c in p.consistent]


def shape_priority(mask: int, full: int) -> tuple:
    """Order formula classes so the proof-style shapes come first.

    Counter-model sets of size two, then one, then singletons and pairs of
    models, then everything else; ties broken by mask value.
    """
    neg = popcount(full & ~mask)
    pos = popcount(mask)
    if neg == 2:
        rank = 0
    elif neg == 1:
        rank = 1
    elif pos == 1:
        rank = 2
    elif pos == 2:
        rank = 3
    else:
        rank = 4
    return (rank, mask)


def _check_flavor(op: ChangeOperator, p: Postulate) -> None:
    if op.flavor != p.flavor:
        raise FlavorMismatchError(f"{p.name} is a {p.flavor} postulate but {op.kind} is a {op.flavor} operator")


def _scope_guard(sig: Signature, mode: str) -> None:
    limit = MAX_EXHAUSTIVE_ATOMS if mode == EXHAUSTIVE else MAX_SAMPLED_ATOMS
    if mode not in (EXHAUSTIVE, SAMPLED):
        raise ScopeError(f"unknown mode {mode!r}")
    if len(sig) > limit:
        raise ScopeError(f"{mode} mode supports at most {limit} atoms, got {len(sig)}")


@dataclass
class _Tally:
    checks: int = 0
    vacuous: int = 0
    failures: int = 0
    first: Optional[tuple] = None  # (ranks, formulas, result)


def _run(op: ChangeOperator, p: Postulate, sig: Signature, instances: Iterable[tuple[Ranks, tuple[int, ...]]], stop_at_first: bool) -> _Tally:
    t = Tables(op, sig)
    tally = _Tally()
    body = p.body
    for ranks, formulas in instances:
        s = t.intern(ranks)
        result = body(t, s, *formulas)
        tally.checks += 1
        if result is None:
            tally.vacuous += 1
        elif result is not True:
            tally.failures += 1
            if tally.first is None:
                tally.first = (ranks, formulas, result)
                if stop_at_first:
                    break
    return tally


def _exhaustive_instances(state_list: Sequence[Ranks], doms: Sequence[Sequence[int]]):
    for ranks in state_list:
        for formulas in product(*doms):
            yield ranks, formulas


def _chunk_job(args):
    op, name, sig, state_list, doms, stop_at_first = args
    p = lookup(name)
    return _run(op, p, sig, _exhaustive_instances(state_list, doms), stop_at_first)


def _sample_job(args):
    op, name, sig, instances, stop_at_first = args
    return _run(op, lookup(name), sig, instances, stop_at_first)


def _split(seq: Sequence, parts: int) -> list[Sequence]:
    parts = max(1, min(parts, len(seq)))
    size, extra = divmod(len(seq), parts)
    out, start = [], 0
    for i in range(parts):
        end = start + size + (1 if i < extra else 0)
        out.append(seq[start:end])
        start = end
    return out


def _merge(tallies: Iterable[_Tally]) -> _Tally:
    total = _Tally()
    for t in tallies:  # in canonical chunk order, so the first witness wins
        total.checks += t.checks
        total.vacuous += t.vacuous
        total.failures += t.failures
        if total.first is None and t.first is not None:
            total.first = t.first
    return total


def sample_instances(p: Postulate, sig: Signature, seed: int, count: int) -> list[tuple[Ranks, tuple[int, ...]]]:
    """Seeded (preorder, formula tuple) draws; ranks are drawn per world then normalized."""
    rng = random.Random(seed)
    n = sig.n_worlds
    full = sig.full
    out = []
    for _ in range(count):
        ranks = normalize([rng.randrange(n) for _ in range(n)])
        formulas = tuple(rng.randint(1 if c else 0, full) for c in p.consistent)
        out.append((ranks, formulas))
    return out


def sweep(
    op: ChangeOperator,
    p: Postulate,
    sig: Signature,
    mode: str = EXHAUSTIVE,
    *,
    seed: int = 0,
    count: int = DEFAULT_SAMPLES,
    workers: Optional[int] = None,
    stop_at_first: bool = False,
    state_list: Optional[Sequence[Ranks]] = None,
    doms: Optional[Sequence[Sequence[int]]] = None,
) -> _Tally:
    workers = worker_count(workers)
    if mode == EXHAUSTIVE:
        if state_list is None:
            state_list = list(enumerate_rank_tuples(sig.n_worlds))
        if doms is None:
            doms = domains(p, sig)
        doms = [list(d) for d in doms]
        if workers == 1:
            return _run(op, p, sig, _exhaustive_instances(state_list, doms), stop_at_first)
        jobs = [(op, p.name, sig, chunk, doms, stop_at_first) for chunk in _split(state_list, workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return _merge(pool.map(_chunk_job, jobs))
    instances = sample_instances(p, sig, seed, count)
    if workers == 1:
        return _run(op, p, sig, instances, stop_at_first)
    jobs = [(op, p.name, sig, chunk, stop_at_first) for chunk in _split(instances, workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return _merge(pool.map(_sample_job, jobs))


def _witness(op: ChangeOperator, p: Postulate, sig: Signature, first) -> Witness:
    ranks, formulas, result = first
    worlds = tuple(result) if isinstance(result, tuple) else None
    return Witness(p.name, op.kind, TotalPreorder(sig, ranks), tuple(formulas), worlds)


def check_postulate(
    op: ChangeOperator,
    postulate: Union[str, Postulate],
    sig: Union[int, Signature] = 2,
    mode: str = EXHAUSTIVE,
    *,
    seed: int = 0,
    count: int = DEFAULT_SAMPLES,
    workers: Optional[int] = None,
) -> PostulateVerdict:
    """Evaluate a postulate on every instance in scope (exhaustive) or a seeded sample."""
    sig = as_signature(sig)
    p = lookup(postulate) if isinstance(postulate, str) else postulate
    _check_flavor(op, p)
    _scope_guard(sig, mode)
    tally = sweep(op, p, sig, mode, seed=seed, count=count, workers=workers)
    scope = Scope(len(sig), mode, seed if mode == SAMPLED else None, count if mode == SAMPLED else None)
    witness = _witness(op, p, sig, tally.first) if tally.first else None
    return PostulateVerdict(
        p.name,
        op.kind,
        scope,
        "fails" if witness else "holds",
        tally.checks,
        tally.vacuous,
        tally.failures,
        witness,
    )


def replay(op: ChangeOperator, witness: Witness):
    """Re-evaluate the witness instance on fresh tables; returns the raw body result."""
    p = lookup(witness.postulate)
    t = Tables(op, witness.sig)
    s = t.intern(witness.state.ranks)
    return evaluate(p, t, s, witness.formulas)


def reproduces(op: ChangeOperator, witness: Witness) -> bool:
    return _failed(replay(op, witness))
