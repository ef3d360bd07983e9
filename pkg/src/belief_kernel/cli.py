"""Command-line front-end.

Exit codes: 0 success or postulate holds, 1 postulate or theorem failure,
2 usage or input error, 3 inconsistent input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .conditionals import RAMSEY, parse_conditional, state_accepts
from .errors import BeliefKernelError, InconsistentInputError, ScriptError
from .logic import BeliefSet, Signature, formula_from_models, members, parse_formula
from .operators import CONTRACTIONS, REVISIONS, ChangeOperator, get_operator
from .orders import EpistemicState, TotalPreorder, enumerate_rank_tuples, state_for_belief_set
from .lab import (
    CATALOG,
    EXHAUSTIVE,
    SAMPLED,
    THEOREMS,
    check_postulate,
    equivalence_matrix,
    find_counterexample,
    lookup,
    matrix_markdown,
    universal_violation,
    verify_characterization,
)
from .lab.engine import DEFAULT_SAMPLES

OK, FAILED, USAGE, INCONSISTENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(data, out: Optional[str] = None) -> None:
    text = json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve(name: str, flavor: str) -> ChangeOperator:
    try:
        op = get_operator(name, flavor)
    except KeyError:
        names = CONTRACTIONS if flavor == "contraction" else REVISIONS
        raise UsageError(f"unknown {flavor} operator {name!r}; choose from {', '.join(names)}") from None
    if op.flavor != flavor:
        raise UsageError(f"{op.kind} is not a {flavor} operator")
    return op


def _belief_json(b: BeliefSet) -> dict:
    return {
        "formula": str(formula_from_models(b.mask, b.sig)),
        "models": [b.sig.world_text(w) for w in members(b.mask)],
    }


# ------------------------------------------------------------------ eval


def load_scenario(data: dict) -> tuple[EpistemicState, list[tuple[str, str]], list[str]]:
    """Validate a scenario object; returns (initial state, steps, queries)."""
    if not isinstance(data, dict):
        raise UsageError("scenario must be a JSON object")
    try:
        sig = Signature(data["signature"])
    except KeyError:
        raise UsageError("scenario has no 'signature'") from None
    initial = data.get("initial")
    if initial is None:
        raise UsageError("scenario has no 'initial' state")
    if isinstance(initial, dict) and "beliefs" in initial:
        phi = parse_formula(initial["beliefs"], sig)
        if not phi.consistent:
            raise InconsistentInputError("initial beliefs are inconsistent")
        state = state_for_belief_set(BeliefSet(sig, phi.mask), label="initial")
    else:
        state = EpistemicState(TotalPreorder.from_json(initial, sig), label="initial")
    steps = []
    for i, step in enumerate(data.get("steps", []), start=1):
        if not isinstance(step, dict) or step.get("op") not in ("contract", "revise") or "formula" not in step:
            raise UsageError(f"step {i} must look like {{\"op\": \"contract\"|\"revise\", \"formula\": ...}}")
        parse_formula(step["formula"], sig)
        steps.append((step["op"], step["formula"]))
    queries = list(data.get("queries", []))
    for q in queries:
        parse_conditional(q, sig)
    return state, steps, queries


def evaluate_scenario(data: dict, contraction: str = "natural", revision: str = "natural") -> dict:
    """Run a scenario; the result is what ``eval`` prints."""
    state, steps, queries = load_scenario(data)
    sig = state.sig
    ops = {"contract": _resolve(contraction, "contraction"), "revise": _resolve(revision, "revision")}
    conds = [(q, parse_conditional(q, sig)) for q in queries]

    def snapshot(index, verb, text, st):
        row = {"step": index, "op": verb, "formula": text, "beliefs": _belief_json(st.beliefs)}
        if conds:
            row["queries"] = {
                q: state_accepts(ops["revise" if c.flavor == RAMSEY else "contract"], st, c) for q, c in conds
            }
        return row

    trace = [snapshot(0, None, None, state)]
    for i, (verb, text) in enumerate(steps, start=1):
        try:
            state = ops[verb].apply(state, parse_formula(text, sig))
        except InconsistentInputError as exc:
            raise ScriptError(i, exc) from exc
        trace.append(snapshot(i, verb, text, state))
    return {
        "signature": list(sig.atoms),
        "operators": {"contraction": ops["contract"].kind, "revision": ops["revise"].kind},
        "trace": trace,
        "final": state.order.to_json(),
    }


def cmd_eval(args) -> int:
    try:
        with open(args.scenario, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read scenario: {exc}") from None
    result = evaluate_scenario(data, args.operator_contraction, args.operator_revision)
    _emit(result, args.out)
    return OK


# ----------------------------------------------------------------- check


def _postulate_and_operator(args):
    try:
        p = lookup(args.postulate)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    return p, _resolve(args.operator, p.flavor)


def cmd_check(args) -> int:
    p, op = _postulate_and_operator(args)
    verdict = check_postulate(
        op, p, args.signature_size, args.mode, seed=args.seed, count=args.count, workers=args.workers
    )
    _emit(verdict.to_json())
    return OK if verdict.holds else FAILED


def cmd_counterexample(args) -> int:
    if args.universal:
        try:
            p = lookup(args.postulate)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        if p.flavor != "contraction":
            raise UsageError("--universal applies to contraction postulates")
        found = universal_violation(p, args.signature_size)
        _emit({"postulate": p.name, "universal": True, "witness": found.to_json() if found else None})
        return FAILED if found else OK
    p, op = _postulate_and_operator(args)
    w = find_counterexample(op, p, args.signature_size, workers=args.workers)
    _emit({"postulate": p.name, "operator": op.kind, "witness": w.to_json() if w else None})
    return FAILED if w else OK


def cmd_verify_theorem(args) -> int:
    key = args.theorem.lower()
    if key not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; choose from {', '.join(THEOREMS)}")
    op = _resolve(args.operator, THEOREMS[key].flavor)
    report = verify_characterization(op, key, args.signature_size, workers=args.workers)
    _emit(report.to_json())
    return OK if report.passed else FAILED


def cmd_enumerate(args) -> int:
    n_worlds = 2 ** args.signature_size
    tuples = enumerate_rank_tuples(n_worlds)  # raises ScopeError beyond 8 worlds
    if args.count_only:
        print(sum(1 for _ in tuples))
        return OK
    sig = Signature.of_size(args.signature_size)
    for ranks in tuples:
        print(json.dumps(TotalPreorder(sig, ranks).to_json(), ensure_ascii=False))
    return OK


def cmd_matrix(args) -> int:
    ops = [get_operator(n, "contraction") for n in args.contractions] + [
        get_operator(n, "revision") for n in args.revisions
    ]
    names = args.postulates or list(CATALOG)
    try:
        table = equivalence_matrix(ops, names, args.signature_size, workers=args.workers)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.markdown:
        print(matrix_markdown(table))
    else:
        _emit(table)
    return OK


def cmd_list(args) -> int:
    _emit(
        {
            "postulates": [
                {"name": p.name, "flavor": p.flavor, "form": p.form, "arity": p.arity, "aliases": list(p.aliases)}
                for p in CATALOG.values()
            ],
            "theorems": {k: th.title for k, th in THEOREMS.items()},
        }
    )
    return OK


# ---------------------------------------------------------------- parser


def _size(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("signature size must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="belief-kernel", description="Iterated belief change and postulate checking.")
    sub = parser.add_subparsers(dest="command", required=True)

    def sized(p, default=2):
        p.add_argument("--signature-size", type=_size, default=default)
        p.add_argument("--workers", type=int, default=None, help="worker processes (default: BELIEF_KERNEL_WORKERS or 1)")

    p = sub.add_parser("eval", help="run a scenario file")
    p.add_argument("scenario")
    p.add_argument("--operator-contraction", default="natural", choices=sorted(CONTRACTIONS))
    p.add_argument("--operator-revision", default="natural", choices=sorted(REVISIONS))
    p.add_argument("--out", help="write the JSON result here instead of stdout")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="check one postulate against one operator")
    p.add_argument("--operator", required=True)
    p.add_argument("--postulate", required=True)
    sized(p)
    p.add_argument("--mode", choices=[EXHAUSTIVE, SAMPLED], default=EXHAUSTIVE)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=DEFAULT_SAMPLES)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("counterexample", help="search for a violating instance")
    p.add_argument("--operator", default="natural")
    p.add_argument("--postulate", required=True)
    p.add_argument("--universal", action="store_true", help="look for a violation shared by every compatible contraction")
    sized(p)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("verify-theorem", help="check that the groups of a characterization agree")
    p.add_argument("--operator", required=True)
    p.add_argument("--theorem", required=True)
    sized(p)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("enumerate", help="list every total preorder on the world-space")
    p.add_argument("--signature-size", type=_size, default=2)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("matrix", help="verdict table for several operators and postulates")
    p.add_argument("--contractions", nargs="*", default=sorted(CONTRACTIONS))
    p.add_argument("--revisions", nargs="*", default=sorted(REVISIONS))
    p.add_argument("--postulates", nargs="*")
    p.add_argument("--markdown", action="store_true")
    sized(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("list", help="list postulates and theorems")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InconsistentInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INCONSISTENT
    except ScriptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INCONSISTENT if isinstance(exc.cause, InconsistentInputError) else USAGE
    except (UsageError, BeliefKernelError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
