"""Characterization checks: groups of postulates that must agree.

A characterization is a list of equivalences.  Each equivalence lists
groups of postulates; a group holds when all its members hold, and the
equivalence is confirmed when every group gets the same verdict.  An
equivalence may carry premises, in which case it is only tested for
operators satisfying them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from ..logic import Signature
from ..operators import ChangeOperator
from .catalog import CONTRACTION, REVISION, lookup
from .engine import PostulateVerdict, Witness, as_signature, check_postulate

AGM_CONTRACTION = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")
AGM_REVISION = ("R1", "R2", "R3", "R4", "R5", "R6")
# relational forms read the operator's own assignment, so it must be compatible with it
PRECONDITION = {CONTRACTION: AGM_CONTRACTION + ("COMPAT",), REVISION: AGM_REVISION + ("COMPAT-R",)}

CR = ("relational", ("IC1-REL", "IC2-REL", "IC3-REL", "IC4-REL"))
IC = ("belief", ("IC1", "IC2", "IC3", "IC4"))
IC_COND = ("conditional", ("IC1-COND", "IC2-COND", "IC3-COND", "IC4-COND"))
ALT = ("alt", ("IC1", "IC2", "IC3-ALT", "IC4-ALT"))
ALT_COND = ("alt-conditional", ("IC1-COND", "IC2-COND", "IC3-ALT-COND", "IC4-ALT-COND"))
KPP = ("kpp", ("KPP1", "KPP2", "KPP3", "KPP4"))


@dataclass(frozen=True)
class Equivalence:
    groups: tuple[tuple[str, tuple[str, ...]], ...]
    given: tuple[str, ...] = ()


@dataclass(frozen=True)
class Characterization:
    key: str
    title: str
    flavor: str
    equivalences: tuple[Equivalence, ...]


def _single(*names: str) -> Equivalence:
    return Equivalence(tuple((n, (n,)) for n in names))


THEOREMS: dict[str, Characterization] = {
    c.key: c
    for c in [
        Characterization(
            "thm1",
            "six formulations of order-preserving iterated contraction",
            CONTRACTION,
            (Equivalence((CR, IC, IC_COND, ALT, ALT_COND, KPP)),),
        ),
        Characterization(
            "prop9",
            "consistency preservation read for contraction versus its relational form",
            CONTRACTION,
            (_single("IR4-CONTR", "IR4-REL-CONTR"),),
        ),
        Characterization(
            "prop13",
            "KPP postulates versus the relational postulates",
            CONTRACTION,
            (Equivalence((KPP, CR)),),
        ),
        Characterization(
            "prop17_18",
            "IC1 and IC2 in belief, conditional and relational form",
            CONTRACTION,
            (_single("IC1", "IC1-COND", "IC1-REL"), _single("IC2", "IC2-COND", "IC2-REL")),
        ),
        Characterization(
            "prop25",
            "IC3 and IC4 in belief, conditional and relational form",
            CONTRACTION,
            (_single("IC3", "IC3-COND", "IC3-REL"), _single("IC4", "IC4-COND", "IC4-REL")),
        ),
        Characterization(
            "alt",
            "alternative third and fourth postulates, given the first and second",
            CONTRACTION,
            (
                Equivalence((("IC3-ALT", ("IC3-ALT",)), ("IC3", ("IC3",)), ("IC3-ALT-COND", ("IC3-ALT-COND",))), given=("IC1",)),
                Equivalence((("IC4-ALT", ("IC4-ALT",)), ("IC4", ("IC4",)), ("IC4-ALT-COND", ("IC4-ALT-COND",))), given=("IC2",)),
            ),
        ),
        Characterization(
            "halves",
            "the satisfiable halves of the literal analogues versus order preservation",
            CONTRACTION,
            (_single("IC1-RIGHT", "IC1-REL-RIGHT"), _single("IC2-RIGHT", "IC2-REL-RIGHT")),
        ),
        Characterization(
            "weak",
            "literal third and fourth analogues versus their guarded relational forms",
            CONTRACTION,
            (_single("IC3-COND-SA", "IC3-REL-WEAK"), _single("IC4-COND-SA", "IC4-REL-WEAK")),
        ),
        Characterization(
            "prop31",
            "independence for contraction in belief, conditional and relational form",
            CONTRACTION,
            (_single("IND-C", "IND-C-COND", "IND-C-REL"),),
        ),
        Characterization(
            "prop34",
            "natural contraction: NC, its conditional form, NCR and Insertion",
            CONTRACTION,
            (_single("NC", "NC-COND", "NC-REL", "INSERTION"),),
        ),
        Characterization(
            "prop35",
            "moderate contraction in relational, belief and conditional form",
            CONTRACTION,
            (
                Equivalence(
                    (
                        ("relational", ("IC1-REL", "IC2-REL", "MC-REL")),
                        ("belief", ("IC1", "IC2", "MC")),
                        ("conditional", ("IC1-COND", "IC2-COND", "MC-COND")),
                    )
                ),
            ),
        ),
        Characterization(
            "ir-dp",
            "iterated revision principles in belief, conditional and relational form",
            REVISION,
            tuple(_single(f"IR{i}", f"IR{i}-COND", f"IR{i}-REL") for i in range(1, 5)),
        ),
        Characterization(
            "ir-min",
            "minimal change of conditional beliefs in three forms",
            REVISION,
            (_single("IR-MIN", "IR-MIN-COND", "IR-MIN-REL"),),
        ),
        Characterization(
            "ir-ind",
            "independence for revision in three forms",
            REVISION,
            (_single("IR-IND", "IR-IND-COND", "IR-IND-REL"),),
        ),
        Characterization(
            "ir-lex",
            "lexicographic priority in three forms",
            REVISION,
            (_single("IR-LEX", "IR-LEX-COND", "IR-LEX-REL"),),
        ),
    ]
}


@dataclass
class GroupResult:
    label: str
    verdicts: dict[str, PostulateVerdict]

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts.values())

    @property
    def first_witness(self) -> Optional[Witness]:
        return next((v.witness for v in self.verdicts.values() if v.witness), None)


@dataclass
class EquivalenceResult:
    groups: list[GroupResult]
    applicable: bool = True

    @property
    def agree(self) -> bool:
        return not self.applicable or len({g.holds for g in self.groups}) <= 1

    @property
    def vector(self) -> list[bool]:
        return [g.holds for g in self.groups]


@dataclass
class CharacterizationReport:
    theorem: str
    operator: str
    status: str  # "PASS", "FAIL" or "PRECONDITION-FAILED"
    equivalences: list[EquivalenceResult] = field(default_factory=list)
    precondition: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def distinguishing_witness(self) -> Optional[Witness]:
        for eq in self.equivalences:
            if not eq.agree:
                return next((g.first_witness for g in eq.groups if not g.holds), None)
        return None

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "operator": self.operator,
            "status": self.status,
            "precondition": self.precondition,
            "equivalences": [
                {
                    "applicable": eq.applicable,
                    "agree": eq.agree,
                    "groups": [
                        {
                            "label": g.label,
                            "holds": g.holds,
                            "postulates": {n: v.status for n, v in g.verdicts.items()},
                        }
                        for g in eq.groups
                    ],
                }
                for eq in self.equivalences
            ],
        }
        w = self.distinguishing_witness()
        if w is not None:
            out["witness"] = {"postulate": w.postulate, **w.to_json()}
        return out


class _VerdictCache:
    def __init__(self, op: ChangeOperator, sig: Signature, workers: Optional[int]):
        self.op, self.sig, self.workers = op, sig, workers
        self.cache: dict[str, PostulateVerdict] = {}

    def __call__(self, name: str) -> PostulateVerdict:
        name = lookup(name).name
        if name not in self.cache:
            self.cache[name] = check_postulate(self.op, name, self.sig, workers=self.workers)
        return self.cache[name]


def verify_characterization(
    op: ChangeOperator,
    theorem: Union[str, Characterization],
    sig: Union[int, Signature] = 2,
    workers: Optional[int] = None,
) -> CharacterizationReport:
    """Sweep every group of the characterization and compare verdicts.

    The operator must first pass the AGM postulates and be compatible with
    its own assignment; otherwise the report is PRECONDITION-FAILED.
    """
    sig = as_signature(sig)
    th = THEOREMS[theorem.lower()] if isinstance(theorem, str) else theorem
    if th.flavor != op.flavor:
        raise ValueError(f"{th.key} concerns {th.flavor} operators, {op.kind} is a {op.flavor} operator")
    verdict = _VerdictCache(op, sig, workers)
    pre = {n: verdict(n).status for n in PRECONDITION[th.flavor]}
    report = CharacterizationReport(th.key, op.kind, "PASS", precondition=pre)
    if any(s != "holds" for s in pre.values()):
        report.status = "PRECONDITION-FAILED"
        return report
    for eq in th.equivalences:
        applicable = all(verdict(n).holds for n in eq.given)
        groups = [GroupResult(label, {n: verdict(n) for n in names}) for label, names in eq.groups]
        report.equivalences.append(EquivalenceResult(groups, applicable))
    if not all(eq.agree for eq in report.equivalences):
        report.status = "FAIL"
    return report


def equivalence_matrix(
    ops: Sequence[ChangeOperator],
    postulates: Iterable[str],
    sig: Union[int, Signature] = 2,
    workers: Optional[int] = None,
) -> dict[str, dict[str, str]]:
    """Verdict per operator and postulate; cells for mismatched flavors are ``"n/a"``."""
    sig = as_signature(sig)
    names = [lookup(p).name for p in postulates]
    table: dict[str, dict[str, str]] = {}
    for op in ops:
        row = {}
        for n in names:
            if lookup(n).flavor != op.flavor:
                row[n] = "n/a"
            else:
                row[n] = check_postulate(op, n, sig, workers=workers).status
        table[op.kind] = row
    return table


def matrix_markdown(table: dict[str, dict[str, str]]) -> str:
    cols = list(next(iter(table.values())).keys()) if table else []
    lines = ["| operator | " + " | ".join(cols) + " |", "|---" * (len(cols) + 1) + "|"]
    mark = {"holds": "yes", "fails": "no", "n/a": "-"}
    for kind, row in table.items():
        lines.append(f"| {kind} | " + " | ".join(mark[row[c]] for c in cols) + " |")
    return "\n".join(lines)
