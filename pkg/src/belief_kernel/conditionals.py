"""Ramsey-test conditionals and contractionals.

``(beta | alpha)`` is accepted by a state when revising by ``alpha``
leads to believing ``beta``.  ``(beta -: alpha)`` is accepted when
``beta`` is still believed after contracting ``alpha``.  Acceptance is
always relative to an explicit operator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FlavorMismatchError, FormulaSyntaxError, InconsistentInputError
from .logic import Formula, Signature, parse_formula
from .operators import ChangeOperator
from .orders import EpistemicState, preorder_accepts_conditional, preorder_accepts_contractional

RAMSEY = "ramsey"
CONTRACTIONAL = "contractional"


@dataclass(frozen=True)
class Conditional:
    antecedent: Formula
    consequent: Formula
    flavor: str

    def __post_init__(self):
        if self.flavor not in (RAMSEY, CONTRACTIONAL):
            raise ValueError(f"unknown conditional flavor {self.flavor!r}")

    @classmethod
    def ramsey(cls, consequent: Formula, antecedent: Formula) -> "Conditional":
        return cls(antecedent, consequent, RAMSEY)

    @classmethod
    def contractional(cls, retained: Formula, removed: Formula) -> "Conditional":
        return cls(removed, retained, CONTRACTIONAL)

    def __str__(self) -> str:
        sep = "|" if self.flavor == RAMSEY else "-:"
        return f"(({self.consequent}) {sep} ({self.antecedent}))"


def parse_conditional(text: str, sig: Signature) -> Conditional:
    """Parse ``(beta | alpha)`` or ``(beta -: alpha)``.

    A Ramsey conditional splits at the last top-level ``|``; bracket a
    disjunctive antecedent to avoid surprises.
    """
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise FormulaSyntaxError("a conditional must be enclosed in parentheses", 0, text)
    body = s[1:-1]
    offset = text.index("(") + 1
    depth = 0
    pipe = None
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise FormulaSyntaxError("unbalanced ')'", offset + i, text)
        elif depth == 0 and body.startswith("-:", i):
            left, right = body[:i], body[i + 2:]
            return Conditional(parse_formula(right, sig), parse_formula(left, sig), CONTRACTIONAL)
        elif depth == 0 and ch == "|":
            pipe = i
    if pipe is None:
        raise FormulaSyntaxError("expected '|' or '-:' inside the conditional", offset, text)
    left, right = body[:pipe], body[pipe + 1:]
    return Conditional(parse_formula(right, sig), parse_formula(left, sig), RAMSEY)


def state_accepts(op: ChangeOperator, state: EpistemicState, c: Conditional) -> bool:
    """Does ``state`` accept ``c`` when changes are made with ``op``."""
    wanted = "revision" if c.flavor == RAMSEY else "contraction"
    if op.flavor != wanted:
        raise FlavorMismatchError(f"a {c.flavor} conditional needs a {wanted} operator, got {op.kind}")
    if c.flavor == RAMSEY and not c.antecedent.consistent:
        raise InconsistentInputError("a Ramsey conditional needs a consistent antecedent")
    after = op.apply(state, c.antecedent)
    return after.beliefs.mask & ~c.consequent.mask == 0


def order_accepts(op: ChangeOperator, state: EpistemicState, c: Conditional) -> bool:
    """Acceptance read off the plausibility order ``op`` assigns to ``state``."""
    order = op.order_of(state)
    if c.flavor == RAMSEY:
        return preorder_accepts_conditional(order, c.antecedent, c.consequent)
    return preorder_accepts_contractional(order, c.antecedent, c.consequent)


def acceptance_bridge_check(op: ChangeOperator, sig: Signature, mode: str = "exhaustive", **kwargs):
    """Sweep states and formula pairs comparing :func:`state_accepts` with order acceptance."""
    from .lab import check_postulate

    name = "BRIDGE-R" if op.flavor == "revision" else "BRIDGE-C"
    return check_postulate(op, name, sig, mode=mode, **kwargs)
