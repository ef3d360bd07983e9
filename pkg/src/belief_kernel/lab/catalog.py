"""Machine-checkable postulates.

Each entry is a predicate over one instance: a state id ``s`` plus one to
three formula masks ``a``, ``b``, ``g`` (alpha, beta, gamma).  A body
returns

* ``None`` when the instance does not meet the precondition (vacuous),
* ``True`` when the postulate holds on the instance,
* ``False`` or a world pair ``(w1, w2)`` when it fails.

Notation used in the bodies: ``t.bel0(s)`` is Mod(Psi), ``t.bel1(s, a)``
is Mod(Psi o a), ``t.bel2(s, a, b)`` is Mod(Psi o a o b) and
``t.ranks(s)`` is the order the operator assigns to a state.  Belief
inclusion Bel(X) <= Bel(Y) is model inclusion Mod(Y) <= Mod(X).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from ..orders import minimal, preorder_accepts_conditional, preorder_accepts_contractional
from .tables import Tables, members_of

CONTRACTION = "contraction"
REVISION = "revision"

BELIEF = "belief"
CONDITIONAL = "conditional"
RELATIONAL = "relational"

VARIABLES = ("alpha", "beta", "gamma")


@dataclass(frozen=True)
class Postulate:
    name: str
    flavor: str
    form: str
    arity: int
    body: Callable = field(repr=False, compare=False)
    consistent: tuple[bool, ...] = ()
    aliases: tuple[str, ...] = ()
    summary: str = ""

    @property
    def variables(self) -> tuple[str, ...]:
        return VARIABLES[: self.arity]


CATALOG: dict[str, Postulate] = {}
_ALIASES: dict[str, str] = {}


def postulate(name: str, flavor: str, form: str, *, consistent: str = "", aliases: tuple[str, ...] = ()):
    """Register a body; ``consistent`` lists variables ranging over satisfiable classes only."""

    def register(fn: Callable) -> Callable:
        arity = fn.__code__.co_argcount - 2
        mask = tuple(v in consistent for v in "abg"[:arity])
        doc = (fn.__doc__ or "").strip()
        p = Postulate(name, flavor, form, arity, fn, mask, aliases, doc)
        CATALOG[name] = p
        for key in (name, *aliases):
            _ALIASES[key.upper()] = name
        return fn

    return register


def lookup(name: str) -> Postulate:
    key = _ALIASES.get(name.strip().upper())
    if key is None:
        raise KeyError(f"unknown postulate {name!r}")
    return CATALOG[key]


def sub(x: int, y: int) -> bool:
    """Mask inclusion; also entailment ``x |= y``."""
    return x & ~y == 0


def accepts(t: Tables, s: int, retained: int, removed: int) -> bool:
    """State ``s`` accepts the conditional (retained | removed) via the operator's belief map."""
    return sub(t.bel1(s, removed), retained)


def _pairs(ws1, ws2):
    for w1 in ws1:
        for w2 in ws2:
            yield w1, w2


# ---------------------------------------------------------------- AGM revision


@postulate("R1", REVISION, BELIEF, consistent="a")
def _r1(t, s, a):
    """alpha is believed after revising by alpha."""
    return sub(t.bel1(s, a), a)


@postulate("R2", REVISION, BELIEF, consistent="a")
def _r2(t, s, a):
    """If alpha is consistent with the beliefs, revision is expansion."""
    if t.bel0(s) & a == 0:
        return None
    return t.bel1(s, a) == t.bel0(s) & a


@postulate("R3", REVISION, BELIEF, consistent="a")
def _r3(t, s, a):
    """Revising by a consistent formula gives consistent beliefs."""
    return t.bel1(s, a) != 0


@postulate("R4", REVISION, BELIEF, consistent="ab")
def _r4(t, s, a, b):
    """Equivalent inputs give equal beliefs."""
    if a != b:
        return None
    return t.bel1(s, a) == t.bel1(s, b)


@postulate("R5", REVISION, BELIEF, consistent="a")
def _r5(t, s, a, b):
    """Bel(Psi * (a & b)) is included in Bel(Psi * a) + b."""
    if a & b == 0:
        return None
    return sub(t.bel1(s, a) & b, t.bel1(s, a & b))


@postulate("R6", REVISION, BELIEF, consistent="a")
def _r6(t, s, a, b):
    """If Bel(Psi * a) + b is consistent it is included in Bel(Psi * (a & b))."""
    if t.bel1(s, a) & b == 0:
        return None
    return sub(t.bel1(s, a & b), t.bel1(s, a) & b)


# ------------------------------------------------------------- AGM contraction


@postulate("C1", CONTRACTION, BELIEF)
def _c1(t, s, a):
    """Contraction adds no beliefs."""
    return sub(t.bel0(s), t.bel1(s, a))


@postulate("C2", CONTRACTION, BELIEF)
def _c2(t, s, a):
    """Contracting a non-belief changes nothing."""
    if sub(t.bel0(s), a):
        return None
    return sub(t.bel1(s, a), t.bel0(s))


@postulate("C3", CONTRACTION, BELIEF)
def _c3(t, s, a):
    """A non-tautology is not believed after contracting it."""
    if a == t.full:
        return None
    return not sub(t.bel1(s, a), a)


@postulate("C4", CONTRACTION, BELIEF)
def _c4(t, s, a):
    """Recovery: the old beliefs follow from the contracted ones plus alpha."""
    return sub(t.bel1(s, a) & a, t.bel0(s))


@postulate("C5", CONTRACTION, BELIEF)
def _c5(t, s, a, b):
    """Equivalent inputs give equal beliefs."""
    if a != b:
        return None
    return t.bel1(s, a) == t.bel1(s, b)


@postulate("C6", CONTRACTION, BELIEF)
def _c6(t, s, a, b):
    """Beliefs kept by both single contractions survive contracting a & b."""
    return sub(t.bel1(s, a & b), t.bel1(s, a) | t.bel1(s, b))


@postulate("C7", CONTRACTION, BELIEF)
def _c7(t, s, a, b):
    """If beta is dropped when contracting a & b, that contraction keeps what contracting beta keeps."""
    if sub(t.bel1(s, a & b), b):
        return None
    return sub(t.bel1(s, b), t.bel1(s, a & b))


# ------------------------------------------------------------ plumbing checks


@postulate("COMPAT", CONTRACTION, BELIEF, aliases=("COMPAT-C",))
def _compat_c(t, s, a):
    """Posterior beliefs are Mod(Psi) plus the most plausible counter-models of alpha."""
    r = t.ranks(s)
    return t.bel1(s, a) == t.bel0(s) | minimal(r, t.neg(a))


@postulate("COMPAT-R", REVISION, BELIEF, consistent="a")
def _compat_r(t, s, a):
    """Posterior beliefs are the most plausible models of alpha."""
    return t.bel1(s, a) == minimal(t.ranks(s), a)


@postulate("BRIDGE-C", CONTRACTION, CONDITIONAL)
def _bridge_c(t, s, a, b):
    """Contractional acceptance by the state agrees with acceptance by its order."""
    return accepts(t, s, b, a) == preorder_accepts_contractional(t.order(s), a, b)


@postulate("BRIDGE-R", REVISION, CONDITIONAL, consistent="a")
def _bridge_r(t, s, a, b):
    """Ramsey acceptance by the state agrees with acceptance by its order."""
    return accepts(t, s, b, a) == preorder_accepts_conditional(t.order(s), a, b)


@postulate("TOP-FLOOR", CONTRACTION, BELIEF)
def _top_floor(t, s, a, b, g):
    """Whatever survives two contractions was already believed after contracting top."""
    if not sub(t.bel2(s, a, b), g):
        return None
    return sub(t.bel1(s, t.full), g)


# -------------------------------------------------- iterated revision: minimal


@postulate("IR-MIN", REVISION, BELIEF, consistent="ab", aliases=("CB",))
def _ir_min(t, s, a, b):
    """If Psi * a rejects beta, revising by beta afterwards ignores the first step."""
    if t.bel1(s, a) & b:
        return None
    return t.bel2(s, a, b) == t.bel1(s, b)


@postulate("IR-MIN-COND", REVISION, CONDITIONAL, consistent="ab")
def _ir_min_cond(t, s, a, b, g):
    """If Psi * a rejects beta, conditionals with antecedent beta are unchanged."""
    if t.bel1(s, a) & b:
        return None
    return accepts(t, t.after(s, a), g, b) == accepts(t, s, g, b)


@postulate("IR-MIN-REL", REVISION, RELATIONAL, consistent="a", aliases=("CBR",))
def _ir_min_rel(t, s, a):
    """Worlds outside Mod(Psi * a) keep their relative order."""
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    ws = members_of(t.neg(t.bel1(s, a)))
    for w1, w2 in _pairs(ws, ws):
        if (r[w1] <= r[w2]) != (q[w1] <= q[w2]):
            return (w1, w2)
    return True


# --------------------------------------------- iterated revision: DP families


@postulate("IR1", REVISION, BELIEF, consistent="ab", aliases=("DP1",))
def _ir1(t, s, a, b):
    """If beta entails alpha, revising by alpha first makes no difference."""
    if not sub(b, a):
        return None
    return t.bel2(s, a, b) == t.bel1(s, b)


@postulate("IR2", REVISION, BELIEF, consistent="ab", aliases=("DP2",))
def _ir2(t, s, a, b):
    """If beta entails not-alpha, revising by alpha first makes no difference."""
    if b & a:
        return None
    return t.bel2(s, a, b) == t.bel1(s, b)


@postulate("IR3", REVISION, BELIEF, consistent="ab", aliases=("DP3",))
def _ir3(t, s, a, b):
    """If Psi * beta entails alpha, so does Psi * alpha * beta."""
    if not sub(t.bel1(s, b), a):
        return None
    return sub(t.bel2(s, a, b), a)


@postulate("IR4", REVISION, BELIEF, consistent="ab", aliases=("DP4",))
def _ir4(t, s, a, b):
    """If Psi * beta is consistent with alpha, so is Psi * alpha * beta."""
    if t.bel1(s, b) & a == 0:
        return None
    return t.bel2(s, a, b) & a != 0


@postulate("IR1-COND", REVISION, CONDITIONAL, consistent="ab")
def _ir1_cond(t, s, a, b, g):
    if not sub(b, a):
        return None
    return accepts(t, s, g, b) == accepts(t, t.after(s, a), g, b)


@postulate("IR2-COND", REVISION, CONDITIONAL, consistent="ab")
def _ir2_cond(t, s, a, b, g):
    if b & a:
        return None
    return accepts(t, s, g, b) == accepts(t, t.after(s, a), g, b)


@postulate("IR3-COND", REVISION, CONDITIONAL, consistent="ab")
def _ir3_cond(t, s, a, b):
    if not accepts(t, s, a, b):
        return None
    return accepts(t, t.after(s, a), a, b)


@postulate("IR4-COND", REVISION, CONDITIONAL, consistent="ab")
def _ir4_cond(t, s, a, b):
    if accepts(t, s, t.neg(a), b):
        return None
    return not accepts(t, t.after(s, a), t.neg(a), b)


@postulate("IR1-REL", REVISION, RELATIONAL, consistent="a")
def _ir1_rel(t, s, a):
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    ws = members_of(a)
    for w1, w2 in _pairs(ws, ws):
        if (r[w1] <= r[w2]) != (q[w1] <= q[w2]):
            return (w1, w2)
    return True


@postulate("IR2-REL", REVISION, RELATIONAL, consistent="a")
def _ir2_rel(t, s, a):
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    ws = members_of(t.neg(a))
    for w1, w2 in _pairs(ws, ws):
        if (r[w1] <= r[w2]) != (q[w1] <= q[w2]):
            return (w1, w2)
    return True


@postulate("IR3-REL", REVISION, RELATIONAL, consistent="a")
def _ir3_rel(t, s, a):
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(a), members_of(t.neg(a))):
        if r[w1] < r[w2] and not q[w1] < q[w2]:
            return (w1, w2)
    return True


@postulate("IR4-REL", REVISION, RELATIONAL, consistent="a")
def _ir4_rel(t, s, a):
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(a), members_of(t.neg(a))):
        if r[w1] <= r[w2] and not q[w1] <= q[w2]:
            return (w1, w2)
    return True


@postulate("IR-IND", REVISION, BELIEF, consistent="ab")
def _ir_ind(t, s, a, b):
    """If Psi * beta is consistent with alpha, Psi * alpha * beta entails alpha."""
    if t.bel1(s, b) & a == 0:
        return None
    return sub(t.bel2(s, a, b), a)


@postulate("IR-IND-COND", REVISION, CONDITIONAL, consistent="ab")
def _ir_ind_cond(t, s, a, b):
    if accepts(t, s, t.neg(a), b):
        return None
    return accepts(t, t.after(s, a), a, b)


@postulate("IR-IND-REL", REVISION, RELATIONAL, consistent="a")
def _ir_ind_rel(t, s, a):
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(a), members_of(t.neg(a))):
        if r[w1] <= r[w2] and not q[w1] < q[w2]:
            return (w1, w2)
    return True


@postulate("IR-LEX", REVISION, BELIEF, consistent="ab")
def _ir_lex(t, s, a, b):
    """If beta is consistent with alpha, Psi * alpha * beta entails alpha."""
    if b & a == 0:
        return None
    return sub(t.bel2(s, a, b), a)


@postulate("IR-LEX-COND", REVISION, CONDITIONAL, consistent="ab")
def _ir_lex_cond(t, s, a, b):
    if b & a == 0:
        return None
    return accepts(t, t.after(s, a), a, b)


@postulate("IR-LEX-REL", REVISION, RELATIONAL, consistent="a")
def _ir_lex_rel(t, s, a):
    q = t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(a), members_of(t.neg(a))):
        if not q[w1] < q[w2]:
            return (w1, w2)
    return True


# ------------------------------- revision iteration principles read for contraction


@postulate("IR1-CONTR", CONTRACTION, BELIEF, aliases=("DP1-CONTR",))
def _ir1_contr(t, s, a, b):
    """If beta entails alpha, contracting alpha first makes no difference."""
    if not sub(b, a):
        return None
    return t.bel2(s, a, b) == t.bel1(s, b)


@postulate("IR2-CONTR", CONTRACTION, BELIEF, aliases=("DP2-CONTR",))
def _ir2_contr(t, s, a, b):
    """If beta entails not-alpha, contracting alpha first makes no difference."""
    if b & a:
        return None
    return t.bel2(s, a, b) == t.bel1(s, b)


@postulate("IR3-CONTR", CONTRACTION, BELIEF, aliases=("DP3-CONTR",))
def _ir3_contr(t, s, a, b):
    """If Psi - beta entails alpha, so does Psi - alpha - beta."""
    if not sub(t.bel1(s, b), a):
        return None
    return sub(t.bel2(s, a, b), a)


@postulate("IR4-CONTR", CONTRACTION, BELIEF, aliases=("DP4-CONTR",))
def _ir4_contr(t, s, a, b):
    """If Psi - beta is consistent with alpha, so is Psi - alpha - beta."""
    if t.bel1(s, b) & a == 0:
        return None
    return t.bel2(s, a, b) & a != 0


@postulate("IR4-REL-CONTR", CONTRACTION, RELATIONAL, aliases=("DP4-REL-CONTR",))
def _ir4_rel_contr(t, s, a):
    """When not-alpha is believed, no alpha-world falls behind a not-alpha world it was level with or below."""
    if not sub(t.bel0(s), t.neg(a)):
        return None
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(a), members_of(t.neg(a))):
        if r[w1] <= r[w2] and not q[w1] <= q[w2]:
            return (w1, w2)
    return True


# --------------------------------------------- literal syntactic analogues


@postulate("IC1-COND-SA", CONTRACTION, CONDITIONAL)
def _ic1_cond_sa(t, s, a, b, g):
    if not sub(t.neg(a), b):
        return None
    return accepts(t, t.after(s, a), g, b) == accepts(t, s, g, b)


@postulate("IC1-SA", CONTRACTION, BELIEF)
def _ic1_sa(t, s, a, b):
    if not sub(t.neg(a), b):
        return None
    return t.bel2(s, a, b) == t.bel1(s, b)


@postulate("IC1-LEFT", CONTRACTION, CONDITIONAL, aliases=("IC1<=", "IC1-IF"))
def _ic1_left(t, s, a, b, g):
    """Half of the analogue that no contraction can satisfy: Psi - beta |= gamma forces Psi - alpha - beta |= gamma."""
    if not sub(t.neg(a), b):
        return None
    if not sub(t.bel1(s, b), g):
        return None
    return sub(t.bel2(s, a, b), g)


@postulate("IC1-RIGHT", CONTRACTION, CONDITIONAL, aliases=("IC1=>", "IC1-ONLYIF"))
def _ic1_right(t, s, a, b, g):
    if not sub(t.neg(a), b):
        return None
    if not sub(t.bel2(s, a, b), g):
        return None
    return sub(t.bel1(s, b), g)


@postulate("IC1-REL-RIGHT", CONTRACTION, RELATIONAL, aliases=("CR1=>",))
def _ic1_rel_right(t, s, a):
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    ws = members_of(a)
    for w1, w2 in _pairs(ws, ws):
        if r[w1] <= r[w2] and not q[w1] <= q[w2]:
            return (w1, w2)
    return True


@postulate("IC2-COND-SA", CONTRACTION, CONDITIONAL)
def _ic2_cond_sa(t, s, a, b, g):
    if not sub(a, b):
        return None
    return accepts(t, t.after(s, a), g, b) == accepts(t, s, g, b)


@postulate("IC2-SA", CONTRACTION, BELIEF)
def _ic2_sa(t, s, a, b):
    if not sub(a, b):
        return None
    return t.bel2(s, a, b) == t.bel1(s, b)


@postulate("IC2-LEFT", CONTRACTION, CONDITIONAL, aliases=("IC2<=", "IC2-IF"))
def _ic2_left(t, s, a, b, g):
    if not sub(a, b):
        return None
    if not sub(t.bel1(s, b), g):
        return None
    return sub(t.bel2(s, a, b), g)


@postulate("IC2-RIGHT", CONTRACTION, CONDITIONAL, aliases=("IC2=>", "IC2-ONLYIF"))
def _ic2_right(t, s, a, b, g):
    if not sub(a, b):
        return None
    if not sub(t.bel2(s, a, b), g):
        return None
    return sub(t.bel1(s, b), g)


@postulate("IC2-REL-RIGHT", CONTRACTION, RELATIONAL, aliases=("CR2=>",))
def _ic2_rel_right(t, s, a):
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    ws = members_of(t.neg(a))
    for w1, w2 in _pairs(ws, ws):
        if r[w1] <= r[w2] and not q[w1] <= q[w2]:
            return (w1, w2)
    return True


@postulate("IC3-COND-SA", CONTRACTION, CONDITIONAL)
def _ic3_cond_sa(t, s, a, b):
    """Accepting (not-alpha -: beta) survives contracting alpha."""
    na = t.neg(a)
    if not accepts(t, s, na, b):
        return None
    return accepts(t, t.after(s, a), na, b)


@postulate("IC4-COND-SA", CONTRACTION, CONDITIONAL)
def _ic4_cond_sa(t, s, a, b):
    """Accepting (not-alpha -: beta) after contracting alpha was already the case before."""
    na = t.neg(a)
    if not accepts(t, t.after(s, a), na, b):
        return None
    return accepts(t, s, na, b)


@postulate("IC3-REL-WEAK", CONTRACTION, RELATIONAL)
def _ic3_rel_weak(t, s, a):
    na = t.neg(a)
    if not sub(t.bel0(s), na):
        return None
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(na), members_of(a)):
        if r[w1] < r[w2] and not q[w1] < q[w2]:
            return (w1, w2)
    return True


@postulate("IC4-REL-WEAK", CONTRACTION, RELATIONAL)
def _ic4_rel_weak(t, s, a):
    na = t.neg(a)
    if not sub(t.bel0(s), na):
        return None
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(na), members_of(a)):
        if q[w1] < q[w2] and not r[w1] < r[w2]:
            return (w1, w2)
    return True


# ---------------------------------------------------------- IC1 - IC4 family


@postulate("IC1", CONTRACTION, BELIEF)
def _ic1(t, s, a, b):
    """If not-alpha entails beta, Psi - alpha - beta and Psi - beta agree on the alpha-worlds."""
    if not sub(t.neg(a), b):
        return None
    return t.bel2(s, a, b) & a == t.bel1(s, b) & a


@postulate("IC2", CONTRACTION, BELIEF)
def _ic2(t, s, a, b):
    """If alpha entails beta, Psi - alpha - beta and Psi - beta agree on the not-beta worlds."""
    if not sub(a, b):
        return None
    nb = t.neg(b)
    return t.bel2(s, a, b) & nb == t.bel1(s, b) & nb


@postulate("IC2-PRIME", CONTRACTION, BELIEF, aliases=("IC2'",))
def _ic2_prime(t, s, a, b):
    """The variant of IC2 that compares on not-alpha worlds; no contraction satisfies it."""
    if not sub(a, b):
        return None
    na = t.neg(a)
    return t.bel2(s, a, b) & na == t.bel1(s, b) & na


@postulate("IC1-COND", CONTRACTION, CONDITIONAL)
def _ic1_cond(t, s, a, b, g):
    if not sub(t.neg(a), b):
        return None
    d = t.neg(a) | g  # alpha -> gamma
    return accepts(t, t.after(s, a), d, b) == accepts(t, s, d, b)


@postulate("IC2-COND", CONTRACTION, CONDITIONAL)
def _ic2_cond(t, s, a, b, g):
    if not sub(a, b):
        return None
    d = b | g  # not-beta -> gamma
    return accepts(t, t.after(s, a), d, b) == accepts(t, s, d, b)


@postulate("IC3", CONTRACTION, BELIEF)
def _ic3(t, s, a, b, g):
    """If gamma entails beta, believing alpha -> gamma after contracting beta survives a prior contraction of alpha."""
    if not sub(g, b):
        return None
    d = t.neg(a) | g
    if not sub(t.bel1(s, b), d):
        return None
    return sub(t.bel2(s, a, b), d)


@postulate("IC4", CONTRACTION, BELIEF)
def _ic4(t, s, a, b, g):
    """If gamma entails beta, believing not-alpha -> gamma after both contractions was already true after contracting beta."""
    if not sub(g, b):
        return None
    d = a | g
    if not sub(t.bel2(s, a, b), d):
        return None
    return sub(t.bel1(s, b), d)


@postulate("IC3-COND", CONTRACTION, CONDITIONAL)
def _ic3_cond(t, s, a, b, g):
    if not sub(g, b):
        return None
    d = t.neg(a) | g
    if not accepts(t, s, d, b):
        return None
    return accepts(t, t.after(s, a), d, b)


@postulate("IC4-COND", CONTRACTION, CONDITIONAL)
def _ic4_cond(t, s, a, b, g):
    if not sub(g, b):
        return None
    d = a | g
    if not accepts(t, t.after(s, a), d, b):
        return None
    return accepts(t, s, d, b)


@postulate("IC3-ALT", CONTRACTION, BELIEF)
def _ic3_alt(t, s, a, b, g):
    """If not-alpha entails gamma, belief in gamma after contracting beta survives a prior contraction of alpha."""
    if not sub(t.neg(a), g):
        return None
    if not sub(t.bel1(s, b), g):
        return None
    return sub(t.bel2(s, a, b), g)


@postulate("IC4-ALT", CONTRACTION, BELIEF)
def _ic4_alt(t, s, a, b, g):
    """If alpha entails gamma, belief in gamma after both contractions was already there after contracting beta."""
    if not sub(a, g):
        return None
    if not sub(t.bel2(s, a, b), g):
        return None
    return sub(t.bel1(s, b), g)


@postulate("IC3-ALT-COND", CONTRACTION, CONDITIONAL)
def _ic3_alt_cond(t, s, a, b, g):
    if not sub(t.neg(a), g):
        return None
    if not accepts(t, s, g, b):
        return None
    return accepts(t, t.after(s, a), g, b)


@postulate("IC4-ALT-COND", CONTRACTION, CONDITIONAL)
def _ic4_alt_cond(t, s, a, b, g):
    if not sub(a, g):
        return None
    if not accepts(t, t.after(s, a), g, b):
        return None
    return accepts(t, s, g, b)


@postulate("IC1-REL", CONTRACTION, RELATIONAL, aliases=("CR8",))
def _ic1_rel(t, s, a):
    """The relative order of alpha-worlds is kept."""
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    ws = members_of(a)
    for w1, w2 in _pairs(ws, ws):
        if (r[w1] <= r[w2]) != (q[w1] <= q[w2]):
            return (w1, w2)
    return True


@postulate("IC2-REL", CONTRACTION, RELATIONAL, aliases=("CR9",))
def _ic2_rel(t, s, a):
    """The relative order of not-alpha worlds is kept."""
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    ws = members_of(t.neg(a))
    for w1, w2 in _pairs(ws, ws):
        if (r[w1] <= r[w2]) != (q[w1] <= q[w2]):
            return (w1, w2)
    return True


@postulate("IC3-REL", CONTRACTION, RELATIONAL, aliases=("CR10",))
def _ic3_rel(t, s, a):
    """A not-alpha world strictly below an alpha-world stays strictly below."""
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(t.neg(a)), members_of(a)):
        if r[w1] < r[w2] and not q[w1] < q[w2]:
            return (w1, w2)
    return True


@postulate("IC4-REL", CONTRACTION, RELATIONAL, aliases=("CR11",))
def _ic4_rel(t, s, a):
    """A not-alpha world at or below an alpha-world stays at or below."""
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(t.neg(a)), members_of(a)):
        if r[w1] <= r[w2] and not q[w1] <= q[w2]:
            return (w1, w2)
    return True


# ------------------------------------------------------------------- KPP


def _kpp_sides(t, s, a, b, g):
    ab = a | b
    before = sub(t.bel1(s, ab), t.bel1(s, a))  # Bel(Psi - a) <= Bel(Psi - (a | b))
    sg = t.after(s, g)
    after = sub(t.bel1(sg, ab), t.bel1(sg, a))
    return before, after


@postulate("KPP1", CONTRACTION, BELIEF)
def _kpp1(t, s, a, b, g):
    if not sub(t.neg(a), g):
        return None
    before, after = _kpp_sides(t, s, a, b, g)
    return before == after


@postulate("KPP2", CONTRACTION, BELIEF)
def _kpp2(t, s, a, b, g):
    if not sub(g, a):
        return None
    before, after = _kpp_sides(t, s, a, b, g)
    return before == after


@postulate("KPP3", CONTRACTION, BELIEF)
def _kpp3(t, s, a, b, g):
    if not sub(t.neg(b), g):
        return None
    before, after = _kpp_sides(t, s, a, b, g)
    return before or not after


@postulate("KPP4", CONTRACTION, BELIEF)
def _kpp4(t, s, a, b, g):
    """Read with the inclusion carried forward, which is the direction order preservation gives."""
    if not sub(g, b):
        return None
    before, after = _kpp_sides(t, s, a, b, g)
    return after or not before


@postulate("KPP4-LITERAL", CONTRACTION, BELIEF)
def _kpp4_literal(t, s, a, b, g):
    """The backward-carrying reading, mirroring KPP3; order-preserving contractions violate it."""
    if not sub(g, b):
        return None
    before, after = _kpp_sides(t, s, a, b, g)
    return before or not after


# ------------------------------------------------------------ independence


@postulate("IND-C-REL", CONTRACTION, RELATIONAL, aliases=("IC-IND-REL",))
def _ind_c_rel(t, s, a):
    """A not-alpha world at or below a non-belief alpha-world ends up strictly below it."""
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    for w1, w2 in _pairs(members_of(t.neg(a)), members_of(a & ~t.bel0(s))):
        if r[w1] <= r[w2] and not q[w1] < q[w2]:
            return (w1, w2)
    return True


@postulate("IND-C", CONTRACTION, BELIEF, aliases=("IC-IND",))
def _ind_c(t, s, a, b, g):
    """If not-alpha entails gamma and Psi - beta does not entail not-alpha -> beta,
    a belief in gamma after contracting alpha survives contracting beta next."""
    if not sub(t.neg(a), g):
        return None
    if sub(t.bel1(s, b), a | b):
        return None
    if not sub(t.bel1(s, a), g):
        return None
    return sub(t.bel2(s, a, b), g)


@postulate("IND-C-COND", CONTRACTION, CONDITIONAL, aliases=("IC-IND-COND",))
def _ind_c_cond(t, s, a, b, g):
    if not sub(t.neg(a), g):
        return None
    if accepts(t, s, a | b, b):
        return None
    if not accepts(t, s, g, a):
        return None
    return accepts(t, t.after(s, a), g, b)


# ---------------------------------------------------------------- natural


@postulate("NC-REL", CONTRACTION, RELATIONAL, aliases=("NCR",))
def _nc_rel(t, s, a):
    """Worlds outside Mod(Psi - alpha) keep their relative order."""
    r, q = t.ranks(s), t.ranks(t.after(s, a))
    ws = members_of(t.neg(t.bel1(s, a)))
    for w1, w2 in _pairs(ws, ws):
        if (r[w1] <= r[w2]) != (q[w1] <= q[w2]):
            return (w1, w2)
    return True


@postulate("NC", CONTRACTION, BELIEF)
def _nc(t, s, a, b):
    """If Psi - alpha believes beta, Psi - alpha - beta and Psi - beta agree on not-beta worlds."""
    if not sub(t.bel1(s, a), b):
        return None
    nb = t.neg(b)
    return t.bel2(s, a, b) & nb == t.bel1(s, b) & nb


@postulate("NC-COND", CONTRACTION, CONDITIONAL)
def _nc_cond(t, s, a, b, g):
    if not sub(t.bel1(s, a), b):
        return None
    d = b | g  # not-beta -> gamma
    return accepts(t, t.after(s, a), d, b) == accepts(t, s, d, b)


@postulate("INSERTION", CONTRACTION, BELIEF)
def _insertion(t, s, a, b):
    """If Psi - alpha believes beta, contracting beta next keeps exactly what both single contractions keep."""
    if not sub(t.bel1(s, a), b):
        return None
    return t.bel2(s, a, b) == t.bel1(s, a) | t.bel1(s, b)


# --------------------------------------------------------------- moderate


@postulate("MC-REL", CONTRACTION, RELATIONAL, aliases=("MCR",))
def _mc_rel(t, s, a):
    """Every not-alpha world ends strictly below every alpha-world outside Mod(Psi - alpha)."""
    sa = t.after(s, a)
    q = t.ranks(sa)
    for w1, w2 in _pairs(members_of(t.neg(a)), members_of(a & ~t.bel0(sa))):
        if not q[w1] < q[w2]:
            return (w1, w2)
    return True


@postulate("MC", CONTRACTION, BELIEF)
def _mc(t, s, a, b, g):
    """If not-alpha entails gamma and alpha | beta is no tautology,
    belief in gamma after contracting alpha survives contracting beta next."""
    if not sub(t.neg(a), g) or a | b == t.full:
        return None
    if not sub(t.bel1(s, a), g):
        return None
    return sub(t.bel2(s, a, b), g)


@postulate("MC-COND", CONTRACTION, CONDITIONAL)
def _mc_cond(t, s, a, b, g):
    if not sub(t.neg(a), g) or a | b == t.full:
        return None
    if not accepts(t, s, g, a):
        return None
    return accepts(t, t.after(s, a), g, b)


def names(flavor: Optional[str] = None) -> list[str]:
    return [n for n, p in CATALOG.items() if flavor is None or p.flavor == flavor]
