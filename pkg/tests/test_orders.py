from itertools import product

import pytest

from belief_kernel import (
    BeliefSet,
    EpistemicState,
    InconsistentInputError,
    PreorderFormatError,
    ScopeError,
    Signature,
    TotalPreorder,
    beliefs,
    enumerate_preorders,
    formula_precedes,
    formula_strictly_precedes,
    min_worlds,
    parse_formula,
    preorder_accepts_conditional,
    preorder_accepts_contractional,
    state_for_belief_set,
)
from belief_kernel.orders import enumerate_rank_tuples

import oracles

AB = Signature(["a", "b"])
RUNNING = {"a b": 0, "a -b": 1, "-a b": 1, "-a -b": 2}


def order(ranks: dict, sig=AB) -> TotalPreorder:
    return TotalPreorder.from_json({"signature": list(sig.atoms), "ranks": ranks})


def ws(*texts, sig=AB):
    return {sig.world(t) for t in texts}


R = order(RUNNING)
ALL = list(enumerate_preorders(AB))


# --------------------------------------------------------------- min worlds


def test_min_worlds_examples():
    assert min_worlds(set(AB.worlds()), R) == ws("a b")
    assert min_worlds(set(), R) == set()
    assert min_worlds(parse_formula("!a", AB).models, R) == ws("-a b")


def test_min_worlds_matches_oracle_exhaustively():
    for r, m in product(ALL, range(16)):
        assert oracles.as_mask(oracles.o_min(r.ranks, oracles.as_set(m))) == r.minimal(m)


# ------------------------------------------------------------- lifted order


def test_lifted_comparison_examples():
    top, nb = parse_formula("a & b", AB), parse_formula("!b", AB)
    assert formula_strictly_precedes(R, top, nb)
    assert not formula_strictly_precedes(R, nb, nb)
    assert formula_precedes(R, nb, nb)
    assert formula_strictly_precedes(R, parse_formula("b", AB), parse_formula("!b", AB))


def _lift_oracle(ranks, phi, psi, strict):
    lo = oracles.o_min(ranks, phi)
    for w in oracles.o_min(ranks, psi):
        if not any((ranks[v] < ranks[w]) if strict else (ranks[v] <= ranks[w]) for v in lo):
            return False
    return True


def test_lifted_comparison_matches_oracle_exhaustively():
    for r, x, y in product(ALL, range(16), range(16)):
        for strict in (False, True):
            expected = _lift_oracle(r.ranks, oracles.as_set(x), oracles.as_set(y), strict)
            assert formula_precedes(r, x, y, strict) == expected


# ---------------------------------------------------------------- acceptance


def test_conditional_acceptance_examples():
    assert preorder_accepts_conditional(R, "top", "top")
    assert preorder_accepts_conditional(R, "a", "b")
    assert preorder_accepts_conditional(R, "bot", "!a")


def test_contractional_acceptance_examples():
    assert preorder_accepts_contractional(R, "a", "b")
    flat = TotalPreorder.flat(AB)
    for m in range(16):
        assert preorder_accepts_contractional(R, m, "top")
    assert not preorder_accepts_contractional(flat, "a", "b")


def test_conditional_acceptance_is_min_inclusion():
    for r, a, b in product(ALL, range(1, 16), range(16)):
        assert preorder_accepts_conditional(r, a, b) == (r.minimal(a) & ~b == 0)


def test_contractional_acceptance_is_union_of_minima_inclusion():
    for r, a, b in product(ALL, range(16), range(16)):
        union = r.bottom | r.minimal(AB.full & ~a)
        assert preorder_accepts_contractional(r, a, b) == (union & ~b == 0)


def test_sufficient_condition_for_contractional_acceptance():
    full = AB.full
    for r, a, b in product(ALL, range(16), range(16)):
        nb, na = full & ~b, full & ~a
        if formula_strictly_precedes(r, b, nb) and formula_strictly_precedes(r, na & b, na & nb):
            assert preorder_accepts_contractional(r, a, b)


# --------------------------------------------------------------- enumeration


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 13), (4, 75)])
def test_enumeration_counts(n, expected):
    got = list(enumerate_rank_tuples(n))
    assert len(got) == expected == oracles.fubini(n)
    assert set(got) == oracles.weak_orders_brute(n)
    assert len(set(got)) == len(got)


def test_enumeration_of_signature_is_normalized_and_distinct():
    assert len(ALL) == 75
    assert len({r.ranks for r in ALL}) == 75
    for r in ALL:
        assert set(r.ranks) == set(range(max(r.ranks) + 1))


def test_enumeration_scope_limit():
    with pytest.raises(ScopeError):
        next(enumerate_rank_tuples(9))
    with pytest.raises(ScopeError):
        next(enumerate_preorders(Signature.of_size(4)))


# -------------------------------------------------------------------- states


def test_beliefs_of_states():
    assert beliefs(EpistemicState(R)).mask == parse_formula("a & b", AB).mask
    assert beliefs(EpistemicState(TotalPreorder.flat(AB))).mask == AB.full
    r = order({"a b": 0, "-a b": 0, "a -b": 1, "-a -b": 2})
    assert beliefs(EpistemicState(r)).mask == parse_formula("b", AB).mask


def test_state_for_belief_set():
    st = state_for_belief_set(BeliefSet.of("a & b", sig=AB))
    assert st.order.ranks == (0, 1, 1, 1)
    assert state_for_belief_set(BeliefSet(AB, AB.full)).order.ranks == (0, 0, 0, 0)
    single = state_for_belief_set(BeliefSet(AB, 1 << 2))
    assert single.order.ranks == (1, 1, 0, 1)
    with pytest.raises(InconsistentInputError):
        state_for_belief_set(BeliefSet(AB, 0))


def test_label_does_not_affect_equality():
    assert EpistemicState(R, "x") == EpistemicState(R, "y")


# ----------------------------------------------------------------------- JSON


def test_json_round_trip():
    for r in ALL:
        assert TotalPreorder.from_json(r.to_json()) == r


def test_loader_normalizes_ranks():
    r = order({"a b": 3, "a -b": 7, "-a b": 7, "-a -b": 10})
    assert r == R


@pytest.mark.parametrize(
    "ranks",
    [
        {"a b": 0, "a -b": 1, "-a b": 1},
        {"a b": 0, "a -b": 1, "-a b": 1, "-a -b": 2, "a c": 0},
        {"a b": 0, "a -b": 1, "-a b": 1, "-a -b": -1},
        {"a b": 0, "a -b": 1, "-a b": 1, "-a -b": "x"},
        {"b a": 0, "a -b": 1, "-a b": 1, "-a -b": 2},
    ],
)
def test_loader_rejects_bad_rank_maps(ranks):
    with pytest.raises(PreorderFormatError):
        order(ranks)


def test_unnormalized_direct_construction_is_rejected():
    with pytest.raises(PreorderFormatError):
        TotalPreorder(AB, (0, 2, 2, 3))
    with pytest.raises(PreorderFormatError):
        TotalPreorder(AB, (0, 1))
