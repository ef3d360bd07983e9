from itertools import product

import pytest

from belief_kernel import (
    CONTRACTIONS,
    REVISIONS,
    EpistemicState,
    FlavorMismatchError,
    ScopeError,
    Signature,
    TotalPreorder,
)
from belief_kernel.lab import (
    CATALOG,
    THEOREMS,
    check_postulate,
    equivalence_matrix,
    find_counterexample,
    lookup,
    matrix_markdown,
    replay,
    reproduces,
    universal_violation,
    verify_characterization,
)
from belief_kernel.lab.catalog import CONTRACTION
from belief_kernel.lab.engine import _failed
from belief_kernel.lab.mutants import MUTANTS
from belief_kernel.lab.tables import Tables
from belief_kernel.orders import enumerate_rank_tuples

import oracles

NATURAL, MODERATE, TRIVIAL = (CONTRACTIONS[k] for k in ("natural", "moderate", "trivial"))
AB = Signature.of_size(2)
RANKS = list(enumerate_rank_tuples(4))


# ------------------------------------------------------------------ catalog


def test_lookup_is_case_insensitive_and_alias_aware():
    assert lookup("ic2-cond").name == "IC2-COND"
    assert lookup("CR8").name == "IC1-REL"
    assert lookup("dp4").name == "IR4"
    assert lookup("IC2'").name == "IC2-PRIME"
    assert lookup("insertion").name == "INSERTION"
    with pytest.raises(KeyError):
        lookup("BOGUS")


def test_every_theorem_names_catalog_entries():
    for th in THEOREMS.values():
        for eq in th.equivalences:
            for _, names in eq.groups:
                for n in names:
                    assert lookup(n).flavor == th.flavor
            for n in eq.given:
                lookup(n)


# ------------------------------------------------ relational encodings vs oracle

REL_ORACLES = {
    "IC1-REL": oracles.cr8,
    "IC2-REL": oracles.cr9,
    "IC3-REL": oracles.cr10,
    "IC4-REL": oracles.cr11,
    "NC-REL": oracles.ncr,
    "MC-REL": oracles.mcr,
    "IND-C-REL": oracles.ind_rel,
}


@pytest.mark.parametrize("name", list(REL_ORACLES))
@pytest.mark.parametrize("op", [*CONTRACTIONS.values(), *MUTANTS.values()], ids=lambda o: o.kind)
def test_relational_postulates_match_pairwise_oracle(op, name):
    p, oracle = lookup(name), REL_ORACLES[name]
    t = Tables(op, AB)
    for ranks, a in product(RANKS, range(16)):
        s = t.intern(ranks)
        before = op.assignment(ranks)
        after = op.assignment(op.change(ranks, a))
        assert (not _failed(p.body(t, s, a))) == oracle(before, after, oracles.as_set(a))


def _agm_contraction_oracle(op):
    """C1-C7 on the operator's belief maps, straight from their set-theoretic reading."""
    full = AB.full
    for ranks in RANKS:
        st = EpistemicState(TotalPreorder(AB, ranks))
        k = st.beliefs.mask
        bel = {a: op.apply(st, a).beliefs.mask for a in range(16)}
        for a in range(16):
            if k & ~bel[a]:
                return False  # C1
            if k & ~a and bel[a] != k:
                return False  # C2 plus C1
            if a != full and bel[a] & ~a == 0:
                return False  # C3
            if bel[a] & a & ~k:
                return False  # C4
            for b in range(16):
                if bel[a & b] & ~(bel[a] | bel[b]):
                    return False  # C6
                if bel[a & b] & ~b and bel[b] & ~bel[a & b]:
                    return False  # C7
    return True


@pytest.mark.parametrize("op", [*CONTRACTIONS.values(), *MUTANTS.values()], ids=lambda o: o.kind)
def test_agm_verdicts_match_direct_oracle(op):
    lab = all(check_postulate(op, f"C{i}", AB).holds for i in range(1, 8))
    assert lab == _agm_contraction_oracle(op)


# --------------------------------------------------------------- verdicts


def test_moderate_ic1_holds_with_full_instance_count():
    v = check_postulate(MODERATE, "IC1", 2)
    assert v.holds
    assert v.checks_performed == 75 * 16 * 16
    assert v.witness is None


def test_natural_insertion_holds():
    assert check_postulate(NATURAL, "INSERTION", 2).holds


@pytest.mark.parametrize("name", ["IR1-CONTR", "IR2-CONTR", "IR3-CONTR"])
@pytest.mark.parametrize("op", list(CONTRACTIONS.values()), ids=lambda o: o.kind)
def test_revision_principles_read_for_contraction_fail(op, name):
    v = check_postulate(op, name, 2)
    assert v.status == "fails"
    assert reproduces(op, v.witness)


def test_vacuous_instances_are_tallied():
    v = check_postulate(MODERATE, "IR4-REL-CONTR", 2)
    assert 0 < v.vacuous < v.checks_performed
    v = check_postulate(MODERATE, "C1", 2)
    assert v.vacuous == 0


def test_verdict_json_shape():
    v = check_postulate(TRIVIAL, "IND-C", 2)
    data = v.to_json()
    assert set(data) >= {"postulate", "operator", "scope", "status", "checks_performed", "witness"}
    assert data["scope"] == {"signature_size": 2, "mode": "exhaustive"}
    assert set(data["witness"]["formulas"]) == {"alpha", "beta", "gamma"}


def test_scope_and_flavor_errors():
    with pytest.raises(ScopeError):
        check_postulate(NATURAL, "C1", 3)
    with pytest.raises(ScopeError):
        check_postulate(NATURAL, "C1", 4, "sampled")
    with pytest.raises(FlavorMismatchError):
        check_postulate(NATURAL, "R1", 2)
    with pytest.raises(FlavorMismatchError):
        check_postulate(REVISIONS["lex"], "C1", 2)


def test_sampled_mode_is_seeded():
    a = check_postulate(TRIVIAL, "IND-C", 3, "sampled", seed=7, count=500)
    b = check_postulate(TRIVIAL, "IND-C", 3, "sampled", seed=7, count=500)
    assert a == b and a.witness == b.witness
    assert a.checks_performed == 500
    assert a.to_json()["scope"] == {"signature_size": 3, "mode": "sampled", "seed": 7, "count": 500}


# ------------------------------------------------------------- determinism


@pytest.mark.parametrize("name", ["IND-C", "IC2-PRIME", "KPP4"])
def test_parallel_sweep_matches_serial(name):
    op = TRIVIAL if name == "IND-C" else NATURAL
    serial = check_postulate(op, name, 2, workers=1)
    parallel = check_postulate(op, name, 2, workers=2)
    assert serial == parallel
    assert serial.witness == parallel.witness


def test_parallel_sampled_matches_serial():
    serial = check_postulate(NATURAL, "IND-C", 3, "sampled", seed=3, count=400, workers=1)
    parallel = check_postulate(NATURAL, "IND-C", 3, "sampled", seed=3, count=400, workers=3)
    assert serial == parallel and serial.witness == parallel.witness


def test_worker_count_from_environment(monkeypatch):
    monkeypatch.setenv("BELIEF_KERNEL_WORKERS", "2")
    assert check_postulate(TRIVIAL, "IND-C-REL", 2) == check_postulate(TRIVIAL, "IND-C-REL", 2, workers=1)


# ------------------------------------------------------------ counterexamples


def test_trivial_independence_counterexample():
    w = find_counterexample(TRIVIAL, "IND-C", 2)
    assert w is not None and reproduces(TRIVIAL, w)


def test_left_half_counterexample_for_natural():
    w = find_counterexample(NATURAL, "IC1-LEFT", 2)
    assert w is not None and reproduces(NATURAL, w)


def test_no_counterexample_when_postulate_holds():
    assert find_counterexample(MODERATE, "C1", 2) is None


def test_replay_returns_violation_on_fresh_tables():
    v = check_postulate(NATURAL, "IC2-PRIME", 2)
    assert _failed(replay(NATURAL, v.witness))


@pytest.mark.parametrize("name", ["IR1-CONTR", "IR2-CONTR", "IR3-CONTR", "IC1-LEFT", "IC2-LEFT", "IC2-PRIME"])
def test_universal_violations(name):
    uw = universal_violation(name, 2)
    assert uw is not None
    priors = [r for r in RANKS if oracles.as_mask(oracles.o_bottom(r)) == uw.belief_models]
    assert [c[0] for c in uw.cases] == priors
    assert uw.to_json()["postulate"] == lookup(name).name


@pytest.mark.parametrize("name", ["IC1-RIGHT", "IND-C", "C4"])
def test_no_universal_violation_for_satisfiable_postulates(name):
    assert universal_violation(name, 2) is None


def test_universal_search_rejects_revision_postulates():
    with pytest.raises(ValueError):
        universal_violation("R1", 2)


# ------------------------------------------------------------ pointwise forms


@pytest.mark.parametrize("op", list(CONTRACTIONS.values()), ids=lambda o: o.kind)
def test_independence_forms_agree_per_state_and_input(op):
    rel, bel, cond = lookup("IND-C-REL"), lookup("IND-C"), lookup("IND-C-COND")
    t = Tables(op, AB)
    for ranks, a in product(RANKS, range(16)):
        s = t.intern(ranks)
        x = not _failed(rel.body(t, s, a))
        y = all(not _failed(bel.body(t, s, a, b, g)) for b in range(16) for g in range(16))
        z = all(not _failed(cond.body(t, s, a, b, g)) for b in range(16) for g in range(16))
        assert x == y == z


@pytest.mark.parametrize("op", list(REVISIONS.values()), ids=lambda o: o.kind)
def test_revision_forms_agree(op):
    for key in ("ir-dp", "ir-min", "ir-ind", "ir-lex"):
        assert verify_characterization(op, key, 2).passed


# ----------------------------------------------------------------- theorems


@pytest.mark.parametrize(
    "key", ["prop9", "prop13", "prop17_18", "prop25", "alt", "halves", "weak", "prop31", "prop34", "prop35"]
)
@pytest.mark.parametrize("op", list(CONTRACTIONS.values()), ids=lambda o: o.kind)
def test_characterizations_agree(op, key):
    report = verify_characterization(op, key, 2)
    assert report.passed, report.to_json()


def test_order_breaking_mutant_fails_every_group_together():
    report = verify_characterization(MUTANTS["swap-countermodels"], "thm1", 2)
    assert report.passed
    assert report.equivalences[0].vector == [False] * 6


def test_precondition_failure_is_reported():
    report = verify_characterization(MUTANTS["drop-beliefs"], "thm1", 2)
    assert report.status == "PRECONDITION-FAILED"
    assert report.precondition["C1"] == "fails"
    report = verify_characterization(MUTANTS["unflattened-trivial"], "thm1", 2)
    assert report.status == "PRECONDITION-FAILED"
    assert report.precondition["COMPAT"] == "fails"


def test_theorem_flavor_mismatch():
    with pytest.raises(ValueError):
        verify_characterization(REVISIONS["natural"], "thm1", 2)


def test_expected_verdict_vectors():
    assert verify_characterization(MODERATE, "prop9", 2).equivalences[0].vector == [False, False]
    assert verify_characterization(NATURAL, "prop34", 2).equivalences[0].vector == [True] * 4
    assert verify_characterization(MODERATE, "prop31", 2).equivalences[0].vector == [True] * 3
    assert verify_characterization(TRIVIAL, "prop31", 2).equivalences[0].vector == [False] * 3


# -------------------------------------------------------------------- matrix


def test_equivalence_matrix_rows():
    names = ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "IC1", "IC2", "IC3", "IC4",
             "KPP1", "KPP2", "KPP3", "KPP4", "IND-C", "MC", "NC", "INSERTION", "R1"]
    table = equivalence_matrix(list(CONTRACTIONS.values()), names, 2)
    trivial, moderate, natural = table["contract-trivial"], table["contract-moderate"], table["contract-natural"]
    assert all(trivial[f"C{i}"] == "holds" for i in range(1, 8))
    assert trivial["IND-C"] == "fails"
    for n in ["IC1", "IC2", "IC3", "IC4", "KPP1", "KPP2", "KPP3", "KPP4", "IND-C", "MC"]:
        assert moderate[n] == "holds"
    assert natural["NC"] == natural["INSERTION"] == "holds"
    assert natural["MC"] == "fails"
    assert natural["R1"] == "n/a"
    md = matrix_markdown(table)
    assert md.splitlines()[0].startswith("| operator | C1 |")
    assert len(md.splitlines()) == 2 + 3


def test_backward_kpp4_reading_fails_for_every_order_preserving_contraction():
    for op in CONTRACTIONS.values():
        v = check_postulate(op, "KPP4-LITERAL", 2)
        assert v.status == "fails" and reproduces(op, v.witness)


def test_catalog_flavors_are_consistent():
    for p in CATALOG.values():
        assert p.flavor in ("contraction", "revision")
        assert 1 <= p.arity <= 3
        if p.flavor == CONTRACTION:
            assert not any(p.consistent)
