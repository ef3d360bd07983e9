"""Postulate laboratory: catalog, sweeps, counterexample search and characterization checks."""

from .catalog import CATALOG, Postulate, lookup, names
from .engine import (
    EXHAUSTIVE,
    SAMPLED,
    PostulateVerdict,
    Scope,
    Witness,
    check_postulate,
    replay,
    reproduces,
)
from .search import UniversalWitness, find_counterexample, universal_violation
from .theorems import (
    THEOREMS,
    CharacterizationReport,
    equivalence_matrix,
    matrix_markdown,
    verify_characterization,
)

__all__ = [
    "CATALOG",
    "EXHAUSTIVE",
    "SAMPLED",
    "THEOREMS",
    "CharacterizationReport",
    "Postulate",
    "PostulateVerdict",
    "Scope",
    "UniversalWitness",
    "Witness",
    "check_postulate",
    "equivalence_matrix",
    "find_counterexample",
    "lookup",
    "matrix_markdown",
    "names",
    "replay",
    "reproduces",
    "universal_violation",
    "verify_characterization",
]
