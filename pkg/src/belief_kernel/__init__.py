"""Iterated belief contraction and revision over total preorders, with a postulate lab."""

from .conditionals import Conditional, acceptance_bridge_check, parse_conditional, state_accepts
from .errors import (
    BeliefKernelError,
    FlavorMismatchError,
    FormulaSyntaxError,
    InconsistentInputError,
    PreorderFormatError,
    ScopeError,
    ScriptError,
    UnknownAtomError,
)
from .logic import (
    BeliefSet,
    Formula,
    Signature,
    World,
    alpha_equivalent,
    entails,
    formula_from_models,
    models_of,
    parse_formula,
)
from .operators import (
    CONTRACTIONS,
    REVISIONS,
    ChangeOperator,
    apply_script,
    contract_moderate,
    contract_natural,
    contract_trivial,
    contracted_belief_models,
    get_operator,
    revise_lexicographic,
    revise_natural,
    revised_belief_models,
)
from .orders import (
    EpistemicState,
    TotalPreorder,
    beliefs,
    enumerate_preorders,
    formula_precedes,
    formula_strictly_precedes,
    min_worlds,
    preorder_accepts_conditional,
    preorder_accepts_contractional,
    state_for_belief_set,
)

__version__ = "0.1.0"
