"""Zero-pronoun resolution over annotated discourse via center tracking.

Modules:

- model: core vocabulary (entities, roles, statuses, markers, transitions)
- salience: utterance structure and the language-parameterized Cf ranking
- engine: assignment enumeration, filtering, transition classification,
  zero-topic variants, preference selection
- discourse: the line-oriented annotation format and result serialization
- cli: the command-line driver
"""

from .errors import CenteringError, ParseError, ResolutionError
from .model import (
    Cb,
    Entity,
    GrammaticalRole,
    Marker,
    SalienceStatus,
    Transition,
    UNESTABLISHED,
    canonical_statuses,
    compare_transitions,
    status_for_role,
)
from .salience import (
    ArgumentSlot,
    CfList,
    EmpathyRule,
    LanguageConfig,
    Overt,
    Predicate,
    Utterance,
    Zero,
    empathy_locus,
    load_empathy_lexicon,
    load_language_config,
    rank_cf,
    salience_statuses,
)
from .engine import (
    Anchor,
    CenteringState,
    Interpretation,
    RejectReason,
    ResolutionResult,
    check_rule1,
    classify_transition,
    compute_cb,
    context_state,
    enumerate_assignments,
    establish_initial_state,
    freeze_assignment,
    realized_entities,
    resolve,
    resolve_discourse,
    zero_topic_variants,
)
from .discourse import (
    Context,
    Discourse,
    format_discourse,
    parse_discourse,
    serialize_result,
)

__version__ = "0.1.0"

__all__ = [
    "Anchor",
    "ArgumentSlot",
    "Cb",
    "CenteringError",
    "CenteringState",
    "CfList",
    "Context",
    "Discourse",
    "EmpathyRule",
    "Entity",
    "GrammaticalRole",
    "Interpretation",
    "LanguageConfig",
    "Marker",
    "Overt",
    "ParseError",
    "Predicate",
    "RejectReason",
    "ResolutionError",
    "ResolutionResult",
    "SalienceStatus",
    "Transition",
    "UNESTABLISHED",
    "Utterance",
    "Zero",
    "canonical_statuses",
    "check_rule1",
    "classify_transition",
    "compare_transitions",
    "compute_cb",
    "context_state",
    "empathy_locus",
    "enumerate_assignments",
    "establish_initial_state",
    "format_discourse",
    "freeze_assignment",
    "load_empathy_lexicon",
    "load_language_config",
    "parse_discourse",
    "rank_cf",
    "realized_entities",
    "resolve",
    "resolve_discourse",
    "salience_statuses",
    "serialize_result",
    "status_for_role",
]
