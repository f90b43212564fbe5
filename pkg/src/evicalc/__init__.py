"""Exact-arithmetic belief structures and evidential reasoning.

Belief structures over finite frames with rational masses, the family of
conflict-handling combination rules, entailment checking with verifiable
witnesses, monotonicity analysis of evidence aggregation, and a small
default-knowledge language.
"""

from .core import (
    BeliefStructure,
    FocalSet,
    Frame,
    ProbabilityInterval,
    decimal6,
    mass_str,
    to_mass,
)
from .combine import (
    CELL_ROUTING_RULES,
    DEMPSTER,
    DUBOIS_PRADE,
    PRIORITY_FIRST,
    PRIORITY_SECOND,
    UNNORMALIZED,
    YAGER,
    CombinationRule,
    ProductCell,
    combine,
    combine_all,
    conflict_mass,
    discount,
    parse_rule,
    possibility,
    product_cells,
)
from .entailment import (
    EntailmentWitness,
    flow_entails,
    hedge,
    interval_contained,
    partition_entails,
    validate_witness,
    weaken_to,
)
from .monotonicity import (
    MonotonicityReport,
    SweepRow,
    canonical_pair,
    monotonic_step,
    pairwise_survey,
    sweep,
    sweep_csv,
)
from .kb import (
    Absolute,
    KnowledgeBase,
    Statement,
    Typical,
    compile_statement,
    infer,
    parse_kb,
    query,
    serialize_kb,
    typical_summary,
)
from . import errors
from . import io

__version__ = "0.1.0"

__all__ = [
    "BeliefStructure", "FocalSet", "Frame", "ProbabilityInterval",
    "decimal6", "mass_str", "to_mass",
    "CELL_ROUTING_RULES", "DEMPSTER", "DUBOIS_PRADE", "PRIORITY_FIRST",
    "PRIORITY_SECOND", "UNNORMALIZED", "YAGER", "CombinationRule",
    "ProductCell", "combine", "combine_all", "conflict_mass", "discount",
    "parse_rule", "possibility", "product_cells",
    "EntailmentWitness", "flow_entails", "hedge", "interval_contained",
    "partition_entails", "validate_witness", "weaken_to",
    "MonotonicityReport", "SweepRow", "canonical_pair", "monotonic_step",
    "pairwise_survey", "sweep", "sweep_csv",
    "Absolute", "KnowledgeBase", "Statement", "Typical", "compile_statement",
    "infer", "parse_kb", "query", "serialize_kb", "typical_summary",
    "errors", "io",
]
