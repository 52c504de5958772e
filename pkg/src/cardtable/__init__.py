"""Deck-of-cards pairwise comparison tables for decision aiding.

Card counts between ranked levels are collected in an upper-triangular
comparison table, checked (and minimally repaired) for additive
consistency, turned into interval value scales and ratio weights, and
aggregated through a 2-additive Choquet integral; robustness over every
table compatible with imprecise or missing judgments is quantified with
rank-acceptability and pairwise-winning indices.
"""

from .capacity import (
    CapacityElicitation,
    CapacityViolation,
    DummyProjectRanking,
    TwoAdditiveCapacity,
    capacity_from_dcm,
    choquet_value,
    mobius_to_capacity,
    pair_id,
    validate_2additive,
)
from .errors import (
    BadRankingError,
    BadRatioError,
    CapacityInvalidError,
    CardTableError,
    ComboExplosionError,
    DomainExceededError,
    EmptyPolytopeError,
    InfeasibleError,
    NonExactCellError,
    NonIntervalCellError,
    NotConsistentError,
    OutOfRangeError,
    SchemaError,
)
from .project import (
    Alternative,
    CapacitySpec,
    Criterion,
    Project,
    load_project,
    project_from_dict,
    project_to_dict,
    save_project,
)
from .scales import RatioWeights, ValueScale, build_interval_scale, build_ratio_weights, interpolate
from .schema import load_table, save_table, table_from_dict, table_to_dict
from .smaa import (
    EvaluationCombination,
    SmaaResult,
    enumerate_combinations,
    pairwise_winning,
    rank_acceptability,
    run_smaa,
    sample_combinations,
)
from .solver import (
    CompletionEnumeration,
    IntervalRepair,
    MissingCompletion,
    RepairSolution,
    complete_missing,
    count_extractable,
    enumerate_completions,
    enumerate_precise_extractions,
    enumerate_repairs,
    interval_repair,
    mixed_repair,
    repair_min_changes,
    sample_continuous_tables,
)
from .table import (
    MAX_CARDS,
    MISSING,
    Cell,
    Exact,
    GapVector,
    Interval,
    Missing,
    PairwiseTable,
    Violation,
    check_consistency,
    complete_from_consecutive,
    export_bars,
    export_graph,
    gaps_from_table,
    table_from_gaps,
)

__version__ = "0.1.0"
