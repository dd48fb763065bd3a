"""Equitable partitions of [n] and distance magic multipartite labelings.

A partition of {1, ..., n} into blocks of sizes p_1 <= ... <= p_k whose
blocks all sum to n(n+1)/(2k) is exactly a distance magic labeling of
the complete multipartite graph with those part sizes.  This package
decides when such partitions exist (proven for k <= 4, conjectured
beyond), constructs them, verifies the graph-level conditions, and runs
exhaustive desk-scale sweeps comparing the prefix condition against a
complete search.
"""

from .core import (
    BlockClass,
    INFINITE_WIDTH,
    Instance,
    Partition,
    canonical_blocks,
    classify,
    deviation,
    equivalent,
    implements,
    is_equitable,
    magic_sum,
    swap,
    swap_delta,
    width,
)
from .feasibility import (
    FeasibilityStatus,
    Verdict,
    feasibility,
    necessary_condition,
    prefix_top_sum,
)
from .graphs import (
    LabeledMultipartite,
    MagicCheck,
    labeling_from_partition,
    partition_from_labeling,
    verify_closed_magic_cycle,
    verify_distance_magic,
)
from .lab import (
    SweepReport,
    check_symmetric,
    descent_success,
    enumerate_size_sequences,
    sweep,
)
from .solver import (
    ExactResult,
    ExactStatus,
    SearchParams,
    SolveResult,
    SolveStats,
    SolveStatus,
    greedy_init,
    local_search,
    solve,
    solve_exact,
    solve_k2,
    solve_p1_eq_1,
)

__all__ = [
    "BlockClass",
    "INFINITE_WIDTH",
    "Instance",
    "Partition",
    "canonical_blocks",
    "classify",
    "deviation",
    "equivalent",
    "implements",
    "is_equitable",
    "magic_sum",
    "swap",
    "swap_delta",
    "width",
    "FeasibilityStatus",
    "Verdict",
    "feasibility",
    "necessary_condition",
    "prefix_top_sum",
    "LabeledMultipartite",
    "MagicCheck",
    "labeling_from_partition",
    "partition_from_labeling",
    "verify_closed_magic_cycle",
    "verify_distance_magic",
    "SweepReport",
    "check_symmetric",
    "descent_success",
    "enumerate_size_sequences",
    "sweep",
    "ExactResult",
    "ExactStatus",
    "SearchParams",
    "SolveResult",
    "SolveStats",
    "SolveStatus",
    "greedy_init",
    "local_search",
    "solve",
    "solve_exact",
    "solve_k2",
    "solve_p1_eq_1",
]

__version__ = "0.1.0"
