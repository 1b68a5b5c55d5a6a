"""aplab: exact and Monte Carlo analysis of k-term APs in subsets of [n]."""

from .sets import GroundSet, ProblemParams, Progression
from . import kernels
from .core import (
    DegreeProfile,
    ap_count_in_interval,
    count_aps,
    count_aps_through,
    degree_profile,
    degree_sum_sides,
    enumerate_aps,
)
from .enumeration import (
    EnumerationResult,
    ap_threshold,
    count_all_apfree_sets,
    count_apfree_msets,
    count_deficient_msets,
    dense_ap_lower_bound_check,
    greedy_apfree_set,
    ternary_apfree_set,
)
from .extremal import (
    DecisionResult,
    ExtremalResult,
    apfree_decision,
    max_apfree_subset,
)
from .randomlab import (
    ApSampleStats,
    DeficiencyEstimate,
    SweepConfig,
    SweepPoint,
    SweepResult,
    estimate_deficient_fraction,
    expected_ap_count,
    sample_ap_count_stats,
    sample_binomial_set,
    sample_m_set,
    threshold_sweep,
    trial_rng,
    wilson_interval,
)
from .prooflab import (
    AdvancingVerdict,
    BadSequenceReport,
    DeletionFamilies,
    PartitionSequence,
    ProofParams,
    PZReport,
    ZBuildResult,
    ZStep,
    build_deletion_families,
    check_advancing,
    classify_bad_sequence,
    derive_proof_params,
    find_bad_certificate,
    is_ap_structured,
    paley_zygmund_check,
    saturated_set,
    second_moment_with_deletion,
    sequential_Z_builder,
)
from .records import RecordWriter, RunRecord, record_from_line
from .budget import BudgetExceededError, node_budget

__version__ = "0.1.0"

__all__ = [
    "GroundSet",
    "ProblemParams",
    "Progression",
    "kernels",
    "DegreeProfile",
    "ap_count_in_interval",
    "count_aps",
    "count_aps_through",
    "degree_profile",
    "degree_sum_sides",
    "enumerate_aps",
    "EnumerationResult",
    "ap_threshold",
    "count_all_apfree_sets",
    "count_apfree_msets",
    "count_deficient_msets",
    "dense_ap_lower_bound_check",
    "greedy_apfree_set",
    "ternary_apfree_set",
    "DecisionResult",
    "ExtremalResult",
    "apfree_decision",
    "max_apfree_subset",
    "ApSampleStats",
    "DeficiencyEstimate",
    "SweepConfig",
    "SweepPoint",
    "SweepResult",
    "estimate_deficient_fraction",
    "expected_ap_count",
    "sample_ap_count_stats",
    "sample_binomial_set",
    "sample_m_set",
    "threshold_sweep",
    "trial_rng",
    "wilson_interval",
    "AdvancingVerdict",
    "BadSequenceReport",
    "DeletionFamilies",
    "PartitionSequence",
    "ProofParams",
    "PZReport",
    "ZBuildResult",
    "ZStep",
    "build_deletion_families",
    "check_advancing",
    "classify_bad_sequence",
    "derive_proof_params",
    "find_bad_certificate",
    "is_ap_structured",
    "paley_zygmund_check",
    "saturated_set",
    "second_moment_with_deletion",
    "sequential_Z_builder",
    "RecordWriter",
    "RunRecord",
    "record_from_line",
    "BudgetExceededError",
    "node_budget",
    "__version__",
]
