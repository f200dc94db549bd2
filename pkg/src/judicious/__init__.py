"""Judicious k-partitions of weighted graphs with exactly verified bounds."""

__version__ = "0.1.0"

from .bounds import BoundId, BoundParams, BoundReport, Enclosure, eval_bound, report
from .errors import (
    BoundMismatchError,
    InvalidGraphError,
    InvalidPartitionError,
    JudiciousError,
    MissingParameterError,
    OracleCapError,
    ParseError,
    ProofAssertionError,
)
from .graph import (
    Partition,
    WeightedGraph,
    avg_weighted_degree,
    cut_weight,
    delete_vertices,
    induced_weight,
    max_part_weight,
    max_weighted_degree,
    part_weights,
    total_weight,
    weight_to_set,
    weighted_degree,
)
from .oracle import (
    JointResult,
    OracleResult,
    enumerate_kpartitions,
    exact_max_bisection,
    exact_max_kcut,
    exact_min_max_part,
    exists_joint,
    verify_proposition1,
)
from .partitioners import (
    AlgorithmTrace,
    LocalOptimalityCertificate,
    PartitionOutcome,
    balanced_kcut,
    derandomized_balanced_partition,
    judicious_3partition,
    judicious_bipartition,
    judicious_kpartition,
    local_search_refine,
)
