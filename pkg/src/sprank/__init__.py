"""Structural rank and resilience of 0/* sparsity patterns."""

from .augment import (
    AugmentationPlan,
    BMatching,
    best_within_budget,
    boost_by,
    complement_matching_structure,
    delta_star,
    fair_b_matching,
    increment_matchings,
    min_edges_for_target,
)
from .flow import (
    Arc,
    Cut,
    Flow,
    FlowNetwork,
    build_augmentation_network,
    build_resilience_network,
    induced_subgraph,
    max_flow,
    min_cost_max_flow,
    min_cut,
)
from .pattern import (
    BipartiteGraph,
    Matching,
    Ordering,
    SparsityPattern,
    complement,
    complete_graph,
    degree,
    from_bipartite,
    is_union_of_k_matchings,
    pattern_from_stars,
    precedes,
    to_bipartite,
    union_disjoint,
)
from .resilience import (
    ResilienceReport,
    extract_disjoint_matchings,
    strong_resilience,
    structural_rank,
    weak_resilience,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "AugmentationPlan",
    "BMatching",
    "BipartiteGraph",
    "Cut",
    "Flow",
    "FlowNetwork",
    "Matching",
    "Ordering",
    "ResilienceReport",
    "SparsityPattern",
    "best_within_budget",
    "boost_by",
    "build_augmentation_network",
    "build_resilience_network",
    "complement",
    "complement_matching_structure",
    "complete_graph",
    "degree",
    "delta_star",
    "extract_disjoint_matchings",
    "fair_b_matching",
    "from_bipartite",
    "increment_matchings",
    "induced_subgraph",
    "is_union_of_k_matchings",
    "max_flow",
    "min_cost_max_flow",
    "min_cut",
    "min_edges_for_target",
    "pattern_from_stars",
    "precedes",
    "strong_resilience",
    "structural_rank",
    "to_bipartite",
    "union_disjoint",
    "weak_resilience",
]
