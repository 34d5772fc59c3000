"""Distance-based invariants of free trees.

Eccentricity, nearest-leaf distance ("uniformity"), their gap, and distance
sums, per vertex and summed; the extremal families attaining them; exhaustive
enumeration of non-isomorphic trees; and a claim catalog verified over those
universes.
"""

from .constructions import (
    binary_caterpillar,
    dumbbell,
    formula_delta_star,
    formula_ld_path,
    formula_ld_star,
    formula_uni_dumbbell_max,
    formula_uni_min,
    formula_uni_path,
    move_subtree,
    path,
    star,
    starlike,
)
from .enumeration import (
    TreeUniverse,
    free_trees,
    free_trees_with_internal,
    pruefer_dedup_count,
    random_tree,
    stripe,
)
from .errors import TreeInvError
from .invariants import (
    DeltaMinLocation,
    InvariantSummary,
    VertexProfile,
    all_pairs_distances,
    delta_min_location,
    profile_fast,
    profile_oracle,
    summarize,
)
from .tree import (
    CanonicalCode,
    Tree,
    canonical_code,
    from_edge_list,
    from_edge_text,
    from_pruefer,
    from_pruefer_text,
    internal_count,
    leaves,
    to_edge_text,
    to_pruefer,
    to_pruefer_text,
)
from .verify import (
    CLAIMS,
    Claim,
    SearchResult,
    TheoremReport,
    all_claim_ids,
    check,
    emit_report,
    search,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "CLAIMS",
    "CanonicalCode",
    "Claim",
    "DeltaMinLocation",
    "InvariantSummary",
    "SearchResult",
    "TheoremReport",
    "Tree",
    "TreeInvError",
    "TreeUniverse",
    "VertexProfile",
    "all_claim_ids",
    "all_pairs_distances",
    "binary_caterpillar",
    "canonical_code",
    "check",
    "delta_min_location",
    "dumbbell",
    "emit_report",
    "formula_delta_star",
    "formula_ld_path",
    "formula_ld_star",
    "formula_uni_dumbbell_max",
    "formula_uni_min",
    "formula_uni_path",
    "free_trees",
    "free_trees_with_internal",
    "from_edge_list",
    "from_edge_text",
    "from_pruefer",
    "from_pruefer_text",
    "internal_count",
    "leaves",
    "move_subtree",
    "path",
    "profile_fast",
    "profile_oracle",
    "pruefer_dedup_count",
    "random_tree",
    "search",
    "star",
    "starlike",
    "stripe",
    "summarize",
    "to_edge_text",
    "to_pruefer",
    "to_pruefer_text",
    "verify_all",
]
