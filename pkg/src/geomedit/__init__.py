"""geomedit: exact minimum-movement editing of geometric intersection graphs.

Move unit intervals on the line with minimum total displacement so that
their intersection graph becomes edgeless, acyclic, or k-clique-free
(O(n log n), exact rational arithmetic), plus builders and verifiers for the
hardness constructions: weighted intervals encoding 3-Partition and weighted
unit-disk gadgets whose chain moves encode planar 3SAT.
"""

from .dispersal import (
    Block,
    DispersalInstance,
    DispersalResult,
    MovementVector,
    blocks_intersect_when_equispaced,
    breakpoints,
    disperse,
    disperse_by_block_merging,
    equispace_cost,
    equispace_displacements,
    initial_partition,
    median_anchor,
    merge_blocks,
)
from .gadgets import (
    CELL_VARIANTS,
    SLOTS,
    GadgetCollection,
    build_arm,
    build_cell_gadget,
    build_cell_variant,
    build_clause_component,
    build_clause_gadget,
    build_variable_gadget,
    clause_chain_script,
)
from .geometry import (
    K,
    Disk,
    Interval,
    Metric,
    Point,
    disks_intersect,
    intervals_intersect,
    lm_distance,
    moving_cost,
    moving_cost_within,
    sort_intervals,
)
from .graph import (
    IntersectionGraph,
    build_graph,
    has_k_clique,
    is_acyclic,
    is_edgeless,
    max_clique_interval,
)
from .lemmas import (
    BlockingReport,
    HoleReport,
    check_blocking_lemmas,
    check_cell_hole,
    check_square_hole_empty,
)
from .oracle import (
    OracleResult,
    ValidationResult,
    brute_force_disperse,
    validate_dispersal,
    validate_weighted_edgeless,
)
from .properties import (
    EditResult,
    PropertyViolation,
    solve_acyclic,
    solve_edgeless,
    solve_k_clique_free,
)
from .threepartition import (
    ThreePartitionInstance,
    WeightedIntervalInstance,
    build_3partition_instance,
    certificate_cost,
    certificate_movement,
)
from .zones import (
    ChainReport,
    ChainStep,
    InfeasibleMove,
    blocked_zone_contains,
    blocked_zone_radius,
    execute_chain_move,
    feasible_area_probe,
)

__version__ = "0.1.0"
