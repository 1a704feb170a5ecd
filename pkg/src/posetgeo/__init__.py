"""Exact-arithmetic engine for event posets: chain projections,
interval quantification, collinearity classification and the emergent
Euclidean structure (coordination, orthogonality, fences, grids and the
discrete dot, wedge and geometric products)."""

from .collinearity import (
    CollinearityCase,
    ProjCode,
    SideClass,
    census,
    chain_order,
    chains_properly_collinear,
    classify_collinearity,
    in_subspace,
    is_properly_collinear,
    projection_code,
    side_of,
)
from .coordination import (
    SimplexMode,
    are_coordinated,
    check_orthogonal_subspaces,
    concatenate_orthogonal,
    dimension_count,
    pythagoras_check,
    simplex_table,
)
from .errors import PosetGeoError
from .fence import (
    DotResult,
    Fence,
    Grid,
    chain_pair_distance,
    dot_product,
    event_chain_distance_sq,
    geometric_identity_check,
    grid_displacement_sq,
    is_orthogonal_grid,
    parallel_postulate_check,
    validate_fence,
    validate_grid,
    wedge_product,
)
from .generators import (
    MetricConfig,
    MetricPoset,
    WorldlineSpec,
    build_metric_poset,
    collinear_config,
    dotprod_config,
    grid_config,
    lattice_1p1,
    pythagoras_config,
    random_dag,
    simplex_config,
    sqrt_exact,
)
from .poset import Chain, Poset
from .projection import (
    IntervalClass,
    Projector,
    QuantPair,
    Side,
    backward_project,
    classify_interval,
    forward_project,
    interval_scalar,
    quantify_event,
    quantify_interval_one_chain,
    quantify_interval_two_chains,
    sym_antisym_decompose,
)
from .serialize import dump_json, load_json, poset_from_doc, poset_to_doc, to_dot

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "CollinearityCase",
    "DotResult",
    "Fence",
    "Grid",
    "IntervalClass",
    "MetricConfig",
    "MetricPoset",
    "Poset",
    "PosetGeoError",
    "ProjCode",
    "Projector",
    "QuantPair",
    "Side",
    "SideClass",
    "SimplexMode",
    "WorldlineSpec",
    "are_coordinated",
    "backward_project",
    "build_metric_poset",
    "census",
    "chain_order",
    "chain_pair_distance",
    "chains_properly_collinear",
    "check_orthogonal_subspaces",
    "classify_collinearity",
    "classify_interval",
    "collinear_config",
    "concatenate_orthogonal",
    "dimension_count",
    "dot_product",
    "dotprod_config",
    "dump_json",
    "event_chain_distance_sq",
    "forward_project",
    "geometric_identity_check",
    "grid_config",
    "grid_displacement_sq",
    "in_subspace",
    "interval_scalar",
    "is_orthogonal_grid",
    "is_properly_collinear",
    "lattice_1p1",
    "load_json",
    "parallel_postulate_check",
    "poset_from_doc",
    "poset_to_doc",
    "projection_code",
    "pythagoras_check",
    "pythagoras_config",
    "quantify_event",
    "quantify_interval_one_chain",
    "quantify_interval_two_chains",
    "random_dag",
    "side_of",
    "simplex_config",
    "simplex_table",
    "sqrt_exact",
    "sym_antisym_decompose",
    "to_dot",
    "validate_fence",
    "validate_grid",
    "wedge_product",
]
