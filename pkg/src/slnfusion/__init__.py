"""Exact tensor-product, polytope, and fusion-product computations for sl_n."""

from .typea import (
    RankContext,
    Root,
    Weight,
    dominance_leq,
    dominant_weight_multiplicities,
    orbit_size,
    pairing,
    positive_roots,
    root_as_weight,
    weight_multiplicities,
    weyl_dim,
    weyl_orbit,
)
from .tensor import (
    DecompositionMap,
    SignedDecompositionMap,
    lr_coefficients,
    schur_product_diff,
)
from .dyck import (
    BoundVector,
    DyckPath,
    LatticePoint,
    PathInequality,
    bounds_from_pair,
    bounds_from_weight,
    dominant_points,
    dyck_paths,
    inequalities,
    lattice_points,
)
from .cases import (
    CaseReport,
    is_much_greater,
    large_case_mults,
    pieri_column,
    pieri_row,
    proven_regime,
    rect_hw_points,
    rect_mults_formula,
    sl2_mults,
    verify_case,
)
from .fusion import (
    DimensionCapError,
    ExplicitModule,
    GradedDecomposition,
    build_irrep,
    fusion_graded,
    peel_character,
)
from .poset import (
    PosetReport,
    WeightPair,
    WeylModulePrediction,
    enumerate_pairs,
    maximal_pair,
    order_leq,
    poset_report,
    schur_monotonicity_check,
    weyl_character_prediction,
)
from .suite import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "BoundVector",
    "CaseReport",
    "CheckResult",
    "DecompositionMap",
    "DimensionCapError",
    "DyckPath",
    "ExplicitModule",
    "GradedDecomposition",
    "LatticePoint",
    "PathInequality",
    "PosetReport",
    "RankContext",
    "Root",
    "SignedDecompositionMap",
    "Weight",
    "WeightPair",
    "WeylModulePrediction",
    "bounds_from_pair",
    "bounds_from_weight",
    "build_irrep",
    "dominance_leq",
    "dominant_points",
    "dominant_weight_multiplicities",
    "dyck_paths",
    "enumerate_pairs",
    "fusion_graded",
    "inequalities",
    "is_much_greater",
    "large_case_mults",
    "lattice_points",
    "lr_coefficients",
    "maximal_pair",
    "orbit_size",
    "order_leq",
    "pairing",
    "peel_character",
    "pieri_column",
    "pieri_row",
    "poset_report",
    "positive_roots",
    "proven_regime",
    "rect_hw_points",
    "rect_mults_formula",
    "root_as_weight",
    "run_all",
    "schur_monotonicity_check",
    "schur_product_diff",
    "sl2_mults",
    "verify_case",
    "weight_multiplicities",
    "weyl_character_prediction",
    "weyl_dim",
    "weyl_orbit",
]
