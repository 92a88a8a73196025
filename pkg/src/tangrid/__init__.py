"""Class-preserving grid dissections of tangential quadrilaterals."""

from .centers import (
    CentersReport,
    RadiiQuartet,
    centers_report,
    diagonal_point,
    reciprocal_check,
    triple_grid_report,
    two_by_two_center,
    wu_check,
)
from .dissection import (
    CellReport,
    GridDissection,
    SquareTiling,
    dissect,
    dissect_square_tiling,
    t_junction_residual,
    validate,
)
from .geometry import (
    ConvexQuad,
    HalfAngleTangents,
    Incircle,
    Point2,
    QuadClass,
    QuadKind,
    Similarity,
    apply_similarity,
    classify,
    half_angle_tangents,
    incircle,
    is_tangential,
    line_intersection,
    pitot_defect,
    signed_area,
    similarity_from_pairs,
    triangle_inradius,
)
from .solver import NormalizedModel, SolverDiagnostics, normalize, solve_general, solve_trapezoid, t3_from_identity
from .transforms import (
    GeneralParams,
    MulPoint,
    TrapezoidParams,
    abscissa_oracle,
    canonical_quad,
    general_map,
    inradius_oracle,
    local_condition_residual,
    side_length_oracle,
    tangents_oracle,
    trapezoid_map,
)

__version__ = "0.1.0"
