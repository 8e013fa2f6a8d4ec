"""Dual quaternion motion polynomials, Darboux motion factorizations, 7R linkages.

Exact rational and floating backends share one code path: coefficients
are Fractions/ints (exact) or floats, and every algebraic identity in
the package can be checked with zero tolerance on the exact backend.
"""

from .conics import ConicClass, ConicFit, PlaneFit, TrajectoryReport, trace_fit
from .darboux import (
    CircularTranslationReport,
    DarbouxParams,
    Factorization,
    circular_translation_check,
    darboux_c,
    darboux_c0,
    darboux_point_path,
    derive_fi,
    derive_fiii,
    factor_fi,
    factor_fii,
    factor_fiii,
    factor_fiv,
    fiv_companion_fi,
    frame_change,
    phi_grid,
    t_grid,
)
from .dualquat import (
    AxisLine,
    DisplacementKind,
    DualQuaternion,
    Quaternion,
    projective_distance,
    projectively_equal,
    transform_axis,
)
from .errors import (
    ClosureFailure,
    DegenerateParams,
    InsufficientSamples,
    KinematicsError,
    NonGeneric,
    NonInvertibleLeader,
    NotADisplacement,
    NotADivisor,
    NotARotation,
    NotRotational,
    SingularChoice,
    ZeroPrimal,
)
from .linkage import (
    ConfigSample,
    Joint,
    Linkage,
    MobilityReport,
    SarrusDecomposition,
    SubstructureReport,
    build_linkage,
    closes_exactly,
    closure_residual,
    joint_angle,
    mobility_at,
    parallel_groups,
    screw_matrix,
    simulate,
    substructure_report,
    trace_point,
)
from .motionpoly import (
    MotionPoly,
    RealPoly,
    poly_product,
    right_factor_from_quadratic,
    t_squared_plus_one,
    verify_factorization,
)

__version__ = "0.1.0"

__all__ = [
    "AxisLine",
    "CircularTranslationReport",
    "ClosureFailure",
    "ConfigSample",
    "ConicClass",
    "ConicFit",
    "DarbouxParams",
    "DegenerateParams",
    "DisplacementKind",
    "DualQuaternion",
    "Factorization",
    "InsufficientSamples",
    "Joint",
    "KinematicsError",
    "Linkage",
    "MobilityReport",
    "MotionPoly",
    "NonGeneric",
    "NonInvertibleLeader",
    "NotADisplacement",
    "NotADivisor",
    "NotARotation",
    "NotRotational",
    "PlaneFit",
    "Quaternion",
    "RealPoly",
    "SarrusDecomposition",
    "SingularChoice",
    "SubstructureReport",
    "TrajectoryReport",
    "ZeroPrimal",
    "build_linkage",
    "circular_translation_check",
    "closes_exactly",
    "closure_residual",
    "darboux_c",
    "darboux_c0",
    "darboux_point_path",
    "derive_fi",
    "derive_fiii",
    "factor_fi",
    "factor_fii",
    "factor_fiii",
    "factor_fiv",
    "fiv_companion_fi",
    "frame_change",
    "joint_angle",
    "mobility_at",
    "parallel_groups",
    "phi_grid",
    "poly_product",
    "projective_distance",
    "projectively_equal",
    "right_factor_from_quadratic",
    "screw_matrix",
    "simulate",
    "substructure_report",
    "t_grid",
    "t_squared_plus_one",
    "trace_fit",
    "trace_point",
    "transform_axis",
    "verify_factorization",
    "__version__",
]
