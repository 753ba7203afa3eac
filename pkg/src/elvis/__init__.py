"""Time-optimal interface crossings between two media with convex velocity sets."""

from .errors import (
    BracketExpansionFailedError,
    DegenerateDimensionsError,
    ElvisError,
    NonConvexError,
    NotIsotropicError,
    OriginNotInteriorError,
    ProblemFormatError,
    ValidationError,
    ZeroVectorError,
)
from .geometry import (
    Ball,
    Ellipse,
    NormalFace,
    Polygon,
    gauge,
    normal_face,
    polar,
    support,
    validate,
)
from .oracle import (
    OracleConfig,
    contains,
    flat_minimum_interval,
    gauge_by_membership,
    minimize_objective,
    sample_interior,
)
from .probfile import (
    SweepSpec,
    dump_problem,
    load_problem,
    load_sweep,
    parse_problem,
    parse_sweep,
)
from .solver import (
    BisectionTrace,
    DeltaInterval,
    ElvisProblem,
    SolveResult,
    TraceRow,
    classical_snell_angles,
    crossing_time,
    delta,
    expand_bracket,
    make_problem,
    solve,
)

__all__ = [
    "Ball",
    "BisectionTrace",
    "BracketExpansionFailedError",
    "DegenerateDimensionsError",
    "DeltaInterval",
    "Ellipse",
    "ElvisError",
    "ElvisProblem",
    "NonConvexError",
    "NormalFace",
    "NotIsotropicError",
    "OracleConfig",
    "OriginNotInteriorError",
    "Polygon",
    "ProblemFormatError",
    "SolveResult",
    "SweepSpec",
    "TraceRow",
    "ValidationError",
    "ZeroVectorError",
    "classical_snell_angles",
    "contains",
    "crossing_time",
    "delta",
    "dump_problem",
    "expand_bracket",
    "flat_minimum_interval",
    "gauge",
    "gauge_by_membership",
    "load_problem",
    "load_sweep",
    "make_problem",
    "minimize_objective",
    "normal_face",
    "parse_problem",
    "parse_sweep",
    "polar",
    "sample_interior",
    "solve",
    "support",
    "validate",
]

__version__ = "0.1.0"
