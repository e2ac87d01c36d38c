"""Attitude control simulation for a small underwater vehicle."""

from ._core import (
    AismcError,
    ParseError,
    SingularAttitude,
    Trajectory,
    ValidationError,
    __version__,
    allocate,
    allocation_matrix,
    compare,
    default_config,
    reference,
    run,
    total_rmse,
    trajectory_columns,
    transform_matrix,
    validate_config,
)

__all__ = [
    "AismcError",
    "ParseError",
    "SingularAttitude",
    "Trajectory",
    "ValidationError",
    "__version__",
    "allocate",
    "allocation_matrix",
    "compare",
    "default_config",
    "reference",
    "run",
    "total_rmse",
    "trajectory_columns",
    "transform_matrix",
    "validate_config",
]
