"""Exception types shared across the package."""


class GraphXCError(Exception):
    """Base class for all package errors."""


class ConfigurationError(GraphXCError):
    """Invalid scheme, preset, or hyperparameter choice."""


class GeometryError(GraphXCError):
    """Invalid molecular geometry (duplicate nuclei, non-hydrogen atoms)."""


class DimensionError(GraphXCError):
    """Shape or size mismatch between arrays/graphs/grids."""


class NumericalError(GraphXCError):
    """NaN encountered, eigensolver failure, or other numeric breakdown."""


class DivergenceError(NumericalError):
    """SCF energy left the physically plausible range."""


class CapacityError(GraphXCError):
    """Problem size exceeds the dense-storage limits of this code."""
