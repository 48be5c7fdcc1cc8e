"""Exception hierarchy shared across the package."""


class PolyVemError(Exception):
    """Base class for all package errors."""


class GeometryError(PolyVemError):
    """Invalid or degenerate geometry (self-intersection, zero area, ...)."""


class FormatError(PolyVemError):
    """Malformed mesh input: bad keys, out-of-range indices, wrong shapes."""


class TopologyError(PolyVemError):
    """Inconsistent mesh connectivity, e.g. an edge shared by 3+ polygons."""


class ConfigError(PolyVemError):
    """Invalid space/problem/run configuration."""


class ConditioningError(PolyVemError):
    """Numerically dependent basis or singular Gram matrix."""


class UnisolvencyError(PolyVemError):
    """Dof evaluation matrix is rank deficient on some element."""


class CLSRankError(PolyVemError):
    """Constrained least squares rank conditions violated.

    Carries the observed ranks so callers can report which condition failed.
    """

    def __init__(self, message, rank_constraints=None, rank_stacked=None):
        super().__init__(message)
        self.rank_constraints = rank_constraints
        self.rank_stacked = rank_stacked


class SolverError(PolyVemError):
    """Linear/nonlinear solver failure; carries the residual history."""

    def __init__(self, message, history=None):
        super().__init__(message)
        self.history = list(history) if history is not None else []
