from typing import TypedDict, Any

__all__ = [
    "DefaultsInfo",
    "InvalidParameterError",
    "StructureError",
    "CapacityError",
    "SamplingFailure",
    "OutOfRegimeError",
    "HorizonError",
    "SampleTruncated",
    "CheckFailed",
    "MfpercCancel"
]

DefaultsInfo = TypedDict("DefaultsInfo", {
    # Hard cap on the horizon of exact non-backtracking evolution
    "nbrw_max_horizon": int,
    # Whole-graph rejections of the configuration model before giving up
    "regular_max_attempts": int,
    # Largest vertex count a generator may produce
    "max_vertices": int,
    # Complete graphs with more edges than this are kept implicit
    "implicit_complete_edges": int,
    "spectral_tol": float,
    "spectral_max_iter": int,
    # Materialized nodes allowed in one tree percolation sample
    "tree_node_cap": int,
    # Nodes allowed in one labelled covering tree
    "covering_tree_node_budget": int,
    "covering_tree_depth": int,
    # Components up to this size get an exact diameter
    "diameter_exact_max": int,
    "diameter_sweeps": int,
    # Largest component handled by dense mixing time evolution
    "mixing_max_size": int,
    "mixing_threshold": float,
    # Origins evolved together when averaging return profiles
    "average_profile_batch": int,
    # Open edges materialized for one percolation sample of an implicit complete graph
    "max_open_edges": int
})
"Numeric defaults read from ``config/defaults.json``."


class InvalidParameterError(ValueError):
    """A parameter lies outside the domain of an operation."""
    pass


class StructureError(ValueError):
    """The graph does not have the structure an operation requires (degree, regularity, connectivity)."""
    pass


class CapacityError(OverflowError):
    """A size limit from the configuration would be exceeded."""
    pass


class SamplingFailure(RuntimeError):
    """A rejection sampler ran out of attempts."""
    pass


class OutOfRegimeError(ValueError):
    """Parameters lie outside the regime in which a formula is defined."""

    def __init__(self, message: str, value: Any = None):
        super().__init__(message)
        self.value = value


class HorizonError(ValueError):
    """A return profile is too short for the requested computation."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class SampleTruncated(Warning):
    """
    Raised when a percolation sample grows beyond the node cap.
    The partial sample is available as ``sample``.
    """

    def __init__(self, message: str, sample: Any = None):
        super().__init__(message)
        self.sample = sample


class CheckFailed(AssertionError):
    """A check configured for an experiment did not pass."""
    pass


class MfpercCancel(Warning):
    """If raised, the application should terminate without an error."""
    pass
