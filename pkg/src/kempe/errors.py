"""Exception types shared across the package."""


class KempeError(Exception):
    """Base class for all package errors."""


class StructureError(KempeError):
    """A graph value violates a structural invariant (bad rotation system,
    wrong face census, non-planar embedding, mislabeled boundary)."""


class OperationError(KempeError):
    """An operation was called with arguments outside its domain
    (missing edge, adjacent pair, bad color index, illegal exchange)."""


class FixtureNotFoundError(KempeError):
    """Requested fixture name is not in the registry."""


class FixtureDataUnavailableError(KempeError):
    """The fixture is known by name but its graph data could not be
    ingested from a trustworthy source in this environment."""


class BudgetExceededError(KempeError):
    """A resource budget (state count, wall time) was exhausted.

    Carries whatever partial information is useful for reporting; results
    guarded by this error are never silently incomplete.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
