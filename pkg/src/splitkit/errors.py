"""Exception hierarchy shared by every splitkit module."""


class SplitkitError(Exception):
    """Base class for all library errors."""


class ValidationError(SplitkitError, ValueError):
    """Input data violates a structural invariant."""


class PreconditionError(SplitkitError):
    """An operation was called on data that does not meet its precondition."""


class InapplicableError(SplitkitError):
    """A construction's hypotheses fail for the requested parameters."""


class ObstructionError(PreconditionError):
    """A splitting hypothesis is provably impossible for the given data."""


class SearchInconclusive(SplitkitError):
    """The search hit its time budget before reaching a verdict."""


class CeilingExceeded(SplitkitError, ValueError):
    """The group is too large for exhaustive enumeration."""


class InternalConsistencyError(SplitkitError, AssertionError):
    """A proved structural property failed; this indicates a bug."""
