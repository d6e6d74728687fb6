"""Exception taxonomy shared by all coarselab modules.

The CLI maps InvalidInputError to exit code 2 and NumericalFailureError to
exit code 3; everything else is a bug.
"""


class CoarselabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(CoarselabError, ValueError):
    """A precondition on user-supplied data is violated."""


class UnsupportedError(CoarselabError):
    """The requested exact decision is not available for this input class."""


class DegreeViolationError(InvalidInputError):
    """A generated window exceeds the declared degree bound of its rule."""


class ResolutionError(InvalidInputError):
    """Sampled data is too coarse for the requested computation."""


class ContradictionError(CoarselabError):
    """An internal consistency check failed; signals an invalid certificate."""


class NumericalFailureError(CoarselabError):
    """A numerical routine failed to meet its accuracy contract."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
