"""Exception hierarchy for racnshare.

Every error raised by the library derives from RacnShareError so callers
(and the CLI exit-code mapping) can distinguish bad input, oversized
instances, and exhausted search budgets.
"""


class RacnShareError(Exception):
    """Base class for all racnshare errors."""


class InvalidParameterError(RacnShareError, ValueError):
    """A structural parameter is out of range (for example p < 2)."""


class InvalidLabelingError(RacnShareError, ValueError):
    """A vertex labeling is not a bijection onto 1..n for its graph."""


class NotConnectedError(RacnShareError):
    """An operation requiring a connected graph was given a disconnected one."""


class InstanceTooLargeError(RacnShareError):
    """Exhaustive search was requested for a graph above the size cap."""


class BudgetExceededError(RacnShareError):
    """A search exceeded its node or enumeration budget."""


class InvalidConfigError(RacnShareError, ValueError):
    """A sharing configuration violates 1 <= threshold <= share_count <= 255,
    or the secret is empty."""


class InsufficientSharesError(RacnShareError):
    """Fewer shares than the reconstruction threshold were supplied."""


class DuplicateIndexError(RacnShareError):
    """Two supplied shares carry the same evaluation index."""


class LengthMismatchError(RacnShareError):
    """Supplied share payloads do not all have the same length."""


class UnreachableParticipantsError(RacnShareError):
    """Dissemination cannot reach some participants (disconnected graph)."""

    def __init__(self, unreachable):
        self.unreachable = tuple(unreachable)
        super().__init__(f"unreachable participants: {', '.join(map(str, self.unreachable))}")
