"""Exception hierarchy shared by every module of the package."""


class TDCError(Exception):
    """Base class for all errors raised by centraltdc."""


class ParameterError(TDCError, ValueError):
    """An argument lies outside the range an operation accepts."""


class CapacityError(TDCError):
    """The input is larger than the configured cap of an exact routine."""


class UndefinedError(TDCError, ValueError):
    """The requested invariant does not exist for this graph (isolated vertex)."""


class MalformedColoringError(TDCError, ValueError):
    """A coloring is not total over the graph or its classes are not contiguous."""


class ParseError(TDCError, ValueError):
    """Malformed graph or coloring input. ``offset`` is the byte position, if known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class BudgetExceeded(TDCError):
    """An exact search ran out of time.

    ``lower`` is the best certified lower bound at the moment the search
    stopped and ``upper`` the best value attained by a known witness.
    """

    def __init__(self, lower: int, upper: int | None, witness=None):
        super().__init__(f"time budget exceeded; value in [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper
        self.witness = witness
