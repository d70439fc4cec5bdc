"""Exception hierarchy shared by all swtvc modules."""


class TvcError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRangeVertexError(TvcError):
    pass


class OutOfRangeLabelError(TvcError):
    pass


class SelfLoopError(TvcError):
    pass


class BadDeltaError(TvcError):
    pass


class NotAStarError(TvcError):
    """A snapshot has no common endpoint among its active edges.

    ``time_step`` identifies the offending snapshot.
    """

    def __init__(self, time_step, message=None):
        self.time_step = time_step
        super().__init__(message or f"snapshot at t={time_step} is not a star")


class BadConfigError(TvcError):
    pass


class ParseError(TvcError):
    """Malformed input file; ``line`` is the 1-based offending line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DuplicateAppearanceError(TvcError):
    pass


class EmptyInputError(TvcError):
    pass


class NegativeTimestampError(TvcError):
    pass


class TooLargeError(TvcError):
    pass


class BudgetExceededError(TvcError):
    """The exact solver hit its node limit before proving optimality."""


class NonPositiveSampleError(TvcError):
    pass
