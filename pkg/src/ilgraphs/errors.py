"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph6 / edge-list text, or a format that cannot hold the graph."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class BudgetExceeded(RuntimeError):
    """An exact search ran out of budget before reaching a verdict.

    This is a third outcome, distinct from a negative answer.
    """

    def __init__(self, message, *, used=None, partial=None):
        super().__init__(message)
        self.used = used
        self.partial = partial
