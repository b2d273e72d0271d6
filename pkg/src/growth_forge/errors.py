"""Exception hierarchy shared by every module."""


class GrowthForgeError(Exception):
    """Base class for all library errors."""


class InvalidArgument(GrowthForgeError, ValueError):
    pass


class BudgetExceeded(GrowthForgeError):
    """An enumeration or materialization would exceed its configured budget."""


class NilpotentInput(GrowthForgeError, ValueError):
    """The element supplied turned out to be nilpotent."""

    def __init__(self, message, power=None):
        super().__init__(message)
        self.power = power


class ExpressibilityError(GrowthForgeError):
    pass


class ParseError(GrowthForgeError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
