"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """A combinatorial or factorization guard was exceeded."""


class InternalConsistencyError(RuntimeError):
    """An arithmetic identity that the theory guarantees failed to hold.

    This firing always indicates a bug in this package, never bad input.
    """


class InexactDivisionError(ArithmeticError):
    """A formula divided two integers that do not divide exactly."""


class ParseError(ValueError):
    """Syntax error in the order-formula mini-language."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
