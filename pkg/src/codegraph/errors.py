"""Exception types shared across the package."""

from __future__ import annotations


class CodegraphError(Exception):
    """Base class for every error raised by this package."""


class CodeError(CodegraphError, ValueError):
    """A generating code failed to parse or validate."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class EmptyInput(CodeError):
    pass


class IllegalCharacter(CodeError):
    pass


class ZeroExponent(CodeError):
    pass


class LeadingOne(CodeError):
    pass


class TrailingZero(CodeError):
    pass


class DisconnectedGraph(CodegraphError, ValueError):
    pass


class SizeMismatch(CodegraphError, ValueError):
    pass


class InapplicableInput(CodegraphError, ValueError):
    """A closed form was asked for outside the range where it is stated."""


class BudgetExceeded(CodegraphError):
    """An exhaustive search would exceed its configured size budget."""


class NoThresholdSupergraph(CodegraphError):
    pass
