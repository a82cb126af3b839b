"""Exception types shared across the package."""

from __future__ import annotations


class PlexError(Exception):
    """Base class for all package errors."""


class ParseError(PlexError):
    """Raised on malformed textual input; carries a 1-based position."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class InvalidElement(PlexError):
    """An element term does not belong to the universe it was used with."""


class InvalidSubgroup(PlexError):
    """A subgroup description does not fit the group it was applied to."""


class PreconditionFailed(PlexError):
    """A builder or operation precondition does not hold."""


class DiscretenessViolated(PreconditionFailed):
    """The group part is not discretely embedded where that is required."""


class SubgroupChainViolated(PreconditionFailed):
    """Nested subgroup arguments are not contained in one another."""


class StructuralMismatch(PlexError):
    """A structurally computed value failed its semantic verification."""


class WrongBranch(PlexError):
    """A branch-specific decomposition step was applied to the other branch."""


class OnlyUnitIdempotent(PlexError):
    """A decomposition step needs a second positive idempotent and found none."""


class UnknownLaw(PlexError):
    """An unrecognized law identifier was passed to the law checker."""
