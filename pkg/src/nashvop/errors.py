"""Exception types shared across the package."""

from __future__ import annotations


class NashvopError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(NashvopError):
    """Operands live in different ambient spaces."""


class EmptyInput(NashvopError):
    """An operation that needs a nonempty object received an empty one."""


class UnboundedInput(NashvopError):
    """A polyhedron expected to be bounded has a recession direction."""


class EmptySet(NashvopError):
    """A requested feasible set is empty."""


class EmptyDomain(NashvopError):
    """A parametric enumeration was asked to cover an empty domain."""


class InfeasibleCandidate(NashvopError):
    """A candidate point handed to an efficiency test violates the constraints."""


class InfeasiblePoint(NashvopError):
    """A point handed to an equilibrium check violates some player's constraints."""


class EmptyGrid(NashvopError):
    """A grid specification produces no candidate points."""


class CostSyntaxError(NashvopError):
    """A cost expression failed to parse.

    ``offset`` is the 0-based character position of the failure.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownVariable(NashvopError):
    """A cost expression references a variable outside the game's blocks."""
