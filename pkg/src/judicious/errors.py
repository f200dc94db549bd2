"""Exception hierarchy shared by every module of the toolkit."""

from __future__ import annotations

from typing import Any


class JudiciousError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraphError(JudiciousError, ValueError):
    """A graph violates a structural precondition."""


class InvalidPartitionError(JudiciousError, ValueError):
    """A partition is malformed (bad labels, empty parts, wrong length)."""


class MissingParameterError(JudiciousError, ValueError):
    """A bound formula was evaluated without one of its inputs."""


class BoundMismatchError(JudiciousError, ValueError):
    """A bound was requested for a partition with the wrong number of parts."""


class OracleCapError(JudiciousError, ValueError):
    """Exhaustive search refused because the instance exceeds the vertex cap."""


class ParseError(JudiciousError, ValueError):
    """An input file could not be parsed."""


class ProofAssertionError(JudiciousError, AssertionError):
    """A claim that the construction relies on did not hold at runtime.

    ``trace`` carries the serialized algorithm state at the point of failure
    so the event can be reproduced and inspected.
    """

    def __init__(self, message: str, trace: dict[str, Any] | None = None):
        super().__init__(message)
        self.trace = trace or {}
