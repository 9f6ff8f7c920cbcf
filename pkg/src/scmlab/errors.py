"""Exception types shared across the package.

Every error raised by scmlab derives from :class:`ScmLabError` so that the
service layer and the CLI can map "bad input / rejected query" uniformly.
"""

from __future__ import annotations


class ScmLabError(Exception):
    """Base class for all scmlab errors."""


class GraphError(ScmLabError):
    """Invalid graph structure (bad labels, bad edges)."""


class CycleError(GraphError):
    """The edge set admits no topological order."""

    def __init__(self, cycle: tuple[str, ...]):
        self.cycle = cycle
        super().__init__("directed cycle: " + " -> ".join(cycle))


class UnknownNodeError(GraphError):
    """A label does not name a declared node."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"unknown node {label!r}")


class InvalidQueryError(ScmLabError):
    """A query violates its preconditions (overlapping sets, bad targets)."""


class PathOverflowError(ScmLabError):
    """Path enumeration exceeded the configured cap."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} simple paths; raise the cap to enumerate them")


class ModelError(ScmLabError):
    """A structural model violates its invariants."""


class EnumerationCapError(ScmLabError):
    """An exact enumeration would exceed the configured cap."""

    def __init__(self, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(f"enumeration needs {required} tuples, cap is {cap}")


class PositivityError(ScmLabError):
    """A conditional is requested on a zero-probability event."""

    def __init__(self, message: str, treatment: dict | None = None, stratum: dict | None = None):
        self.treatment = treatment
        self.stratum = stratum
        super().__init__(message)


class FormatError(ScmLabError):
    """An input document cannot be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}: {message}" if column is None else f"line {line}, column {column}: {message}"
        super().__init__(message)


class QueryGrammarError(ScmLabError):
    """A distribution query string cannot be parsed."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"position {position}: {message}")


class ProfileError(ScmLabError):
    """A random-model generator profile is out of bounds."""
