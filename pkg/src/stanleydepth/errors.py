"""Shared exception types.

The CLI maps these onto stable exit codes, so everything below the CLI
raises one of these rather than bare ValueError/RuntimeError.
"""


class DimensionError(ValueError):
    """Operands live over a different number of variables."""


class DomainError(ValueError):
    """A precondition on the mathematical input is violated."""


class ZeroModuleError(DomainError):
    """An invariant of the zero module was requested."""


class ResourceError(RuntimeError):
    """A configured grid-size, node or time budget was exceeded.

    ``bounds`` carries whatever certified partial information was available
    when the budget ran out (e.g. best-known sdepth bounds).
    """

    def __init__(self, message: str, bounds: dict | None = None):
        super().__init__(message)
        self.bounds = dict(bounds or {})


class ParseError(ValueError):
    """Malformed textual input; ``position`` is a 0-based offset when known."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position
