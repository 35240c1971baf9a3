class DomsetError(Exception):
    """Base class for errors raised by this package."""


class GraphError(DomsetError, ValueError):
    """Invalid input: malformed graph, vertex set, or parameter."""


class InvariantError(DomsetError, RuntimeError):
    """A property the algorithms guarantee was violated (an implementation bug)."""
