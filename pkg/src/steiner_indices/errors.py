"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list input. Carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DisconnectedGraphError(ValueError):
    """Raised when an operation requires a connected graph.

    ``pair`` names two mutually unreachable vertices.
    """

    def __init__(self, u, v):
        super().__init__(f"graph is disconnected: no path between vertices {u} and {v}")
        self.pair = (u, v)


class NotPartialCubeClassError(ValueError):
    """Removing a Theta-class did not leave exactly two components."""

    def __init__(self, component_count):
        super().__init__(
            f"not a partial-cube class: removal leaves {component_count} components"
        )
        self.component_count = component_count


class PreconditionError(ValueError):
    """A documented precondition of an operation does not hold."""


class IntegralityError(ArithmeticError):
    """An exact division that a theorem guarantees to be integral was not.

    Signals an implementation bug or a violated precondition, never a
    rounding issue: all arithmetic is exact.
    """
