"""Exception types shared by every module in the package."""


class GraphError(ValueError):
    """Base class for all input/domain errors raised by this package."""


class CapacityError(GraphError):
    """A graph (or a request) exceeds the supported number of vertices."""


class DomainError(GraphError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(GraphError):
    """A documented precondition of the operation does not hold."""


class Graph6ParseError(GraphError):
    """Malformed graph6 text. ``offset`` is the index of the offending byte."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class NotALinearForest(GraphError):
    """Raised by :func:`linear_forest_spec` with the offending component."""

    def __init__(self, component):
        super().__init__(f"component {sorted(component)} is not a path")
        self.component = tuple(sorted(component))


class UnsupportedOrder(GraphError):
    """Enumeration or oracle request above the supported order."""
