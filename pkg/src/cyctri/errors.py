"""Shared exception types."""


class CyctriError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CyctriError):
    """A graph or triangulation file is malformed."""


class CapExceeded(CyctriError):
    """A size argument exceeds a configured safety cap."""


class NotPersistent(CyctriError):
    """A persistent graph was required but the input fails a property.

    Attributes:
        violation: the :class:`~cyctri.graphs.PropertyViolation` witness.
    """

    def __init__(self, violation):
        super().__init__(f"graph is not persistent: {violation}")
        self.violation = violation
