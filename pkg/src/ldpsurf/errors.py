"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is outside an operation's domain (bad polygon, bad cone, ...)."""


class ParseError(DomainError):
    """A file or text payload could not be parsed; message carries a line number."""


class SingularityCountError(DomainError):
    """The polygon does not have exactly one non-basic cone."""


class ConsistencyError(RuntimeError):
    """Two routes to the same quantity disagreed; signals a bug, not bad input."""
