"""Exceptions raised across ivcolor.

Invalid colorings are not errors: the verifier reports them. These classes
cover bad parameters, violated preconditions and unreadable files.
"""


class IntervalColoringError(Exception):
    """Base class for every ivcolor error."""


class DomainError(IntervalColoringError, ValueError):
    """A parameter is outside the range an operation accepts."""

    def __init__(self, parameter, message):
        self.parameter = parameter
        super().__init__(f"{parameter}: {message}")


class PreconditionError(IntervalColoringError):
    """The input is well formed but does not meet an operation's hypothesis."""


class InfiniteDiameterError(PreconditionError):
    """Raised when a distance is requested across disconnected components."""

    def __init__(self, message="graph is disconnected: infinite diameter"):
        super().__init__(message)


class ClauseConflictError(IntervalColoringError):
    """A construction assigned two different colors to the same edge."""

    def __init__(self, edge, first, second, rule):
        self.edge = edge
        self.first = first
        self.second = second
        self.rule = rule
        super().__init__(
            f"edge {edge} colored {first} and then {second} by rule '{rule}'"
        )


class CertificateParseError(IntervalColoringError):
    """A certificate or edge-list file could not be read."""

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class UnsupportedConstructionError(IntervalColoringError):
    """No construction is registered for a (family, mode) pair."""

    def __init__(self, family, mode, supported):
        self.family = family
        self.mode = mode
        listing = "; ".join(f"{name}: {', '.join(modes)}" for name, modes in supported.items())
        super().__init__(f"no {mode} construction for {family}. Supported: {listing}")
