"""Exception hierarchy shared by every module of the package."""


class LefschetzLabError(Exception):
    """Base class for all errors raised by lefschetz_lab."""


class ParseError(LefschetzLabError, ValueError):
    """Malformed polynomial text or system file.

    ``position`` is the 0-based character offset inside the expression,
    ``line`` the 1-based line number inside a system file (when known).
    """

    def __init__(self, message, position=None, line=None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class DegreeError(LefschetzLabError, ValueError):
    """A degree precondition was violated."""


class VariableSpaceError(LefschetzLabError, ValueError):
    """A polynomial lives in the wrong ring (primal vs dual vs coefficient)."""


class NotCompleteIntersection(LefschetzLabError):
    """The input forms do not generate a 0-dimensional complete intersection.

    ``degree`` is the first degree where the quotient is larger than the
    complete-intersection Hilbert function predicts.
    """

    def __init__(self, degree, hilbert=None):
        self.degree = degree
        self.hilbert = hilbert
        super().__init__(
            f"not a 0-dimensional complete intersection: quotient too large in degree {degree}"
        )


class InvariantBreach(LefschetzLabError, RuntimeError):
    """An internal invariant failed; this is a bug, never a mathematical result."""
