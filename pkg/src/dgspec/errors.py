"""Exception types shared across the package."""


class OutOfRangeError(ValueError):
    """A vertex label lies outside 0..n-1."""


class LoopArcError(ValueError):
    """An arc (v, v) was supplied; graphs here are loop-free."""


class DuplicateArcError(ValueError):
    """The same arc appeared twice in an edge-list document."""


class BadParameterError(ValueError):
    """A generator or enumeration parameter violates its precondition."""


class NotSymmetricError(ValueError):
    """A matrix expected to be symmetric is not."""


class NotPSDError(ValueError):
    """A matrix expected to be positive semidefinite has a negative eigenvalue."""


class NoConvergenceError(RuntimeError):
    """The eigensolver did not reach the requested off-diagonal residual."""


class NoSuchArcError(ValueError):
    """An arc-indexed operation was asked about an arc the graph lacks."""


class ParseError(ValueError):
    """Edge-list text is malformed; carries the offending line number."""

    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason
