"""Exception types shared across the solver."""


class InvalidModulusError(ValueError):
    """A modulus (or capacity used as one) was smaller than 1."""


class NotHarmonicError(ValueError):
    """An operation that needs harmonic capacities got a non-harmonic instance."""

    def __init__(self, i, a_i, a_next):
        self.pair = (i, a_i, a_next)
        super().__init__(
            f"capacities are not harmonic: a[{i}]={a_i} does not divide a[{i + 1}]={a_next}"
        )


class PreconditionError(ValueError):
    """Input violates a documented precondition (distinct from infeasibility)."""


class ResourceLimitError(RuntimeError):
    """A brute-force oracle was asked to enumerate more values than allowed."""


class InconsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug rather than bad input."""
