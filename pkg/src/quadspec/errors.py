"""Exception types shared across the package."""


class QuadspecError(Exception):
    """Base class for all library errors."""


class FormatError(QuadspecError, ValueError):
    """Malformed edge-list or graph6 input; carries line/byte position."""


class ConstructionError(QuadspecError, ValueError):
    """A named construction was given parameters it cannot satisfy."""


class SizeError(QuadspecError, ValueError):
    """Input exceeds a configured size bound (vertex cap, dense bound, ...)."""


class DegenerateGraphError(QuadspecError, ValueError):
    """Operation requires at least one edge."""


class ConvergenceError(QuadspecError, RuntimeError):
    """An iterative solver failed to reach tolerance.

    Carries the last iterate so callers can inspect how close it got, and
    (for the edge-deletion driver) the partial trace built so far.
    """

    def __init__(self, message, last_lambda=None, last_vector=None,
                 residual=None, iterations=None, partial_trace=None):
        super().__init__(message)
        self.last_lambda = last_lambda
        self.last_vector = last_vector
        self.residual = residual
        self.iterations = iterations
        self.partial_trace = partial_trace


class StaleEigenpairError(QuadspecError, ValueError):
    """An eigenpair was supplied whose residual is too large for the graph."""


class OutOfHypothesisError(QuadspecError, ValueError):
    """The input does not satisfy the hypothesis of the claim being verified.

    Verifiers raise this instead of reporting pass/fail, so that sweeps can
    tally these cases separately (neither pass nor failure).
    """

    def __init__(self, claim_id, reason):
        super().__init__(f"{claim_id}: {reason}")
        self.claim_id = claim_id
        self.reason = reason


class InternalConsistencyError(QuadspecError, RuntimeError):
    """An exact arithmetic identity failed; indicates a bug, not bad input."""
