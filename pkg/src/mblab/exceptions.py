"""Package-wide exception types."""


class ConvergenceError(RuntimeError):
    """An iterative procedure (bracketing, bisection, inverse iteration)
    failed to converge within its budget."""


class AccuracyWindowError(ValueError):
    """Arguments fall outside the window in which the implementation
    guarantees its stated accuracy."""
