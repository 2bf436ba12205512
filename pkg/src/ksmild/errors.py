"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """A run configuration violates a precondition (bad grid, horizon, weight...)."""


class GridMismatchError(ValueError):
    """Two operands live on different frequency lattices or time grids."""


class SmallnessError(RuntimeError):
    """The contraction gate 4*eta*||x0|| < 1 failed; the solve refuses to run."""

    def __init__(self, x0_norm, eta):
        self.x0_norm = float(x0_norm)
        self.eta = float(eta)
        super().__init__(
            "smallness violated: 4*eta*||x0|| = %.6g >= 1 (eta=%.6g, ||x0||=%.6g)"
            % (4.0 * self.eta * self.x0_norm, self.eta, self.x0_norm)
        )


class ConvergenceError(RuntimeError):
    """Picard iteration did not reach the residual tolerance within max_iter."""

    def __init__(self, residuals, tol, max_iter):
        self.residuals = list(residuals)
        self.tol = float(tol)
        self.max_iter = int(max_iter)
        last = self.residuals[-1] if self.residuals else float("nan")
        super().__init__(
            "no convergence after %d iterations (last residual %.3e, tol %.1e)"
            % (self.max_iter, last, self.tol)
        )


class InstabilityError(RuntimeError):
    """Time integration produced non-finite values (blow-up or instability)."""

    def __init__(self, last_good_time):
        self.last_good_time = float(last_good_time)
        super().__init__(
            "blow-up or instability detected; last finite state at t=%.6g"
            % self.last_good_time
        )


class SnapshotFormatError(ValueError):
    """A snapshot CSV file is malformed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)


class InsufficientDecayError(RuntimeError):
    """Too few spectral shells above the noise floor to fit a decay rate."""
