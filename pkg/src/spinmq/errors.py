"""Error taxonomy shared across the package."""


class ConfigError(ValueError):
    """Invalid experiment configuration (CLI exit status 2)."""


class NumericalError(RuntimeError):
    """Numerical failure: non-convergence, NaN/Inf, broken conventions (exit 3)."""


class InvariantViolation(NumericalError):
    """A strict-mode invariant check failed during a run."""
