"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid configuration or construction parameters (CLI exit code 2)."""


class IntegratorError(RuntimeError):
    """Time stepping failed: divergence or non-convergence (CLI exit code 3)."""

    def __init__(self, message, step_index=None, last_residual=None):
        if step_index is not None:
            message = f"{message} (step {step_index})"
        super().__init__(message)
        self.step_index = step_index
        self.last_residual = last_residual
