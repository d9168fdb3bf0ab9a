"""Exception types shared across the package."""


class SeplaneError(Exception):
    """Base class for all package errors."""


class DomainError(SeplaneError, ValueError):
    """An argument lies outside the operation's mathematical domain."""


class SingularOriginError(SeplaneError):
    """A vector field was evaluated at the singular origin (0, 0)."""


class SingularFieldError(SeplaneError):
    """A vector field was evaluated where it has no finite limit."""


class IntegrationError(SeplaneError, RuntimeError):
    """Time stepping failed before the requested span was covered."""


class StepUnderflowError(IntegrationError):
    """Step size collapsed near a non-removable singularity."""


class MaxStepsError(IntegrationError):
    """The step budget was exhausted."""


class NoCrossingError(IntegrationError):
    """The trajectory never reached the monitored locus."""


class InconclusiveOrbitError(SeplaneError):
    """Orbit classification stalled before any criterion resolved."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DegenerateCriticalError(SeplaneError):
    """Parameters sit in the degenerate critical band that the solver refuses."""


class OutOfRangeError(SeplaneError, ValueError):
    """A target value lies outside the attainable range."""

    def __init__(self, message: str, attained: tuple[float, float] | None = None):
        super().__init__(message)
        self.attained = attained
