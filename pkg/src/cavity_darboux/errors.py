"""Exception hierarchy shared by the numerical modules and the CLI."""


class CavityDarbouxError(Exception):
    """Base class for all package errors."""


class ConfigError(CavityDarbouxError):
    """Invalid simulation configuration; ``field`` names the offending key."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class SeriesError(CavityDarbouxError):
    pass


class SingularPadeSystem(SeriesError):
    """The Pade denominator system is rank deficient; use a smaller N."""


class ImproperRational(SeriesError):
    """Numerator degree is not below the denominator degree."""


class SolverError(CavityDarbouxError):
    """A trajectory solver failed. ``t`` is the time at which it failed, if known."""

    def __init__(self, message, t=None):
        self.t = t
        if t is not None:
            message = f"{message} (t={t:.17g})"
        super().__init__(message)


class DegenerateAmplitude(SolverError):
    """b0 == 1 makes the sigma_1 initial condition for alpha singular."""


class RootJump(SolverError):
    pass


class SingularDenominator(SolverError):
    pass


class ImplicitSingularity(SolverError):
    pass


class StepUnderflow(SolverError):
    pass
