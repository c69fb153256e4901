"""Jaynes-Cummings atomic inversion under one-fold Darboux transformations of the classical drive."""

from .complexmath import csqrt
from .darboux import DarbouxSolution, Sigma, intertwine_residual, potential_magnitude, transform_field
from .errors import (
    ConfigError,
    DegenerateAmplitude,
    ImplicitSingularity,
    ImproperRational,
    RootJump,
    SingularDenominator,
    SingularPadeSystem,
    SolverError,
    StepUnderflow,
)
from .jc import PhysParams, atomic_inversion, poisson_truncation, rabi_frequency
from .modified import drive_from_solution, modified_inversion, modified_rabi_frequency
from .series import ExpPolySum, PadeRational, TruncSeries, laplace_pade_resum, pade

__version__ = "0.1.0"
