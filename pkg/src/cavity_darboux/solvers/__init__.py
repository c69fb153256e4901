"""Trajectory solvers for alpha_i(t), beta_i(t)."""

from .rk import rk_oracle
from .sigma1 import closed_form_sigma1, hpm_solve_sigma1, resum_sigma1
from .sigma2 import solve_sigma2
from .sigma3 import solve_sigma3
