"""sigma_2 transformation.

The algebraic equation gives ``alpha = g(t, beta)`` with

    g = i w b0 (sin(w t) + cos(w t)) / (2 beta - 2 b0 cos(w t))

and substituting ``alpha' = g_t + g_beta beta'`` into the differential
equation leaves one scalar ODE for beta:

    (i g_beta - 1) beta' = -(2 hO (beta**2 - beta b0 e) + i g_t - i w b0 e)

with ``e = exp(-i w t)``.
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import solve_ivp

from ..darboux import DarbouxSolution, Sigma
from ..errors import ImplicitSingularity, SingularDenominator, SolverError


def _tol(p):
    return 1e-10 * max(1.0, abs(p.b0))


def g_parts(t, beta, p):
    """``(g, g_t, g_beta)`` for the alpha elimination."""
    w, b0 = p.omega, p.b0
    s, c = np.sin(w * t), np.cos(w * t)
    num = 1j * w * b0 * (s + c)
    dnum = 1j * w * w * b0 * (c - s)
    den = 2.0 * beta - 2.0 * b0 * c
    dden = 2.0 * b0 * w * s
    g = num / den
    g_t = dnum / den - num * dden / den**2
    g_beta = -2.0 * num / den**2
    return g, g_t, g_beta


def alpha_from_beta(t, beta, p):
    t = np.asarray(t, dtype=float)
    beta = np.asarray(beta, dtype=complex)
    den = beta - p.b0 * np.cos(p.omega * t)
    if np.any(np.abs(den) < _tol(p)):
        raise SingularDenominator("beta_2 = b0 cos(w t)", t=float(np.ravel(t)[np.argmin(np.abs(np.ravel(den)))]))
    return g_parts(t, beta, p)[0]


def beta_rhs(p):
    """``f(t, [beta])`` for the reduced ODE; raises on either singularity."""
    hw, w, b0 = p.hbar_coupling, p.omega, p.b0
    tol = _tol(p)

    def f(t, y):
        beta = y[0]
        if abs(beta - b0 * np.cos(w * t)) < tol:
            raise SingularDenominator("beta_2 = b0 cos(w t)", t=float(t))
        _, g_t, g_beta = g_parts(t, beta, p)
        lead = 1j * g_beta - 1.0
        if abs(lead) < tol:
            raise ImplicitSingularity("coefficient of beta_2' vanishes", t=float(t))
        e = np.exp(-1j * w * t)
        rhs = 2.0 * hw * (beta * beta - beta * b0 * e) + 1j * g_t - 1j * w * b0 * e
        return np.array([-rhs / lead])

    return f


def differential_residual(t, alpha_dot, beta, beta_dot, p):
    e = np.exp(-1j * p.omega * np.asarray(t, dtype=float))
    return (2.0 * p.hbar_coupling * (beta**2 - beta * p.b0 * e)
            + 1j * alpha_dot - (1j * p.omega * p.b0 * e + beta_dot))


def algebraic_residual(t, alpha, beta, p):
    t = np.asarray(t, dtype=float)
    hw, w, b0 = p.hbar_coupling, p.omega, p.b0
    return (-hw * b0 * 1j * w * (np.sin(w * t) + np.cos(w * t))
            + hw * alpha * (2.0 * beta - b0 * np.exp(1j * w * t))
            - hw * alpha * b0 * np.exp(-1j * w * t))


def solve_sigma2(p, grid, ic_beta=0j, rtol=1e-12, atol=None, dense=False):
    """Integrate beta_2 over ``grid`` with DOP853 and recover alpha_2 pointwise.

    With ``dense=True`` the scipy dense-output interpolant is returned as a
    second value.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or len(grid) < 2 or not np.all(np.diff(grid) > 0):
        raise ValueError("grid must be strictly increasing with at least two points")
    if atol is None:
        atol = 1e-12 * max(1.0, abs(p.b0))
    f = beta_rhs(p)
    f(grid[0], np.array([complex(ic_beta)]))
    sol = solve_ivp(f, (grid[0], grid[-1]), np.array([complex(ic_beta)]), method="DOP853",
                    t_eval=grid, rtol=rtol, atol=atol, dense_output=dense)
    if sol.status != 0:
        raise SolverError(f"integration failed: {sol.message}", t=float(sol.t[-1]) if len(sol.t) else None)
    beta = sol.y[0].copy()
    beta[0] = complex(ic_beta)
    alpha = alpha_from_beta(grid, beta, p)
    dbeta = np.array([f(tk, [bk])[0] for tk, bk in zip(grid, beta)])
    _, g_t, g_beta = g_parts(grid, beta, p)
    dalpha = g_t + g_beta * dbeta
    out = DarbouxSolution.build(Sigma.Y, grid, alpha, beta, p, dalpha=dalpha, dbeta=dbeta)
    if dense:
        return out, sol.sol
    return out
