"""sigma_3 transformation.

The differential half of the system, ``beta' + i alpha' + i w b0 exp(-i w t) = 0``,
integrates exactly:

    beta + i alpha = b0 exp(-i w t) + C

so ``alpha = i (beta - S)`` with ``S = C + b0 exp(-i w t)``.  Substituting this
into the algebraic half leaves, at every time, the quadratic

    2 beta**2 + B(t) beta + D(t) = 0
    B = -(S + 2 b0 cos(w t) + b0 exp(-i w t))
    D = S b0 cos(w t) + b0**2/2 (1 + exp(-2 i w t) + w (sin(w t) + cos(w t)))

whose roots are tracked by continuity along the grid.
"""

from __future__ import annotations

import numpy as np

from ..complexmath import csqrt
from ..darboux import DarbouxSolution, Sigma
from ..errors import RootJump, SingularDenominator

CONSISTENCY_TOL = 1e-9


def algebraic_residual(t, alpha, beta, p):
    """Left-hand side of the algebraic sigma_3 equation (no elimination)."""
    t = np.asarray(t, dtype=float)
    w, b0 = p.omega, p.b0
    c, s = np.cos(w * t), np.sin(w * t)
    e = np.exp(-1j * w * t)
    return 2.0 * p.hbar_coupling * (
        alpha * (beta - b0 * c)
        - 1j * b0 * beta * (c + e)
        + 1j * beta**2
        + 0.5j * b0 * (b0 * (1.0 + e**2) + b0 * w * (s + c))
    )


def differential_residual(t, dalpha, dbeta, p):
    return dbeta + 1j * dalpha + 1j * p.omega * p.b0 * np.exp(-1j * p.omega * np.asarray(t, dtype=float))


def alpha_from_beta(t, beta, p):
    """Solve the algebraic equation for alpha given beta."""
    t = np.asarray(t, dtype=float)
    w, b0 = p.omega, p.b0
    c, s = np.cos(w * t), np.sin(w * t)
    e = np.exp(-1j * w * t)
    den = beta - b0 * c
    if np.any(np.abs(den) < _singular_tol(p)):
        raise SingularDenominator("beta_3 = b0 cos(w t)", t=float(np.ravel(t)[0]))
    rest = -1j * b0 * beta * (c + e) + 1j * beta**2 + 0.5j * b0 * (b0 * (1.0 + e**2) + b0 * w * (s + c))
    return -rest / den


def default_initial_state(p, beta0=0j, t0=0.0):
    """``(alpha(t0), beta(t0))`` with alpha taken from the algebraic equation."""
    return complex(alpha_from_beta(t0, beta0, p)), complex(beta0)


def _singular_tol(p):
    return 1e-10 * max(1.0, abs(p.b0))


def quadratic_coefficients(t, const, p):
    t = np.asarray(t, dtype=float)
    w, b0 = p.omega, p.b0
    e = np.exp(-1j * w * t)
    c = b0 * np.cos(w * t)
    S = const + b0 * e
    B = -(S + 2.0 * c + b0 * e)
    D = S * c + 0.5 * b0**2 * (1.0 + e**2 + w * (np.sin(w * t) + np.cos(w * t)))
    return B, D


def quadratic_coefficients_dot(t, const, p):
    t = np.asarray(t, dtype=float)
    w, b0 = p.omega, p.b0
    e = np.exp(-1j * w * t)
    c = b0 * np.cos(w * t)
    dc = -b0 * w * np.sin(w * t)
    S = const + b0 * e
    dS = -1j * w * b0 * e
    dB = -(dS + 2.0 * dc - 1j * w * b0 * e)
    dD = dS * c + S * dc + 0.5 * b0**2 * (-2j * w * e**2 + w * w * (np.cos(w * t) - np.sin(w * t)))
    return dB, dD


def solve_sigma3(p, grid, ic=None, jump_threshold=None):
    """Track ``(alpha_3, beta_3)`` over ``grid``.

    ``ic`` is ``(alpha(t0), beta(t0))`` and must satisfy the algebraic
    equation; by default ``beta(t0) = 0``.  At each step the quadratic root
    nearest the previous value is kept.  :class:`RootJump` is raised when both
    roots are further than ``0.5 |b0| + 10 dt |b0 w|`` from it.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or len(grid) < 1:
        raise ValueError("grid must be a non-empty 1-D array")
    if len(grid) > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("grid must be strictly increasing")
    t0 = grid[0]
    alpha0, beta0 = default_initial_state(p, 0j, t0) if ic is None else (complex(ic[0]), complex(ic[1]))
    res0 = algebraic_residual(t0, alpha0, beta0, p)
    if abs(res0) > CONSISTENCY_TOL * max(1.0, abs(p.b0) ** 2, abs(alpha0) * abs(p.b0)):
        raise ValueError(f"initial state violates the algebraic equation (residual {abs(res0):.3e})")
    const = beta0 + 1j * alpha0 - p.b0 * np.exp(-1j * p.omega * t0)

    B, D = quadratic_coefficients(grid, const, p)
    root = csqrt(B * B - 8.0 * D)
    r1 = (-B + root) / 4.0
    r2 = (-B - root) / 4.0

    beta = np.empty(len(grid), dtype=complex)
    beta[0] = beta0
    scale = abs(p.b0)
    for k in range(1, len(grid)):
        prev = beta[k - 1]
        d1 = abs(r1[k] - prev)
        d2 = abs(r2[k] - prev)
        pick, dist = (r1[k], d1) if d1 <= d2 else (r2[k], d2)
        limit = jump_threshold if jump_threshold is not None else (
            0.5 * scale + 10.0 * (grid[k] - grid[k - 1]) * scale * p.omega)
        if dist > limit:
            raise RootJump(f"both roots moved more than {limit:.3g}", t=grid[k])
        beta[k] = pick

    c = p.b0 * np.cos(p.omega * grid)
    bad = np.abs(beta - c) < _singular_tol(p)
    if np.any(bad):
        raise SingularDenominator("beta_3 = b0 cos(w t)", t=float(grid[np.argmax(bad)]))

    S = const + p.b0 * np.exp(-1j * p.omega * grid)
    alpha = 1j * (beta - S)
    alpha[0] = alpha0

    # implicit derivative of the quadratic, then the conservation law for alpha
    dB, dD = quadratic_coefficients_dot(grid, const, p)
    dbeta = -(dB * beta + dD) / (4.0 * beta + B)
    dalpha = -p.omega * p.b0 * np.exp(-1j * p.omega * grid) + 1j * dbeta
    return DarbouxSolution.build(Sigma.Z, grid, alpha, beta, p, dalpha=dalpha, dbeta=dbeta)
