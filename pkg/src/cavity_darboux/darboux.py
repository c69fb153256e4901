"""One-fold Darboux transformation of the classical drive in the Dirac form.

The intertwiner's matrix part is ``B = alpha(t) + i (b(t) - beta(t)) sigma_i``
with ``b(t) = b0 exp(-i omega t)``.  The transformed field is
``b1 = 2 beta - b``.

Adjoints of ``b1`` follow the algebra in which ``beta`` is a formal real
function: ``b1^dagger = 2 beta - conj(b)``.  This is the convention under
which the transformed potential magnitude takes the polynomial form
``4 beta**2 - 4 beta b0 cos(omega t) + b0**2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)
SIGMA_PLUS = (SIGMA_X + 1j * SIGMA_Y) / 2
SIGMA_MINUS = (SIGMA_X - 1j * SIGMA_Y) / 2


class Sigma(enum.IntEnum):
    """Pauli matrix used in the intertwiner."""

    X = 1
    Y = 2
    Z = 3

    @property
    def matrix(self):
        return (SIGMA_X, SIGMA_Y, SIGMA_Z)[self - 1]


def classical_field(t, p):
    """b(t) = b0 exp(-i omega t)."""
    return p.b0 * np.exp(-1j * p.omega * np.asarray(t, dtype=float))


def classical_field_dot(t, p):
    return -1j * p.omega * classical_field(t, p)


def transform_field(t, beta, p):
    """b1(t) = 2 beta - b(t)."""
    return 2.0 * np.asarray(beta) - classical_field(t, p)


def potential_magnitude(t, beta, p, prefactor=False):
    """|4 beta**2 - 4 beta b0 cos(omega t) + b0**2|.

    ``beta`` may be complex, in which case the modulus of the complex
    polynomial is returned.  ``prefactor=True`` multiplies by ``(hbar Omega)**2``.
    """
    t = np.asarray(t, dtype=float)
    beta = np.asarray(beta, dtype=complex)
    v = np.abs(4.0 * beta**2 - 4.0 * beta * p.b0 * np.cos(p.omega * t) + p.b0**2)
    if prefactor:
        v = v * p.hbar_coupling**2
    return v if v.ndim else float(v)


def vector_potential(t, p, beta=None):
    """Coefficients ``(f1, f2)`` of sigma_x and sigma_y in the Dirac potential.

    Without ``beta`` this is the untransformed potential
    ``i hbar Omega b0 (sigma_x sin(omega t) - sigma_y cos(omega t))``; with
    ``beta`` it is the potential built from ``b1 = 2 beta - b``.
    """
    t = np.asarray(t, dtype=float)
    hw = p.hbar_coupling
    wt = p.omega * t
    if beta is None:
        return 1j * hw * p.b0 * np.sin(wt), -1j * hw * p.b0 * np.cos(wt)
    beta = np.asarray(beta, dtype=complex)
    return -1j * hw * p.b0 * np.sin(wt), -1j * hw * (2.0 * beta - p.b0 * np.cos(wt))


def potential_matrix(f1, f2):
    return f1 * SIGMA_X + f2 * SIGMA_Y


def intertwine_matrix(t, alpha, beta, dalpha, dbeta, sigma, p):
    """2x2 left-hand side of the intertwining relation at one time.

    i sz Bdot + hO (s+ b1 + s- b1^+) B - hO (B s+ b + B s- b^+) - hO (s+ bdot + s- bdot^+)

    with ``hO = hbar * Omega``.
    """
    s = Sigma(sigma).matrix
    hw = p.hbar_coupling
    b = complex(classical_field(t, p))
    bd = b.conjugate()
    db = complex(classical_field_dot(t, p))
    dbd = db.conjugate()
    b1 = 2.0 * beta - b
    b1d = 2.0 * beta - bd
    B = alpha * IDENTITY + 1j * (b - beta) * s
    Bdot = dalpha * IDENTITY + 1j * (db - dbeta) * s
    return (1j * SIGMA_Z @ Bdot
            + hw * (SIGMA_PLUS * b1 + SIGMA_MINUS * b1d) @ B
            - hw * (B @ SIGMA_PLUS * b + B @ SIGMA_MINUS * bd)
            - hw * (SIGMA_PLUS * db + SIGMA_MINUS * dbd))


def intertwine_residual(t, alpha, beta, dalpha, dbeta, sigma, p):
    """Frobenius norm of :func:`intertwine_matrix`."""
    return float(np.linalg.norm(intertwine_matrix(t, alpha, beta, dalpha, dbeta, sigma, p)))


@dataclass(frozen=True, eq=False)
class DarbouxSolution:
    """Trajectories of one transformation on a time grid.

    ``b1`` and ``vmag`` are always computed here from ``beta`` so that
    ``b1 == 2*beta - b0*exp(-i omega t)`` holds exactly.  ``dalpha`` and
    ``dbeta`` are the producing solver's own derivatives, when it has them.
    """

    sigma: Sigma
    t: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    b1: np.ndarray
    vmag: np.ndarray
    dalpha: np.ndarray | None = None
    dbeta: np.ndarray | None = None

    @classmethod
    def build(cls, sigma, t, alpha, beta, p, dalpha=None, dbeta=None, prefactor=False):
        t = np.asarray(t, dtype=float)
        alpha = np.asarray(alpha, dtype=complex)
        beta = np.asarray(beta, dtype=complex)
        if not (t.shape == alpha.shape == beta.shape) or t.ndim != 1:
            raise ValueError("t, alpha and beta must be 1-D arrays of one length")
        for name, arr in (("dalpha", dalpha), ("dbeta", dbeta)):
            if arr is not None and np.shape(arr) != t.shape:
                raise ValueError(f"{name} has the wrong length")
        return cls(
            sigma=Sigma(sigma),
            t=t,
            alpha=alpha,
            beta=beta,
            b1=transform_field(t, beta, p),
            vmag=np.asarray(potential_magnitude(t, beta, p, prefactor), dtype=float).reshape(t.shape),
            dalpha=None if dalpha is None else np.asarray(dalpha, dtype=complex),
            dbeta=None if dbeta is None else np.asarray(dbeta, dtype=complex),
        )

    def __len__(self):
        return len(self.t)

    def residuals(self, p):
        """Pointwise :func:`intertwine_residual` using the stored derivatives."""
        if self.dalpha is None or self.dbeta is None:
            raise ValueError("solution carries no derivatives")
        return np.array([
            intertwine_residual(tk, a, b, da, db, self.sigma, p)
            for tk, a, b, da, db in zip(self.t, self.alpha, self.beta, self.dalpha, self.dbeta)
        ])
