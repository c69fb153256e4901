"""Atomic inversion with an extra classical occupation in the Rabi frequency."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexmath import csqrt
from .jc import DEFAULT_POISSON_TOL, poisson_truncation, poisson_weights

_CHUNK = 2048


@dataclass(frozen=True)
class ModifiedDrive:
    """Classical occupation ``|b1|**2`` sampled on ``t``."""

    t: np.ndarray
    nbb: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        nbb = np.asarray(self.nbb, dtype=float)
        if t.shape != nbb.shape:
            raise ValueError("t and nbb must have the same shape")
        if np.any(nbb < 0) or not np.all(np.isfinite(nbb)):
            raise ValueError("nbb must be finite and non-negative")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "nbb", nbb)

    def switched_on(self, t_on):
        """Zero occupation before ``t_on``."""
        return ModifiedDrive(self.t, np.where(self.t < t_on, 0.0, self.nbb))

    def scaled(self, factor):
        if factor < 0:
            raise ValueError("scale factor must be non-negative")
        return ModifiedDrive(self.t, self.nbb * factor)


def drive_from_solution(sol):
    return ModifiedDrive(sol.t, np.abs(sol.b1) ** 2)


def modified_rabi_frequency(n, nbb, p):
    """sqrt(Omega (kappa**2 + nbb + n + 1))."""
    return np.sqrt(p.coupling * (p.kappa**2 + np.asarray(nbb) + np.asarray(n) + 1.0))


def modified_inversion(t, nbb, p, n_max=None, tol=DEFAULT_POISSON_TOL):
    """Modified inversion at times ``t`` with occupation ``nbb`` (same shape).

    exp(-nbar) sum_n nbar**n/n! (1 - 2 Omega**2 sqrt(nbb+n+1) sin(Om t)**2 / Om**2)

    with ``Om`` the modified Rabi frequency.
    """
    if n_max is None:
        n_max = poisson_truncation(p.nbar, tol)
    t = np.asarray(t, dtype=float)
    nbb = np.broadcast_to(np.asarray(nbb, dtype=float), t.shape)
    if np.any(nbb < 0):
        raise ValueError("nbb must be non-negative")
    n = np.arange(n_max + 1, dtype=float)
    weights = poisson_weights(p.nbar, n_max)
    tf, nf = t.ravel(), nbb.ravel()
    out = np.empty_like(tf)
    for lo in range(0, len(tf), _CHUNK):
        tc = tf[lo : lo + _CHUNK, None]
        occ = nf[lo : lo + _CHUNK, None] + n[None, :]
        freq = modified_rabi_frequency(n[None, :], nf[lo : lo + _CHUNK, None], p)
        amp = 2.0 * p.coupling**2 * csqrt(occ + 1.0).real / freq**2
        out[lo : lo + _CHUNK] = (1.0 - amp * np.sin(freq * tc) ** 2) @ weights
    out = out.reshape(t.shape)
    return out if out.ndim else float(out)


def modified_bound(nbb, p, n_max):
    """Upper bound on ``|W|`` for occupations ``nbb``: 1 + max_n amplitude."""
    n = np.arange(n_max + 1, dtype=float)
    nbb = np.atleast_1d(np.asarray(nbb, dtype=float))[:, None]
    amp = 2.0 * p.coupling**2 * np.sqrt(nbb + n + 1.0) / modified_rabi_frequency(n, nbb, p) ** 2
    return 1.0 + float(amp.max())
