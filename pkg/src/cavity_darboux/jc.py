"""Jaynes-Cummings atomic inversion for a coherent cavity field."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.special import gammaln

DEFAULT_POISSON_TOL = 1e-12
_CHUNK = 4096


@dataclass(frozen=True)
class PhysParams:
    """Physical constants of the atom-cavity model.

    ``coupling`` is the vacuum coupling Omega, ``omega`` the field frequency,
    ``detuning`` is Delta = omega0 - omega.  Derived quantities (``omega0``,
    ``kappa``, ``nbar``, ``hbar_coupling``) are properties and therefore never
    stale.
    """

    coupling: float = 1.0
    omega: float = 1.0
    detuning: float = 2.0 * math.sqrt(2.0)
    hbar: float = 1.0
    b0: float = 2.0
    gamma: complex = field(default=complex(math.sqrt(30.0)))

    def __post_init__(self):
        for name in ("coupling", "omega", "hbar"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be finite and positive, got {v!r}")
        for name in ("detuning", "b0"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        object.__setattr__(self, "gamma", complex(self.gamma))

    @property
    def omega0(self):
        return self.omega + self.detuning

    @property
    def kappa(self):
        return self.detuning / (2.0 * self.coupling)

    @property
    def nbar(self):
        return abs(self.gamma) ** 2

    @property
    def hbar_coupling(self):
        return self.hbar * self.coupling

    def with_(self, **changes):
        return replace(self, **changes)


@dataclass(frozen=True)
class InversionTrace:
    t: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        w = np.asarray(self.w, dtype=float)
        if t.shape != w.shape or t.ndim != 1:
            raise ValueError("t and w must be 1-D arrays of equal length")
        if len(t) > 1 and not np.all(np.diff(t) > 0):
            raise ValueError("time grid must be strictly increasing")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "w", w)


def rabi_frequency(n, p):
    """sqrt(Omega (kappa**2 + n + 1)); ``n`` may be an array."""
    return np.sqrt(p.coupling * (p.kappa**2 + np.asarray(n) + 1.0))


def poisson_truncation(nbar, tol=DEFAULT_POISSON_TOL):
    """Smallest N such that the Poisson(nbar) mass above N is below ``tol``."""
    if nbar < 0:
        raise ValueError("nbar must be non-negative")
    if not 0 < tol < 1:
        raise ValueError("tol must lie in (0, 1)")
    if nbar == 0:
        return 0
    n = 0
    while _poisson_tail(nbar, n) >= tol:
        n += 1
    return n


def _poisson_tail(nbar, n):
    total = 0.0
    k = n + 1
    while True:
        term = math.exp(k * math.log(nbar) - nbar - math.lgamma(k + 1))
        total += term
        if k > nbar and term < 1e-300 + total * 1e-17:
            return total
        k += 1


def poisson_weights(nbar, n_max):
    """exp(-nbar) nbar**n / n! for n = 0..n_max, evaluated in log space.

    The truncated weights are rescaled to sum to one, which moves each by at
    most the discarded tail mass.
    """
    n = np.arange(n_max + 1)
    if nbar == 0:
        return (n == 0).astype(float)
    w = np.exp(n * np.log(nbar) - nbar - gammaln(n + 1))
    return w / math.fsum(w)


def atomic_inversion(t, p, n_max=None, tol=DEFAULT_POISSON_TOL):
    """Standard JC inversion W(t) for an initially excited atom.

    W(t) = exp(-nbar) sum_n nbar**n/n! (1 - 2 Omega**2 (n+1) sin(Omega_n t)**2 / Omega_n**2)
    """
    if n_max is None:
        n_max = poisson_truncation(p.nbar, tol)
    t = np.asarray(t, dtype=float)
    n = np.arange(n_max + 1)
    w = poisson_weights(p.nbar, n_max)
    rabi = rabi_frequency(n, p)
    amp = 2.0 * p.coupling**2 * (n + 1) / rabi**2
    flat = t.ravel()
    out = np.empty_like(flat)
    for lo in range(0, len(flat), _CHUNK):
        tc = flat[lo : lo + _CHUNK]
        s = np.sin(np.outer(tc, rabi)) ** 2
        out[lo : lo + _CHUNK] = (1.0 - s * amp) @ w
    out = out.reshape(t.shape)
    return out if out.ndim else float(out)


def inversion_trace(t, p, n_max=None, tol=DEFAULT_POISSON_TOL):
    t = np.asarray(t, dtype=float)
    return InversionTrace(t, atomic_inversion(t, p, n_max, tol))


def jc_potential_magnitude(n, p):
    """(hbar Omega)**2 (n + 1/2)."""
    return p.hbar_coupling**2 * (np.asarray(n) + 0.5)


def classical_boundary_amplitude(n):
    """|b0| at which (hbar Omega b0)**2 equals the JC potential magnitude."""
    return np.sqrt(np.asarray(n) + 0.5)


def envelope(t, w, window):
    """Half peak-to-peak of ``w`` over a sliding window of width ``window``.

    Returns ``(tc, env)`` where ``tc`` are window centres.  The grid must be
    uniform.
    """
    t = np.asarray(t, dtype=float)
    w = np.asarray(w, dtype=float)
    dt = (t[-1] - t[0]) / (len(t) - 1)
    m = max(2, int(round(window / dt)) + 1)
    if m > len(t):
        raise ValueError("window longer than the trace")
    view = np.lib.stride_tricks.sliding_window_view(w, m)
    env = (view.max(axis=1) - view.min(axis=1)) / 2.0
    tc = np.lib.stride_tricks.sliding_window_view(t, m).mean(axis=1)
    return tc, env


def windowed_amplitude(t, w, t_lo, t_hi):
    """Half peak-to-peak of ``w`` restricted to ``t_lo <= t <= t_hi``."""
    t = np.asarray(t)
    w = np.asarray(w)
    sel = w[(t >= t_lo) & (t <= t_hi)]
    if sel.size == 0:
        raise ValueError("no samples in window")
    return float(sel.max() - sel.min()) / 2.0
