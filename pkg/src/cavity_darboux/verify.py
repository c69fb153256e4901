"""Residual and invariant checks printed by ``cavity-darboux verify``.

Every check is deterministic (fixed seeds) so two runs print the same report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complexmath import csqrt
from .darboux import Sigma
from .jc import PhysParams, atomic_inversion
from .modified import modified_inversion
from .series import ExpPolySum, PadeRational, TruncSeries, laplace_pade_resum, pade
from .solvers import sigma1, sigma2, sigma3
from .solvers.rk import rk_oracle


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    limit: float

    @property
    def passed(self):
        return bool(self.value <= self.limit)


def _vacuum():
    p = PhysParams(gamma=0j, detuning=0.0, coupling=1.0)
    t = np.linspace(0.0, 10.0, 10_000)
    return Check("vacuum Rabi W = cos 2t", float(np.abs(atomic_inversion(t, p) - np.cos(2 * t)).max()), 1e-9)


def _normalisation(rng):
    worst = 0.0
    for _ in range(20):
        p = PhysParams(coupling=rng.uniform(0.1, 1.0), detuning=rng.uniform(-3, 3),
                       gamma=complex(rng.uniform(0, 6)), b0=rng.uniform(0.1, 3))
        worst = max(worst, abs(atomic_inversion(0.0, p) - 1.0),
                    abs(modified_inversion(0.0, rng.uniform(0, 10), p) - 1.0))
    return Check("W(0) = 1 (standard and modified)", worst, 1e-12)


def _csqrt(rng):
    z = rng.uniform(-1e3, 1e3, 100_000) + 1j * rng.uniform(-1e3, 1e3, 100_000)
    w = csqrt(z)
    err = np.abs(w * w - z) / np.abs(z)
    return Check("csqrt(z)**2 = z (relative)", float(err.max()) if np.all(w.real >= 0) else math.inf, 1e-12)


def _pade(rng):
    worst = 0.0
    x = np.linspace(0, 0.5, 101)
    for _ in range(20):
        num = rng.uniform(-1, 1, 3)
        roots = rng.uniform(1.5, 3, 2) * rng.choice([-1, 1], 2)
        den = np.polynomial.polynomial.polyfromroots(roots)
        den = den / den[0]
        exact = PadeRational(num, den)
        approx = pade(exact.taylor(5), 2, 2)
        worst = max(worst, float(np.abs(approx(x) - exact(x)).max()))
    return Check("Pade [2/2] reconstructs rationals", worst, 1e-8)


def _resum(rng):
    worst = 0.0
    t = np.linspace(0, 1, 101)
    for _ in range(20):
        f = ExpPolySum([(rng.uniform(-2, 2), rng.uniform(-2, 2), 0), (rng.uniform(-2, 2), rng.uniform(-2, 2), 0)])
        g = laplace_pade_resum(f.taylor(6), 2, 2)
        worst = max(worst, float(np.abs(g(t) - f(t)).max()))
    return Check("Laplace-Pade fixed point", worst, 1e-8)


def _hpm():
    p = PhysParams(b0=2.0, omega=1.0, coupling=1.0, hbar=1.0)
    h = sigma1.hpm_solve_sigma1(p, 3)
    ts = np.geomspace(5e-4, 5e-2, 9)
    ref = rk_oracle(sigma1.riccati_rhs(p), list(sigma1.initial_state(p)), np.concatenate([[0.0], ts]),
                    rtol=1e-14, atol=1e-16)[1:]
    a, b = h.evaluate(ts)
    err = np.maximum(np.abs(a - ref[:, 0]), np.abs(b - ref[:, 1]))
    slope = np.polyfit(np.log(ts), np.log(err), 1)[0]
    return [Check("HPM(3) vs RK on [0, 0.05]", float(err.max()), 1e-6),
            Check("HPM(3) error slope deficit (4 - slope)", float(4.0 - slope), 0.3)]


def _sigma3():
    p = PhysParams()
    t = np.linspace(0, 100, 10_001)
    s = sigma3.solve_sigma3(p, t)
    inv = s.beta + 1j * s.alpha - p.b0 * np.exp(-1j * p.omega * t)
    return [Check("sigma_3 conservation drift", float(np.abs(inv - inv[0]).max()), 1e-8),
            Check("sigma_3 algebraic residual", float(np.abs(sigma3.algebraic_residual(t, s.alpha, s.beta, p)).max()), 1e-8),
            Check("sigma_3 intertwining residual", float(s.residuals(p).max()), 1e-5)]


def _sigma2():
    p = PhysParams()
    t = np.linspace(0, 20, 401)
    s = sigma2.solve_sigma2(p, t)
    fine = sigma2.solve_sigma2(p, np.linspace(0, 20, 801))
    return [Check("sigma_2 algebraic residual", float(np.abs(sigma2.algebraic_residual(t, s.alpha, s.beta, p)).max()), 1e-8),
            Check("sigma_2 differential residual",
                  float(np.abs(sigma2.differential_residual(t, s.dalpha, s.beta, s.dbeta, p)).max()), 1e-6),
            Check("sigma_2 grid halving", float(np.abs(fine.beta[::2] - s.beta).max()), 1e-6),
            Check("sigma_2 intertwining residual", float(s.residuals(p).max()), 1e-5)]


def run_checks():
    rng = np.random.default_rng(20100401)
    checks = [_vacuum(), _normalisation(rng), _csqrt(rng), _pade(rng), _resum(rng)]
    checks += _hpm() + _sigma3() + _sigma2()
    return checks


def format_report(checks):
    width = max(len(c.name) for c in checks)
    lines = [f"{'check':<{width}}  {'value':>12}  {'limit':>9}  result"]
    for c in checks:
        lines.append(f"{c.name:<{width}}  {c.value:>12.4e}  {c.limit:>9.1e}  {'PASS' if c.passed else 'FAIL'}")
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
