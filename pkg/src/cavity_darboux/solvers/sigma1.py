"""sigma_1 transformation: coupled Riccati system, HPM and resummation.

The system is

    alpha' = 2 hO (beta**2 - beta (exp(i w t) + b0 exp(-i w t)) - b0)
    beta'  = i w b0 (hO - 1) exp(-i w t) + 2 hO alpha (beta - cos(w t))

with ``beta(0) = b0`` and ``alpha(0) = i w b0 (1 - hO) / (2 hO (b0 - 1))``.

The homotopy expansion puts ``d/dt`` at order ``p**0`` and the whole right
hand side at order ``p**1``, so order ``k + 1`` is the integral from 0 of the
``p**k`` coefficient of the right-hand side evaluated on the expansion.  Every
order is an exact :class:`~cavity_darboux.series.ExpPolySum` in
``t**n exp(i m w t)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateAmplitude
from ..series import ExpPolySum, laplace_pade_resum

TAYLOR_ORDER = 48


def _check_amplitude(p):
    if p.b0 == 1.0:
        raise DegenerateAmplitude("b0 = 1 makes alpha_1(0) singular", t=0.0)


def initial_state(p):
    """(alpha_1(0), beta_1(0))."""
    _check_amplitude(p)
    hw = p.hbar_coupling
    alpha0 = 1j * p.omega * p.b0 * (1.0 - hw) / (2.0 * hw * (p.b0 - 1.0))
    return complex(alpha0), complex(p.b0)


def riccati_rhs(p):
    """Right-hand side ``f(t, [alpha, beta])`` of the sigma_1 system."""
    hw = p.hbar_coupling
    w = p.omega
    b0 = p.b0

    def f(t, y):
        alpha, beta = y
        e = np.exp(-1j * w * t)
        da = 2.0 * hw * (beta * beta - beta * (1.0 / e + b0 * e) - b0)
        db = 1j * w * b0 * (hw - 1.0) * e + 2.0 * hw * alpha * (beta - np.cos(w * t))
        return np.array([da, db])

    return f


@dataclass(frozen=True)
class HpmExpansion:
    """Orders ``(alpha_1)_k`` and ``(beta_1)_k`` for k = 0..order."""

    alpha_orders: tuple
    beta_orders: tuple

    @property
    def order(self):
        return len(self.alpha_orders) - 1

    @property
    def alpha(self):
        return sum(self.alpha_orders[1:], self.alpha_orders[0])

    @property
    def beta(self):
        return sum(self.beta_orders[1:], self.beta_orders[0])

    def alpha_series(self, K):
        return self.alpha.taylor(K)

    def beta_series(self, K):
        return self.beta.taylor(K)

    def evaluate(self, t):
        """Summed expansion at ``t``.

        Close to 0 the closed form loses digits to cancellation between the
        ``exp`` terms and the integration constants, so small ``|t|`` goes
        through a long Taylor series instead.
        """
        t = np.asarray(t, dtype=float)
        a_sum, b_sum = self.alpha, self.beta
        rmax = max([abs(r) for r in a_sum.rates + b_sum.rates] + [1.0])
        near = np.abs(t) * rmax <= 1.0
        a = np.where(near, a_sum.taylor(TAYLOR_ORDER)(t.astype(complex)), a_sum(t))
        b = np.where(near, b_sum.taylor(TAYLOR_ORDER)(t.astype(complex)), b_sum(t))
        if a.ndim == 0:
            return complex(a), complex(b)
        return a, b


def _cauchy(xs, ys, k):
    return sum((xs[j] * ys[k - j] for j in range(k + 1)), ExpPolySum([]))


def hpm_solve_sigma1(p, order=3):
    """Homotopy expansion of the sigma_1 system through ``p**order``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    alpha0, beta0 = initial_state(p)
    hw = p.hbar_coupling
    w = p.omega
    b0 = p.b0
    e_plus = ExpPolySum([(1.0, 1j * w, 0)])
    e_minus = ExpPolySum([(1.0, -1j * w, 0)])
    cos = ExpPolySum([(0.5, 1j * w, 0), (0.5, -1j * w, 0)])
    drive = e_plus + b0 * e_minus
    alphas = [ExpPolySum([(alpha0, 0.0, 0)])]
    betas = [ExpPolySum([(beta0, 0.0, 0)])]
    for k in range(order):
        da = 2.0 * hw * (_cauchy(betas, betas, k) - betas[k] * drive)
        db = 2.0 * hw * (_cauchy(alphas, betas, k) - alphas[k] * cos)
        if k == 0:
            da = da - 2.0 * hw * b0
            db = db + 1j * w * b0 * (hw - 1.0) * e_minus
        alphas.append(da.integral())
        betas.append(db.integral())
    return HpmExpansion(tuple(alphas), tuple(betas))


def resum_sigma1(h, M=2, N=2):
    """Laplace-Pade resummation of the summed alpha and beta series.

    The Taylor series handed to the pipeline is truncated at ``M + N - 1``,
    the highest order the ``[M/N]`` approximant of the Laplace image reads.
    """
    K = M + N - 1
    if K > h.order:
        raise ValueError(f"[{M}/{N}] reads Taylor order {K}, expansion only has order {h.order}")
    return (laplace_pade_resum(h.alpha_series(K), M, N),
            laplace_pade_resum(h.beta_series(K), M, N))


def closed_form_sigma1(t, p):
    """Reference closed forms for alpha_1(t), beta_1(t), evaluated as written.

    These are the cubic-in-t expressions used to drive the sigma_1 run; they
    do not satisfy ``beta_1(0) = b0`` (at ``t = 0`` the beta form gives 0).
    """
    _check_amplitude(p)
    t = np.asarray(t, dtype=float)
    hbar, Om, w, b0 = p.hbar, p.coupling, p.omega, p.b0
    hw = hbar * Om
    alpha = (1.0 / 12.0) * (b0 - b0**2) * hw * (
        3j * w * (4j * t * w + t**2 * w**2 - 2.0) * (hw - 1.0)
        + 4.0 * hbar * Om**2 * (b0 - 1.0) ** 2 * t * (9j * t * w + t**2 * w**2 - 12.0)
    )
    beta = (
        2j * (2 * b0 - 1) * (hw - 1) / w
        - 1j * (3 * b0 - 2) * np.exp(-1j * w * t) * (hw - 1) / w
        - 1j * b0 * np.exp(1j * w * t) * (hw - 1) / w
        - 1j * b0**2 * t**2 * w * (hw - 1)
        + 2 * (b0 - 1) * t * (b0 + hw - 1)
    ) / (2 * (b0 - 1))
    if np.ndim(alpha) == 0:
        return complex(alpha), complex(beta)
    return alpha.astype(complex), beta.astype(complex)


def closed_form_sigma1_dot(t, p):
    """Time derivatives of :func:`closed_form_sigma1`."""
    t = np.asarray(t, dtype=float)
    hbar, Om, w, b0 = p.hbar, p.coupling, p.omega, p.b0
    hw = hbar * Om
    dalpha = (1.0 / 12.0) * (b0 - b0**2) * hw * (
        3j * w * (4j * w + 2 * t * w**2) * (hw - 1.0)
        + 4.0 * hbar * Om**2 * (b0 - 1.0) ** 2 * (18j * t * w + 3 * t**2 * w**2 - 12.0)
    )
    dbeta = (
        -(3 * b0 - 2) * np.exp(-1j * w * t) * (hw - 1)
        + b0 * np.exp(1j * w * t) * (hw - 1)
        - 2j * b0**2 * t * w * (hw - 1)
        + 2 * (b0 - 1) * (b0 + hw - 1)
    ) / (2 * (b0 - 1))
    return np.asarray(dalpha, dtype=complex), np.asarray(dbeta, dtype=complex)
