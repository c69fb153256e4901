"""Dormand-Prince 5(4) integrator for complex first-order systems.

Kept deliberately independent of scipy so it can serve as a check on the
production solvers.
"""

import numpy as np

from ..errors import StepUnderflow

# Dormand-Prince tableau
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_B4 = np.array([5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40])
_E = _B5 - _B4


def _stages(f, t, y, h, k0):
    k = [k0]
    for i in range(1, 7):
        yi = y + h * sum(a * kj for a, kj in zip(_A[i], k))
        k.append(np.asarray(f(t + _C[i] * h, yi), dtype=complex))
    return k


def dp45_step(f, t, y, h):
    """One fixed step; returns the 5th-order update."""
    y = np.asarray(y, dtype=complex)
    k = _stages(f, t, y, h, np.asarray(f(t, y), dtype=complex))
    return y + h * sum(b * kj for b, kj in zip(_B5, k))


def dp45_fixed(f, y0, t0, t1, nsteps):
    y = np.asarray(y0, dtype=complex)
    h = (t1 - t0) / nsteps
    for i in range(nsteps):
        y = dp45_step(f, t0 + i * h, y, h)
    return y


def rk_oracle(f, y0, grid, rtol=1e-10, atol=1e-12, h0=None):
    """Integrate ``y' = f(t, y)`` adaptively and return ``y`` at every grid time.

    Steps are clipped so that each grid time is hit exactly.  Raises
    :class:`StepUnderflow` when the step falls below ``1e-14 * span``.

    Returns an array of shape ``(len(grid), len(y0))``.
    """
    grid = np.asarray(grid, dtype=float)
    y = np.atleast_1d(np.asarray(y0, dtype=complex)).copy()
    out = np.empty((len(grid), len(y)), dtype=complex)
    out[0] = y
    if len(grid) == 1:
        return out
    span = grid[-1] - grid[0]
    hmin = 1e-14 * abs(span)
    t = grid[0]
    fy = np.asarray(f(t, y), dtype=complex)
    if h0 is None:
        scale = atol + rtol * np.abs(y)
        d0 = np.sqrt(np.mean(np.abs(y / scale) ** 2))
        d1 = np.sqrt(np.mean(np.abs(fy / scale) ** 2))
        h0 = 0.01 * d0 / d1 if d0 > 1e-5 and d1 > 1e-5 else 1e-6
        h0 = min(h0, abs(span))
    h = h0
    for idx in range(1, len(grid)):
        target = grid[idx]
        while t < target:
            hs = min(h, target - t)
            k = _stages(f, t, y, hs, fy)
            ynew = y + hs * sum(b * kj for b, kj in zip(_B5, k))
            err_vec = hs * sum(e * kj for e, kj in zip(_E, k))
            scale = atol + rtol * np.maximum(np.abs(y), np.abs(ynew))
            err = np.sqrt(np.mean(np.abs(err_vec / scale) ** 2))
            if err <= 1.0:
                t = t + hs if hs < target - t else target
                y = ynew
                fy = k[6]  # FSAL
                factor = 5.0 if err == 0 else min(5.0, 0.9 * err ** -0.2)
                if hs == h:
                    h = hs * factor
            else:
                h = hs * max(0.2, 0.9 * err ** -0.2)
                if h < hmin:
                    raise StepUnderflow("step size underflow", t=t)
        out[idx] = y
    return out
