"""Principal square root of complex numbers written out in real arithmetic."""

import numpy as np


def csqrt(z):
    """Principal square root ``p + iq`` of ``z = a + ib``.

    For ``b != 0``::

        p = sqrt((|z| + a) / 2)
        q = sgn(b) * sqrt((|z| - a) / 2)

    The larger of ``p``, ``|q|`` is taken from its formula and the other from
    ``p * q = b / 2``, which is the same pair of numbers but avoids the
    cancellation in ``|z| + a`` when ``a < 0`` and ``|b| << |a|``.

    For ``b == 0`` the result is ``sqrt(a)`` when ``a >= 0`` and
    ``i * sqrt(-a)`` otherwise (the limit from the upper half plane).

    Accepts scalars or arrays; returns the same shape.
    """
    z = np.asarray(z, dtype=complex)
    a = z.real
    b = z.imag
    r = np.hypot(a, b)
    big = np.sqrt((r + np.abs(a)) / 2.0)
    with np.errstate(invalid="ignore", divide="ignore"):
        small = np.where(big > 0.0, np.abs(b) / (2.0 * np.where(big > 0.0, big, 1.0)), 0.0)
    sgn = np.where(b < 0.0, -1.0, 1.0)
    p = np.where(a >= 0.0, big, small)
    q = sgn * np.where(a >= 0.0, small, big)
    out = p + 1j * q
    if out.ndim == 0:
        return complex(out)
    return out
