"""Truncated power series, Pade approximants and Laplace-Pade resummation.

The resummation pipeline takes a truncated Taylor series in ``t``, maps it to
its Laplace image written in ``u = 1/s``, fits a Pade approximant in ``u``,
rewrites that as a proper rational function of ``s`` and inverts it term by
term into a sum of ``c * t**k * exp(r*t)`` terms (:class:`ExpPolySum`).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import ImproperRational, SingularPadeSystem

RANK_RTOL = 1e-12
ROOT_CLUSTER_RTOL = 1e-8
RATE_MERGE_RTOL = 1e-13


@dataclass(frozen=True)
class TruncSeries:
    """``sum(coeffs[n] * x**n for n in range(order + 1))``."""

    coeffs: tuple

    def __init__(self, coeffs):
        c = tuple(complex(v) for v in np.ravel(np.asarray(coeffs, dtype=complex)))
        if not c:
            raise ValueError("a series needs at least one coefficient")
        if not all(np.isfinite(v.real) and np.isfinite(v.imag) for v in c):
            raise ValueError("series coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def as_array(self):
        return np.array(self.coeffs, dtype=complex)

    def truncate(self, order):
        c = self.as_array()
        if order + 1 <= len(c):
            return TruncSeries(c[: order + 1])
        return TruncSeries(np.concatenate([c, np.zeros(order + 1 - len(c))]))

    def __call__(self, x):
        # Horner, highest power first
        x = np.asarray(x, dtype=complex)
        acc = np.zeros_like(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if acc.ndim else complex(acc)

    def __add__(self, other):
        k = min(self.order, other.order)
        return TruncSeries(self.as_array()[: k + 1] + other.as_array()[: k + 1])

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return TruncSeries(self.as_array() * complex(other))

    __rmul__ = __mul__


def series_mul(a, b):
    """Cauchy product of two series, truncated at the smaller order."""
    k = min(a.order, b.order)
    ca, cb = a.as_array(), b.as_array()
    out = np.zeros(k + 1, dtype=complex)
    for n in range(k + 1):
        out[n] = np.dot(ca[: n + 1], cb[n::-1])
    return TruncSeries(out)


def series_laplace(s):
    """Laplace image of a series in ``t`` as a series in ``u = 1/s``.

    ``c_n t**n`` maps to ``c_n n! u**(n+1)``; the result has order ``K + 1``
    and a zero constant term.
    """
    c = s.as_array()
    out = np.zeros(len(c) + 1, dtype=complex)
    for n, cn in enumerate(c):
        out[n + 1] = cn * factorial(n)
    return TruncSeries(out)


@dataclass(frozen=True)
class PadeRational:
    """Rational function ``num(x) / den(x)``, coefficients in ascending powers.

    :func:`pade` always returns ``den[0] == 1``.  Rationals in ``s`` produced
    by :func:`to_s_domain` carry whatever normalisation the back substitution
    gives (monic leading coefficient).
    """

    num: tuple
    den: tuple

    def __init__(self, num, den):
        object.__setattr__(self, "num", tuple(complex(v) for v in num))
        object.__setattr__(self, "den", tuple(complex(v) for v in den))
        if not self.den or all(d == 0 for d in self.den):
            raise ValueError("denominator is identically zero")

    @property
    def M(self):
        return len(self.num) - 1

    @property
    def N(self):
        return len(self.den) - 1

    def __call__(self, x):
        x = np.asarray(x, dtype=complex)
        p = np.polynomial.polynomial.polyval(x, np.array(self.num))
        q = np.polynomial.polynomial.polyval(x, np.array(self.den))
        out = p / q
        return out if out.ndim else complex(out)

    def taylor(self, order):
        """Power series of ``num/den`` about 0 (requires ``den[0] != 0``)."""
        q = np.array(self.den)
        if q[0] == 0:
            raise ValueError("denominator vanishes at 0")
        p = np.zeros(order + 1, dtype=complex)
        p[: min(len(self.num), order + 1)] = self.num[: order + 1]
        c = np.zeros(order + 1, dtype=complex)
        for n in range(order + 1):
            acc = p[n]
            for j in range(1, min(n, len(q) - 1) + 1):
                acc -= q[j] * c[n - j]
            c[n] = acc / q[0]
        return TruncSeries(c)


def _full_pivot_solve(A, rhs, rtol=RANK_RTOL):
    """Gaussian elimination with complete pivoting.

    Returns ``(x, rank)``.  ``x`` is None when the numerical rank is below the
    number of unknowns; pivots smaller than ``rtol * ||A||_F`` count as zero.
    """
    A = np.array(A, dtype=complex)
    b = np.array(rhs, dtype=complex)
    n = A.shape[0]
    if n == 0:
        return np.zeros(0, dtype=complex), 0
    tol = rtol * np.linalg.norm(A)
    cols = np.arange(n)
    rank = 0
    for k in range(n):
        sub = np.abs(A[k:, k:])
        i, j = np.unravel_index(np.argmax(sub), sub.shape)
        i += k
        j += k
        if sub.max() <= tol:
            break
        A[[k, i]] = A[[i, k]]
        b[[k, i]] = b[[i, k]]
        A[:, [k, j]] = A[:, [j, k]]
        cols[[k, j]] = cols[[j, k]]
        rank += 1
        for r in range(k + 1, n):
            f = A[r, k] / A[k, k]
            A[r, k:] -= f * A[k, k:]
            b[r] -= f * b[k]
    if rank < n:
        return None, rank
    y = np.zeros(n, dtype=complex)
    for k in range(n - 1, -1, -1):
        y[k] = (b[k] - np.dot(A[k, k + 1 :], y[k + 1 :])) / A[k, k]
    x = np.zeros(n, dtype=complex)
    x[cols] = y
    return x, rank


def pade(series, M, N, reduce=True):
    """``[M/N]`` Pade approximant of a truncated series.

    The denominator ``1 + b_1 x + ... + b_N x**N`` solves the Toeplitz system
    that cancels the coefficients of ``x**(M+1) .. x**(M+N)`` in
    ``den * series``; the numerator is then read off the product.

    When the system is rank deficient by ``d`` the input is of lower type and
    both degrees are lowered by ``d`` (the standard degree-reduction rule).
    With ``reduce=False`` a :class:`SingularPadeSystem` is raised instead.
    """
    if M < 0 or N < 0:
        raise ValueError("Pade orders must be non-negative")
    if M + N > series.order:
        raise ValueError(f"[{M}/{N}] needs order >= {M + N}, series has {series.order}")
    c = series.as_array()

    def coef(i):
        return c[i] if i >= 0 else 0.0

    while True:
        A = np.array([[coef(M + k - j) for j in range(1, N + 1)] for k in range(1, N + 1)],
                     dtype=complex).reshape(N, N)
        rhs = np.array([-coef(M + k) for k in range(1, N + 1)], dtype=complex)
        x, rank = _full_pivot_solve(A, rhs)
        if x is not None:
            break
        if not reduce:
            raise SingularPadeSystem(f"[{M}/{N}] system has rank {rank} < {N}")
        d = N - rank
        N -= d
        M = max(M - d, 0)
    den = np.concatenate([[1.0], x])
    num = np.array([sum(den[j] * coef(i - j) for j in range(min(i, N) + 1)) for i in range(M + 1)])
    return PadeRational(num, den)


def to_s_domain(r):
    """Rewrite a rational in ``u`` as a rational in ``s = 1/u``.

    Both polynomials are multiplied by ``s**D`` with ``D = max(M, N)``.
    """
    D = max(r.M, r.N)
    num = np.zeros(D + 1, dtype=complex)
    den = np.zeros(D + 1, dtype=complex)
    for i, a in enumerate(r.num):
        num[D - i] += a
    for j, b in enumerate(r.den):
        den[D - j] += b
    return PadeRational(num, den)


def _trim(p, rtol=1e-14):
    p = np.array(p, dtype=complex)
    scale = np.max(np.abs(p)) if len(p) else 0.0
    n = len(p)
    while n > 0 and abs(p[n - 1]) <= rtol * scale:
        n -= 1
    return p[:n]


def _cluster_roots(roots, rtol=ROOT_CLUSTER_RTOL):
    """Group numerically coincident roots; returns ``[(mean_root, multiplicity)]``."""
    groups = []
    for z in sorted(roots, key=lambda v: (v.real, v.imag)):
        for g in groups:
            ref = np.mean(g)
            if abs(z - ref) <= rtol * max(1.0, abs(ref)):
                g.append(z)
                break
        else:
            groups.append([z])
    return [(complex(np.mean(g)), len(g)) for g in groups]


def pade_inverse_laplace(r):
    """Inverse Laplace transform of a proper rational function of ``s``.

    Roots of the denominator come from companion-matrix eigenvalues; roots
    closer than ``1e-8`` (relative) are merged into one pole of higher order.
    Each term ``c / (s - p)**k`` becomes ``c t**(k-1) exp(p t) / (k-1)!``.
    """
    num = _trim(r.num)
    den = _trim(r.den)
    if len(den) == 0:
        raise ValueError("denominator is identically zero")
    n = len(den) - 1
    if len(num) == 0:
        return ExpPolySum([])
    if len(num) - 1 >= n:
        raise ImproperRational(f"numerator degree {len(num) - 1} >= denominator degree {n}")
    lead = den[-1]
    poles = _cluster_roots(np.roots(den[::-1]))

    # D(s) rebuilt from the clustered poles so the basis below is exact
    def poly_from(factors):
        p = np.array([lead])
        for z, m in factors:
            for _ in range(m):
                p = np.polynomial.polynomial.polymul(p, [-z, 1.0])
        return p

    basis, labels = [], []
    for idx, (z, m) in enumerate(poles):
        for k in range(1, m + 1):
            rest = [(w, mm) for jdx, (w, mm) in enumerate(poles) if jdx != idx]
            rest.append((z, m - k))
            col = np.zeros(n, dtype=complex)
            p = poly_from(rest)
            col[: len(p)] = p
            basis.append(col)
            labels.append((z, k))
    rhs = np.zeros(n, dtype=complex)
    rhs[: len(num)] = num
    coeffs = np.linalg.solve(np.array(basis).T, rhs)
    terms = [(c / factorial(k - 1), z, k - 1) for c, (z, k) in zip(coeffs, labels)]
    return ExpPolySum(terms)


class ExpPolySum:
    """Finite sum ``sum(c * t**k * exp(r*t))`` over ``(c, r, k)`` terms.

    Terms with the same power and (to ``1e-13`` relative) the same rate are
    merged on construction, rates below ``1e-13`` in modulus are set to 0 and
    exactly zero amplitudes are dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        merged = {}
        keys = []
        for c, rate, k in terms:
            c, rate, k = complex(c), complex(rate), int(k)
            if abs(rate) <= RATE_MERGE_RTOL:
                rate = 0j
            if k < 0:
                raise ValueError("powers must be non-negative")
            for key in keys:
                if key[1] == k and abs(key[0] - rate) <= RATE_MERGE_RTOL * max(1.0, abs(rate)):
                    merged[key] += c
                    break
            else:
                key = (rate, k)
                keys.append(key)
                merged[key] = c
        self.terms = tuple((merged[key], key[0], key[1]) for key in keys if merged[key] != 0)

    def __repr__(self):
        return f"ExpPolySum({list(self.terms)!r})"

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros(t.shape, dtype=complex)
        for c, rate, k in self.terms:
            out += c * t**k * np.exp(rate * t)
        return out if out.ndim else complex(out)

    @property
    def rates(self):
        return sorted({r for _, r, _ in self.terms}, key=lambda z: (z.real, z.imag))

    def __add__(self, other):
        if not isinstance(other, ExpPolySum):
            other = ExpPolySum([(other, 0.0, 0)])
        return ExpPolySum(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return self * -1.0

    def __sub__(self, other):
        return self + (-other if isinstance(other, ExpPolySum) else -complex(other))

    def __mul__(self, other):
        if isinstance(other, ExpPolySum):
            return ExpPolySum([(c1 * c2, r1 + r2, k1 + k2)
                               for c1, r1, k1 in self.terms for c2, r2, k2 in other.terms])
        other = complex(other)
        return ExpPolySum([(c * other, r, k) for c, r, k in self.terms])

    __rmul__ = __mul__

    def derivative(self):
        out = []
        for c, rate, k in self.terms:
            out.append((c * rate, rate, k))
            if k > 0:
                out.append((c * k, rate, k - 1))
        return ExpPolySum(out)

    def integral(self):
        """Antiderivative vanishing at ``t = 0``.

        The constants scale like ``k!/r**(k+1)``, so nonzero rates much
        smaller than 1 lose digits to cancellation near ``t = 0``.
        """
        out = []
        for c, rate, k in self.terms:
            if rate == 0:
                out.append((c / (k + 1), 0.0, k + 1))
                continue
            # int_0^t s^k e^{rs} ds
            #   = e^{rt} sum_j (-1)^j k!/(k-j)! t^{k-j} / r^{j+1} - (-1)^k k!/r^{k+1}
            for j in range(k + 1):
                out.append((c * (-1) ** j * factorial(k) / factorial(k - j) / rate ** (j + 1), rate, k - j))
            out.append((-c * (-1) ** k * factorial(k) / rate ** (k + 1), 0.0, 0))
        return ExpPolySum(out)

    def taylor(self, order):
        """Taylor coefficients about ``t = 0`` through ``t**order``."""
        c = np.zeros(order + 1, dtype=complex)
        for amp, rate, k in self.terms:
            term = amp
            for j in range(order + 1 - k):
                c[k + j] += term
                term = term * rate / (j + 1)
        return TruncSeries(c)

    def laplace(self, s):
        """Forward Laplace transform evaluated at ``s`` (needs ``Re s`` > every ``Re r``)."""
        s = np.asarray(s, dtype=complex)
        out = np.zeros(s.shape, dtype=complex)
        for c, rate, k in self.terms:
            out += c * factorial(k) / (s - rate) ** (k + 1)
        return out if out.ndim else complex(out)


def laplace_pade_resum(series, M=2, N=2, reduce=True):
    """Laplace transform, ``[M/N]`` Pade in ``u = 1/s``, inverse Laplace.

    Needs ``M + N <= K + 1`` where ``K`` is the order of ``series``.
    """
    image = series_laplace(series)
    if M + N > image.order:
        raise ValueError(f"[{M}/{N}] needs series order >= {M + N - 1}")
    return pade_inverse_laplace(to_s_domain(pade(image, M, N, reduce=reduce)))
