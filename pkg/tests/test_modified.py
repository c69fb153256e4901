import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cavity_darboux.jc import PhysParams, atomic_inversion, poisson_truncation
from cavity_darboux.modified import (
    ModifiedDrive,
    modified_bound,
    modified_inversion,
    modified_rabi_frequency,
)


def brute_force(t, nbb, p, n_max):
    out = np.empty(len(t))
    for i, (tk, occ) in enumerate(zip(t, nbb)):
        acc = 0.0
        for n in range(n_max + 1):
            pn = math.exp(-p.nbar) * p.nbar**n / math.factorial(n)
            om = math.sqrt(p.coupling * (p.kappa**2 + occ + n + 1))
            acc += pn * (1 - 2 * p.coupling**2 * math.sqrt(occ + n + 1) * math.sin(om * tk) ** 2 / om**2)
        out[i] = acc
    return out


def test_against_double_loop(params, rng):
    t = rng.uniform(0, 50, 60)
    nbb = rng.uniform(0, 20, 60)
    n_max = poisson_truncation(params.nbar)
    np.testing.assert_allclose(modified_inversion(t, nbb, params), brute_force(t, nbb, params, n_max), atol=1e-10)


def test_normalisation_at_origin(params):
    assert modified_inversion(0.0, 7.5, params) == pytest.approx(1.0, abs=1e-14)


def test_rabi_frequency_reduces_to_standard(params):
    n = np.arange(5)
    np.testing.assert_allclose(modified_rabi_frequency(n, 0.0, params),
                               np.sqrt(params.kappa**2 + n + 1))


def test_vacuum_occupation_is_not_standard_formula(params):
    # amplitude sqrt(n+1) rather than n+1
    t = np.linspace(0.1, 5, 7)
    assert not np.allclose(modified_inversion(t, np.zeros_like(t), params), atomic_inversion(t, params))


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 100), st.floats(0, 50))
def test_bound_holds(nbb, t):
    p = PhysParams()
    n_max = poisson_truncation(p.nbar)
    assert abs(modified_inversion(t, nbb, p)) <= modified_bound(nbb, p, n_max) + 1e-12


def test_drive_operations():
    d = ModifiedDrive(np.linspace(0, 20, 5), np.full(5, 2.0))
    np.testing.assert_array_equal(d.switched_on(10).nbb, [0, 0, 2, 2, 2])
    np.testing.assert_array_equal(d.scaled(0.5).nbb, np.ones(5))
    with pytest.raises(ValueError):
        ModifiedDrive(np.zeros(2), np.array([1.0, -1.0]))
    with pytest.raises(ValueError):
        d.scaled(-1)
