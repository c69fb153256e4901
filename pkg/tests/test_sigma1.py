import numpy as np
import pytest

from cavity_darboux.errors import DegenerateAmplitude
from cavity_darboux.jc import PhysParams
from cavity_darboux.series import ExpPolySum
from cavity_darboux.solvers import sigma1
from cavity_darboux.solvers.rk import rk_oracle

P = PhysParams(b0=2.0, omega=1.0, coupling=1.0, hbar=1.0)


def reference(p, ts):
    grid = np.concatenate([[0.0], ts])
    return rk_oracle(sigma1.riccati_rhs(p), list(sigma1.initial_state(p)), grid, rtol=1e-14, atol=1e-16)[1:]


def test_initial_state():
    p = PhysParams(b0=3.0, omega=2.0, coupling=0.5, hbar=1.0)
    a0, b0 = sigma1.initial_state(p)
    assert b0 == 3.0
    assert a0 == pytest.approx(1j * 2.0 * 3.0 * 0.5 / (2 * 0.5 * 2.0))


def test_degenerate_amplitude():
    with pytest.raises(DegenerateAmplitude):
        sigma1.initial_state(PhysParams(b0=1.0))
    with pytest.raises(DegenerateAmplitude):
        sigma1.hpm_solve_sigma1(PhysParams(b0=1.0))


def test_zeroth_order_is_initial_state():
    h = sigma1.hpm_solve_sigma1(P, 2)
    assert h.order == 2
    a0, b0 = sigma1.initial_state(P)
    assert h.alpha_orders[0](1.3) == pytest.approx(a0)
    assert h.beta_orders[0](1.3) == pytest.approx(b0)
    assert all(isinstance(x, ExpPolySum) for x in h.alpha_orders + h.beta_orders)


def test_orders_vanish_at_origin():
    h = sigma1.hpm_solve_sigma1(P, 3)
    for k in range(1, 4):
        assert abs(h.alpha_orders[k](0.0)) < 1e-12
        assert abs(h.beta_orders[k](0.0)) < 1e-12


def test_taylor_coefficients_match_ode():
    # first derivative of the summed expansion equals the right-hand side at 0
    h = sigma1.hpm_solve_sigma1(P, 3)
    da, db = sigma1.riccati_rhs(P)(0.0, np.array(sigma1.initial_state(P)))
    assert h.alpha_series(1).coeffs[1] == pytest.approx(da)
    assert h.beta_series(1).coeffs[1] == pytest.approx(db)


def test_agrees_with_oracle_near_origin():
    ts = np.linspace(1e-3, 1e-2, 10)
    ref = reference(P, ts)
    a, b = sigma1.hpm_solve_sigma1(P, 3).evaluate(ts)
    assert np.abs(a - ref[:, 0]).max() < 1e-6
    assert np.abs(b - ref[:, 1]).max() < 1e-6


def test_error_is_fourth_order():
    ts = np.geomspace(1e-3, 2e-2, 6)
    ref = reference(P, ts)
    a, b = sigma1.hpm_solve_sigma1(P, 3).evaluate(ts)
    ratio = np.maximum(np.abs(a - ref[:, 0]), np.abs(b - ref[:, 1])) / ts**4
    assert ratio.max() / ratio.min() < 1.5


def test_higher_order_is_more_accurate():
    ts = np.array([0.05])
    ref = reference(P, ts)
    errs = []
    for order in (3, 5):
        a, _ = sigma1.hpm_solve_sigma1(P, order).evaluate(ts)
        errs.append(abs(a[0] - ref[0, 0]))
    assert errs[1] < errs[0] / 50


def test_evaluate_branches_agree():
    h = sigma1.hpm_solve_sigma1(P, 3)
    t = 0.4  # inside the Taylor branch
    assert h.evaluate(t)[0] == pytest.approx(h.alpha(t), rel=1e-9)


def test_resummation_matches_series_at_origin():
    h = sigma1.hpm_solve_sigma1(P, 3)
    ra, rb = sigma1.resum_sigma1(h, 2, 2)
    a0, b0 = sigma1.initial_state(P)
    assert ra(0.0) == pytest.approx(a0, abs=1e-10)
    assert rb(0.0) == pytest.approx(b0, abs=1e-10)
    with pytest.raises(ValueError):
        sigma1.resum_sigma1(sigma1.hpm_solve_sigma1(P, 2), 2, 2)


def test_closed_form_at_origin():
    p = PhysParams(b0=2.0, omega=1.0, coupling=2.0, hbar=1.0)
    a, b = sigma1.closed_form_sigma1(0.0, p)
    hw = p.hbar_coupling
    assert a == pytest.approx(-0.5j * p.omega * (p.b0 - p.b0**2) * hw * (hw - 1))
    assert abs(b) < 1e-14


def test_closed_form_derivative_by_finite_difference():
    p = PhysParams(b0=2.5, omega=1.3, coupling=0.7, hbar=1.2)
    t = np.linspace(0.1, 5, 9)
    h = 1e-6
    ap, bp = sigma1.closed_form_sigma1(t + h, p)
    am, bm = sigma1.closed_form_sigma1(t - h, p)
    da, db = sigma1.closed_form_sigma1_dot(t, p)
    np.testing.assert_allclose(da, (ap - am) / (2 * h), rtol=1e-7, atol=1e-6)
    np.testing.assert_allclose(db, (bp - bm) / (2 * h), rtol=1e-7, atol=1e-6)
