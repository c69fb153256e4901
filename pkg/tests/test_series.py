import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cavity_darboux.errors import ImproperRational, SingularPadeSystem
from cavity_darboux.series import (
    ExpPolySum,
    PadeRational,
    TruncSeries,
    laplace_pade_resum,
    pade,
    pade_inverse_laplace,
    series_laplace,
    series_mul,
    to_s_domain,
)

coef = st.floats(min_value=-10, max_value=10, allow_nan=False)
coeffs = st.lists(coef, min_size=1, max_size=8)


@given(coeffs, coeffs)
def test_cauchy_product_commutes(a, b):
    x, y = TruncSeries(a), TruncSeries(b)
    np.testing.assert_allclose((x * y).as_array(), (y * x).as_array(), atol=1e-12)


@given(coeffs, coeffs, coeffs)
def test_cauchy_product_associative(a, b, c):
    x, y, z = TruncSeries(a), TruncSeries(b), TruncSeries(c)
    lhs = ((x * y) * z).as_array()
    rhs = (x * (y * z)).as_array()
    np.testing.assert_allclose(lhs, rhs, atol=1e-9 * max(1.0, np.abs(lhs).max()))


def test_product_truncates_to_shorter_order():
    a = TruncSeries([1, 1, 1, 1])
    b = TruncSeries([1, -1])
    assert series_mul(a, b).coeffs == (1, 0)


def test_product_matches_polynomial_multiplication():
    a, b = [1, 2, 3], [4, 5, 6]
    full = np.polynomial.polynomial.polymul(a, b)
    np.testing.assert_array_equal(series_mul(TruncSeries(a), TruncSeries(b)).as_array(), full[:3])


def test_horner_evaluation():
    s = TruncSeries([1, -2, 0.5])
    assert s(2.0) == 1 - 4 + 2


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        TruncSeries([1, np.nan])
    with pytest.raises(ValueError):
        TruncSeries([])


def test_laplace_step():
    s = series_laplace(TruncSeries([1, 1, 1, 1]))
    np.testing.assert_array_equal(s.as_array(), [0, 1, 1, 2, 6])


def test_pade_of_exp_is_bilinear():
    taylor = TruncSeries([1 / math.factorial(k) for k in range(3)])
    r = pade(taylor, 1, 1)
    np.testing.assert_allclose(r.num, [1, 0.5], atol=1e-15)
    np.testing.assert_allclose(r.den, [1, -0.5], atol=1e-15)


def test_pade_reproduces_taylor():
    taylor = TruncSeries([1 / math.factorial(k) for k in range(6)])
    r = pade(taylor, 3, 2)
    np.testing.assert_allclose(r.taylor(5).as_array(), taylor.as_array(), atol=1e-13)


def test_pade_degenerate_reduces_by_default():
    # geometric series is exactly [0/1]; [2/2] is rank deficient
    taylor = TruncSeries([1.0] * 5)
    r = pade(taylor, 2, 2)
    x = np.linspace(0, 0.5, 11)
    np.testing.assert_allclose(r(x), 1 / (1 - x), rtol=1e-12)
    with pytest.raises(SingularPadeSystem):
        pade(taylor, 2, 2, reduce=False)


def test_pade_needs_enough_terms():
    with pytest.raises(ValueError):
        pade(TruncSeries([1, 1]), 2, 2)


def test_to_s_domain_and_inverse_of_exponential():
    # L[e^{2t}] = u/(1-2u) in u = 1/s
    image = series_laplace(ExpPolySum([(1, 2, 0)]).taylor(4))
    f = pade_inverse_laplace(to_s_domain(pade(image, 1, 1)))
    assert len(f.terms) == 1
    c, r, k = f.terms[0]
    assert abs(c - 1) < 1e-12 and abs(r - 2) < 1e-12 and k == 0


def test_improper_rational_rejected():
    with pytest.raises(ImproperRational):
        pade_inverse_laplace(PadeRational([1, 1], [1, 1]))


def test_repeated_pole():
    f = ExpPolySum([(1.5, -1, 1), (0.5, -1, 0)])
    g = laplace_pade_resum(f.taylor(5), 2, 2)
    t = np.linspace(0, 2, 21)
    np.testing.assert_allclose(g(t), f(t), atol=1e-9)


def test_two_rate_recovery():
    f = ExpPolySum([(3, -1, 0), (1, 0, 0)])
    g = laplace_pade_resum(f.taylor(4), 2, 2)
    assert len(g.rates) == 2
    np.testing.assert_allclose(sorted(r.real for r in g.rates), [-1, 0], atol=1e-10)


amp = st.floats(min_value=-2, max_value=2, allow_nan=False)
# the closed-form antiderivative carries k!/r**(k+1) constants, so rates are
# kept either zero or away from it
rates = st.one_of(st.just(0j), st.complex_numbers(max_magnitude=2).filter(lambda z: abs(z) >= 0.1))
terms = st.lists(st.tuples(amp, rates, st.integers(0, 2)), min_size=1, max_size=4)


@settings(max_examples=50)
@given(terms)
def test_expsum_integral_derivative_roundtrip(tl):
    f = ExpPolySum(tl)
    t = np.linspace(0, 1, 7)
    np.testing.assert_allclose(f.integral().derivative()(t), f(t), atol=1e-9 * (1 + np.abs(f(t)).max()))
    assert abs(f.integral()(0.0)) < 1e-9


@settings(max_examples=50)
@given(terms)
def test_expsum_taylor_matches_values(tl):
    f = ExpPolySum(tl)
    x = 0.05
    assert abs(f.taylor(20)(x) - f(x)) < 1e-10 * (1 + abs(f(x)))


@settings(max_examples=50)
@given(terms, terms)
def test_expsum_product_pointwise(a, b):
    f, g = ExpPolySum(a), ExpPolySum(b)
    t = np.linspace(0, 1, 5)
    np.testing.assert_allclose((f * g)(t), f(t) * g(t), atol=1e-10 * (1 + np.abs(f(t) * g(t)).max()))


def test_expsum_forward_laplace():
    f = ExpPolySum([(2, -1, 1)])
    s = 3.0
    assert abs(f.laplace(s) - 2 / (s + 1) ** 2) < 1e-15


def test_expsum_merges_rates():
    f = ExpPolySum([(1, 1.0, 0), (2, 1.0 + 1e-15, 0), (1, 1.0, 1)])
    assert len(f.terms) == 2
