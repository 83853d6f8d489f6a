from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import warnings

import numpy as np
import pytest
from scipy.special import gamma

from fracslice.calculus import (
    AffineWeight,
    CustomWeight,
    ExpODEWeight,
    FDPolicy,
    FracOrder,
    QuadratureSpec,
    caputo_derivative_left,
    caputo_derivative_right,
    derivative,
    frac_integral_left,
    frac_integral_right,
    gamma_fn,
    power_law_derivative,
    power_law_integral,
    rl_derivative_left,
    rl_derivative_right,
    weight_from_family,
)
from fracslice.calculus.quadrature import SCHEMES, graded_levels, graded_rule
from fracslice.error_message import DomainError, ErrorMessage, StencilError
from .utils import (
    EXP_LAMBDA,
    multivector_equals,
    random_multivector,
    test_functions_keys,
    test_functions_values,
    test_orders,
    test_orders_keys,
    test_quad,
    test_weights_keys,
    test_weights_values,
)

test_exponents = [0.0, 0.5, 1.0, 2.0]
test_exponents_keys = ["sigma_{}".format(sigma) for sigma in test_exponents]

gamma_points = [0.1, 0.5, 1.0, 1.5, 2.5, 7.3, 20.0]


def _power(g, sigma, end, side="left"):
    if side == "left":
        return lambda t: (float(g(t)) - float(g(end))) ** sigma
    return lambda t: (float(g(end)) - float(g(t))) ** sigma


def test_gamma_fn():
    for x in gamma_points:
        assert gamma_fn(x) == pytest.approx(gamma(x), rel=1e-12)
    with pytest.raises(DomainError):
        gamma_fn(0.0)
    with pytest.raises(DomainError):
        gamma_fn(-1.5)
    with pytest.raises(DomainError):
        gamma_fn(np.inf)


def test_frac_order():
    assert FracOrder(0.25).complement == FracOrder(0.75)
    assert float(FracOrder(FracOrder(0.5))) == 0.5
    for bad in [0.0, 1.0, -0.5, 1.5, "half"]:
        with pytest.raises(ValueError):
            FracOrder(bad)
    with pytest.raises(ValueError):
        frac_integral_left(np.exp, 0.0, 1.0, AffineWeight(), 0.5)


@pytest.mark.parametrize("g", test_weights_values, ids=test_weights_keys)
def test_weights_are_increasing_ode_solutions(g):
    assert np.all(g.derivative(g.grid()) > 0)
    assert g.ode_residual(g.lam) < 1e-12
    xs = np.linspace(0.0, 1.0, 7)
    np.testing.assert_allclose(g.inverse(g(xs)), xs, atol=1e-12)


def test_weight_errors():
    with pytest.raises(ValueError):
        AffineWeight(-1.0, 0.0)
    with pytest.raises(ValueError):
        ExpODEWeight(1.0, 0.0, EXP_LAMBDA)
    with pytest.raises(ValueError):
        AffineWeight(1.0, 0.0, (1.0, 0.0))
    with pytest.raises(ValueError):
        weight_from_family("cubic", 1.0, 0.0, 0.0, (0.0, 1.0))
    with pytest.raises(DomainError):
        AffineWeight().check_contains(1.5)


def test_weight_from_family():
    affine = weight_from_family("affine", 2.0, 1.0, 0.0, (0.0, 1.0))
    assert affine(0.5) == pytest.approx(2.0)
    assert affine.lam == 0.0
    exp = weight_from_family("exp", -1.0, 1.0, EXP_LAMBDA, (0.0, 1.0))
    assert exp.lam == EXP_LAMBDA
    assert exp(0.0) == pytest.approx(0.0)


def test_custom_weight_inverse_by_bisection():
    g = CustomWeight(lambda t: t ** 3 + t, lambda t: 3 * t ** 2 + 1, (0.0, 1.0))
    assert g.inverse(g(0.4)) == pytest.approx(0.4, abs=1e-10)
    assert g.inverse(-1.0) == 0.0
    with pytest.raises(NotImplementedError):
        g.lam
    with pytest.raises(NotImplementedError):
        g.second_derivative(0.5)


def test_derivative():
    value, error = derivative(np.sin, 0.3)
    assert value == pytest.approx(np.cos(0.3), abs=1e-10)
    assert error < 1e-8
    C = random_multivector()
    value, _ = derivative(lambda t: t * t * C, 0.5)
    multivector_equals(value, C, atol=1e-9)
    with pytest.raises(StencilError):
        derivative(np.sin, 0.0, 0.0, 1.0, FDPolicy(1e-3, 2))
    value, _ = derivative(np.sin, 1e-6, 0.0, 1.0, FDPolicy(1e-3, 2, shrink=True))
    assert value == pytest.approx(np.cos(1e-6), abs=1e-6)
    with pytest.raises(ValueError):
        FDPolicy(step=0.0)
    with pytest.raises(ValueError):
        FDPolicy(levels=-1)


def test_quadrature_spec():
    assert test_quad.with_order(32).order == 32
    assert test_quad.shrinking().fd.shrink
    assert test_quad == QuadratureSpec("gauss-jacobi", 16, FDPolicy(1e-3, 2))
    with pytest.raises(ValueError):
        QuadratureSpec("simpson")
    with pytest.raises(ValueError):
        QuadratureSpec(order=2)


@pytest.mark.parametrize("alpha", test_orders, ids=test_orders_keys)
@pytest.mark.parametrize("sigma", test_exponents, ids=test_exponents_keys)
@pytest.mark.parametrize("g", test_weights_values, ids=test_weights_keys)
def test_power_law_integral(g, sigma, alpha):
    x = 0.7
    expected = power_law_integral(sigma, alpha, float(g(x)) - float(g(0.0)))
    value = frac_integral_left(_power(g, sigma, 0.0), 0.0, alpha, g, x, test_quad)
    assert value == pytest.approx(expected, rel=1e-8)
    expected = power_law_integral(sigma, alpha, float(g(1.0)) - float(g(0.3)))
    value = frac_integral_right(_power(g, sigma, 1.0, "right"), 1.0, alpha, g, 0.3, test_quad)
    assert value == pytest.approx(expected, rel=1e-8)


@pytest.mark.parametrize("alpha", test_orders, ids=test_orders_keys)
@pytest.mark.parametrize("g", test_weights_values, ids=test_weights_keys)
def test_power_law_derivative(g, alpha):
    sigma = 1.5
    x = 0.6
    expected = power_law_derivative(sigma, alpha, float(g(x)) - float(g(0.0)))
    value = rl_derivative_left(_power(g, sigma, 0.0), 0.0, alpha, g, x, test_quad)
    assert value == pytest.approx(expected, rel=1e-6)
    expected = power_law_derivative(sigma, alpha, float(g(1.0)) - float(g(x)))
    value = rl_derivative_right(_power(g, sigma, 1.0, "right"), 1.0, alpha, g, x, test_quad)
    assert value == pytest.approx(expected, rel=1e-6)


def test_graded_scheme_agrees():
    g = AffineWeight()
    graded = QuadratureSpec("graded-composite", 64, test_quad.fd)
    for alpha in test_orders:
        expected = power_law_integral(1.0, alpha, 0.8)
        value = frac_integral_left(lambda t: t, 0.0, alpha, g, 0.8, graded)
        assert value == pytest.approx(expected, rel=1e-6)


def test_graded_rule():
    for levels in [1, 40]:
        nodes, weights, inner = graded_rule(16, levels)
        assert inner == 0.5 ** levels
        assert np.all(nodes > inner) and np.all(nodes < 1.0)
        assert weights.sum() + inner == pytest.approx(1.0, abs=1e-14)
    assert graded_levels(0.35, 0.65) == 40
    # nodes next to x stay distinct from x
    assert 0.5 ** graded_levels(0.35, 1e-3) >= 0.5e-12 * 0.35 / 1e-3
    nodes, _, _ = graded_rule(16, graded_levels(0.35, 0.65))
    assert np.all(0.35 + 0.65 * nodes > 0.35)


@pytest.mark.parametrize("alpha", test_orders, ids=test_orders_keys)
def test_graded_nested_right_integral(alpha):
    g = AffineWeight()
    graded = QuadratureSpec("graded-composite", 16, test_quad.fd)
    inner = lambda t: frac_integral_right(np.exp, 1.0, alpha, g, t, graded)
    value = frac_integral_right(inner, 1.0, 1.0 - alpha, g, 0.35, graded)
    # I^{1-alpha} I^alpha exp = integral of exp over [0.35, 1]
    assert value == pytest.approx(np.exp(1.0) - np.exp(0.35), abs=1e-6)


@pytest.mark.parametrize("alpha", test_orders, ids=test_orders_keys)
def test_graded_rl_derivative(alpha):
    g = AffineWeight()
    graded = QuadratureSpec("graded-composite", 32, test_quad.fd)
    x = 0.6
    expected = power_law_derivative(1.5, alpha, x)
    value = rl_derivative_left(_power(g, 1.5, 0.0), 0.0, alpha, g, x, graded)
    assert value == pytest.approx(expected, rel=1e-6)
    expected = power_law_derivative(1.5, alpha, 1.0 - x)
    value = rl_derivative_right(_power(g, 1.5, 1.0, "right"), 1.0, alpha, g, x, graded)
    assert value == pytest.approx(expected, rel=1e-6)


@pytest.mark.parametrize("alpha", test_orders, ids=test_orders_keys)
@pytest.mark.parametrize("scheme", SCHEMES)
@pytest.mark.parametrize("g", test_weights_values, ids=test_weights_keys)
def test_quadrature_converges_with_order(g, scheme, alpha):
    sigma = 0.5
    errors = []
    for order in [16, 32, 64]:
        quad = QuadratureSpec(scheme, order, test_quad.fd)
        expected = power_law_integral(sigma, alpha, float(g(0.7)) - float(g(0.0)))
        value = frac_integral_left(_power(g, sigma, 0.0), 0.0, alpha, g, 0.7, quad)
        left = abs(value - expected)
        expected = power_law_integral(sigma, alpha, float(g(1.0)) - float(g(0.3)))
        value = frac_integral_right(_power(g, sigma, 1.0, "right"), 1.0, alpha, g, 0.3, quad)
        errors.append(max(left, abs(value - expected)))
    # each doubling may at most double the error, above the rounding floor
    for coarse, fine in zip(errors[:-1], errors[1:]):
        assert fine <= 2 * coarse + 1e-13
    assert errors[-1] < 1e-8


@pytest.mark.parametrize("alpha", test_orders, ids=test_orders_keys)
@pytest.mark.parametrize("g", test_weights_values, ids=test_weights_keys)
def test_integral_is_right_linear(g, alpha):
    C1, C2, C = random_multivector(), random_multivector(), random_multivector()
    F = lambda t: np.sin(2 * t) * C1 + t * t * C2
    FC = lambda t: F(t) * C
    multivector_equals(
        frac_integral_left(FC, 0.0, alpha, g, 0.6, test_quad),
        frac_integral_left(F, 0.0, alpha, g, 0.6, test_quad) * C,
        atol=1e-10,
    )
    multivector_equals(
        frac_integral_right(FC, 1.0, alpha, g, 0.4, test_quad),
        frac_integral_right(F, 1.0, alpha, g, 0.4, test_quad) * C,
        atol=1e-10,
    )


def test_constant_rl_derivative():
    g = AffineWeight()
    # D^{1/2} 1 = 1 / sqrt(pi x)
    value = rl_derivative_left(lambda t: 1.0, 0.0, 0.5, g, 0.25, test_quad)
    assert value == pytest.approx(2.0 / np.sqrt(np.pi), rel=1e-6)


def test_multivector_integrand():
    g = AffineWeight()
    C = random_multivector()
    value = frac_integral_left(lambda t: t * C, 0.0, 0.5, g, 0.5, test_quad)
    multivector_equals(value, power_law_integral(1.0, 0.5, 0.5) * C, atol=1e-10)


def test_integral_at_endpoint_is_zero():
    g = AffineWeight()
    assert frac_integral_left(np.exp, 0.2, 0.5, g, 0.2, test_quad) == 0.0
    C = random_multivector()
    multivector_equals(
        frac_integral_right(lambda t: C, 0.8, 0.5, g, 0.8, test_quad), 0.0 * C
    )


def test_interval_errors():
    g = AffineWeight()
    with pytest.raises(DomainError):
        frac_integral_left(np.exp, 0.5, 0.5, g, 0.2)
    with pytest.raises(DomainError):
        frac_integral_right(np.exp, 0.5, 0.5, g, 0.8)
    with pytest.raises(DomainError):
        frac_integral_left(np.exp, 0.0, 0.5, g, 1.5)


@pytest.mark.parametrize("alpha", test_orders, ids=test_orders_keys)
@pytest.mark.parametrize("f, f_prime", test_functions_values, ids=test_functions_keys)
@pytest.mark.parametrize("g", test_weights_values, ids=test_weights_keys)
def test_fundamental_theorem(g, f, f_prime, alpha):
    x = 0.5
    inner = lambda t: frac_integral_left(f, 0.0, alpha, g, t, test_quad)
    value = rl_derivative_left(inner, 0.0, alpha, g, x, test_quad)
    assert value == pytest.approx(f(x), abs=1e-4)
    inner = lambda t: frac_integral_right(f, 1.0, alpha, g, t, test_quad)
    value = rl_derivative_right(inner, 1.0, alpha, g, x, test_quad)
    assert value == pytest.approx(f(x), abs=1e-4)


@pytest.mark.parametrize("alpha", test_orders, ids=test_orders_keys)
@pytest.mark.parametrize("f, f_prime", test_functions_values, ids=test_functions_keys)
@pytest.mark.parametrize("g", test_weights_values, ids=test_weights_keys)
def test_rl_caputo_bridge(g, f, f_prime, alpha):
    x = 0.4
    rl = rl_derivative_left(f, 0.0, alpha, g, x, test_quad)
    caputo = caputo_derivative_left(f, f_prime, 0.0, alpha, g, x, test_quad)
    gap = f(0.0) * (float(g(x)) - float(g(0.0))) ** (-alpha) / gamma(1.0 - alpha)
    assert rl - caputo == pytest.approx(gap, abs=1e-5)
    rl = rl_derivative_right(f, 1.0, alpha, g, x, test_quad)
    caputo = caputo_derivative_right(f, f_prime, 1.0, alpha, g, x, test_quad)
    gap = f(1.0) * (float(g(1.0)) - float(g(x))) ** (-alpha) / gamma(1.0 - alpha)
    assert rl - caputo == pytest.approx(gap, abs=1e-5)


def test_rl_full_output():
    g = AffineWeight()
    value, error = rl_derivative_left(np.exp, 0.0, 0.5, g, 0.5, test_quad, full_output=True)
    assert np.isfinite(value)
    assert 0.0 <= error < 1e-6


def test_caputo_fd_fallback_warns():
    g = AffineWeight()
    ErrorMessage.printed_fd_fallback.discard("a Caputo derivative")
    with pytest.warns(UserWarning):
        fallback = caputo_derivative_left(np.exp, None, 0.0, 0.5, g, 0.5, test_quad)
    exact = caputo_derivative_left(np.exp, np.exp, 0.0, 0.5, g, 0.5, test_quad)
    assert fallback == pytest.approx(exact, abs=1e-5)
    # the note is printed once per location
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        caputo_derivative_left(np.exp, None, 0.0, 0.5, g, 0.5, test_quad)
