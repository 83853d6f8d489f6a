from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import cmath
import math

import pytest

from fracslice.algebra import (
    Multivector,
    SlicePoint,
    UnitImaginary,
    complete_basis,
    embed_complex,
)
from fracslice.error_message import ContourError, DomainError, FitError
from fracslice.harness.families import (
    exp_slice_function,
    sm_lambda_function,
    smooth_slice_function,
)
from fracslice.monogenic import (
    AxialBox,
    Contour,
    SliceFunction,
    box_grid,
    cauchy_value,
    contour_integral,
    cr_residual,
    exp_conjugation_residual,
    morera_classify,
    representation_combine,
    series_fit,
    splitting_holomorphy_check,
)
from .utils import (
    EXP_LAMBDA,
    N_GENERATORS,
    multivector_equals,
    random_multivector,
    random_state,
    test_box,
    test_quad,
)

test_lambdas = [0.0, EXP_LAMBDA, -0.3]
test_lambdas_keys = ["lam_{}".format(lam) for lam in test_lambdas]

CENTER = complex(0.5, 0.0)
RADIUS = 0.4


def _member(lam):
    coefficients = [random_multivector(scale=0.5) for _ in range(4)]
    return sm_lambda_function(coefficients, lam, test_box)


def _conjugate():
    """u - I v, the standard non-holomorphic example."""
    return SliceFunction(
        lambda u, v, I: embed_complex(complex(u, -v), I), N_GENERATORS, "C2", domain=test_box
    )


def _square():
    return SliceFunction(
        lambda u, v, I: embed_complex(complex(u, v) ** 2, I), N_GENERATORS, "C2", domain=test_box
    )


def _interior_point(I=None):
    I = I or UnitImaginary.random(N_GENERATORS, random_state)
    u, v = random_state.uniform(0.2, 0.8), random_state.uniform(0.2, 0.8)
    return SlicePoint(u, v, I)


def _disk_point(I):
    rho, phi = 0.5 * RADIUS * random_state.uniform(), math.pi * random_state.uniform()
    return SlicePoint(CENTER.real + rho * math.cos(phi), rho * math.sin(phi), I)


@pytest.mark.parametrize("lam", test_lambdas, ids=test_lambdas_keys)
def test_member_has_zero_residual(lam):
    F = _member(lam)
    for _ in range(5):
        residual = cr_residual(F, _interior_point(), lam, test_quad.fd)
        assert residual.norm() < 1e-8


def test_damped_constant_is_member():
    C = random_multivector()
    for lam in test_lambdas:
        F = SliceFunction(lambda u, v, I, lam=lam: math.exp(-lam * u) * C, N_GENERATORS, domain=test_box)
        assert cr_residual(F, _interior_point(), lam, test_quad.fd).norm() < 1e-9


def test_residual_of_real_part():
    F = SliceFunction(lambda u, v, I: u, N_GENERATORS, domain=test_box)
    p = _interior_point()
    residual = cr_residual(F, p, 1.0, test_quad.fd)
    multivector_equals(residual, Multivector.scalar(N_GENERATORS, 0.5 + 0.5 * p.u), atol=1e-9)


def test_right_residual():
    C = random_multivector()
    left = SliceFunction(
        lambda u, v, I: embed_complex(complex(u, v), I) * C, N_GENERATORS, domain=test_box
    )
    right = SliceFunction(
        lambda u, v, I: C * embed_complex(complex(u, v), I), N_GENERATORS, domain=test_box
    )
    p = _interior_point()
    assert cr_residual(left, p, 0.0, test_quad.fd, side="left").norm() < 1e-9
    assert cr_residual(right, p, 0.0, test_quad.fd, side="right").norm() < 1e-9
    assert cr_residual(right, p, 0.0, test_quad.fd, side="left").norm() > 1e-3
    with pytest.raises(ValueError):
        cr_residual(left, p, 0.0, test_quad.fd, side="middle")


def test_residual_stencil_leaves_domain():
    F = _member(0.0)
    with pytest.raises(DomainError):
        cr_residual(F, SlicePoint(0.0, 0.5, UnitImaginary.basis(N_GENERATORS, 1)), 0.0, test_quad.fd)


@pytest.mark.parametrize("lam", test_lambdas, ids=test_lambdas_keys)
def test_exp_conjugation_identity(lam):
    f = smooth_slice_function(N_GENERATORS, random_state, test_box)
    for _ in range(5):
        assert exp_conjugation_residual(f, _interior_point(), lam, test_quad.fd).norm() < 1e-6


def test_representation_formula():
    F = _member(EXP_LAMBDA)
    Ix = UnitImaginary.random(N_GENERATORS, random_state)
    multivector_equals(representation_combine(F, 0.3, 0.4, Ix, Ix), F(0.3, 0.4, Ix), atol=1e-12)
    multivector_equals(
        representation_combine(F, 0.3, 0.0, UnitImaginary.basis(N_GENERATORS, 2), Ix),
        F(0.3, 0.0, Ix),
        atol=1e-12,
    )
    expected = F(0.6, 0.7, Ix)
    for _ in range(8):
        I = UnitImaginary.random(N_GENERATORS, random_state)
        multivector_equals(representation_combine(F, 0.6, 0.7, I, Ix), expected, atol=1e-8)


def test_splitting_holomorphy():
    I = UnitImaginary.random(N_GENERATORS, random_state)
    basis = complete_basis(I)
    grid = box_grid(test_box, 3, 3)
    assert splitting_holomorphy_check(_member(EXP_LAMBDA), I, basis, EXP_LAMBDA, grid, test_quad.fd) < 1e-6
    constant = SliceFunction(lambda u, v, I: 2.0, N_GENERATORS, domain=test_box)
    assert splitting_holomorphy_check(constant, I, basis, 0.0, grid, test_quad.fd) < 1e-12
    residual = splitting_holomorphy_check(_conjugate(), I, basis, 0.0, grid, test_quad.fd)
    assert residual == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(ValueError):
        splitting_holomorphy_check(constant, -I, basis, 0.0, grid, test_quad.fd)


def test_box_grid():
    grid = box_grid(test_box, 3, 4)
    assert len(grid) == 12
    assert all(0.0 < u < 1.0 and 0.0 < v < 1.0 for u, v in grid)
    assert any(v < 0 for _, v in box_grid(test_box, 2, 2, upper_only=False))


def test_axial_box():
    assert test_box.contains(0.5, -0.5)
    assert not test_box.contains(0.5, -0.5, upper_only=True)
    assert not test_box.contains(1.5, 0.5)
    assert test_box == AxialBox(0, 1, 1)
    with pytest.raises(ValueError):
        AxialBox(1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        AxialBox(0.0, 1.0, 0.0)


def test_slice_function_domain():
    F = _member(0.0)
    with pytest.raises(DomainError):
        F(2.0, 0.5, UnitImaginary.basis(N_GENERATORS, 1))
    upper = SliceFunction(lambda u, v, I: 1.0, N_GENERATORS, domain=test_box, upper_only=True)
    with pytest.raises(DomainError):
        upper(0.5, -0.5, UnitImaginary.basis(N_GENERATORS, 1))
    with pytest.raises(ValueError):
        SliceFunction(lambda u, v, I: 1.0, N_GENERATORS, smoothness="C7")


def test_lower_half_reads_opposite_unit():
    F = _square()
    I = UnitImaginary.random(N_GENERATORS, random_state)
    multivector_equals(F(0.3, -0.4, I), F(0.3, 0.4, -I))
    multivector_equals(F(0.3, -0.4, I), embed_complex(complex(0.3, -0.4) ** 2, I), atol=1e-14)


def test_contour_integral_algebra():
    I = UnitImaginary.random(N_GENERATORS, random_state)
    f = _conjugate()
    first = Contour.segment(0.2 + 0.1j, 0.6 + 0.3j, I)
    second = Contour.segment(0.6 + 0.3j, 0.7 + 0.7j, I)
    joined = contour_integral(None, first + second, f)
    parts = contour_integral(None, first, f) + contour_integral(None, second, f)
    multivector_equals(joined, parts, atol=1e-10)
    multivector_equals(
        contour_integral(None, first.reversed(), f), -contour_integral(None, first, f), atol=1e-10
    )
    zero = SliceFunction(lambda u, v, I: 0.0, N_GENERATORS, domain=test_box)
    assert contour_integral(None, Contour.circle(CENTER, RADIUS, I), zero).norm() == 0.0


def test_conjugate_circulation_is_area():
    I = UnitImaginary.random(N_GENERATORS, random_state)
    circle = Contour.circle(CENTER, RADIUS, I)
    # -I * (2 i * area) read in C_I
    expected = embed_complex(2 * math.pi * RADIUS ** 2, I)
    multivector_equals(contour_integral(None, circle, _conjugate()), expected, atol=1e-10)


def test_contour_errors():
    I = UnitImaginary.basis(N_GENERATORS, 1)
    with pytest.raises(ContourError):
        Contour([0j, 1j], [1, 1], [1, 1], I)
    with pytest.raises(ContourError):
        Contour.circle(CENTER, 0.0, I)
    with pytest.raises(ContourError):
        Contour.polyline([0j], I)
    with pytest.raises(ContourError):
        Contour.segment(0j, 1j, I) + Contour.segment(0j, 1j, -I)
    circle = Contour.circle(CENTER, RADIUS, I, nodes=16)
    assert circle.closed
    assert len(circle.samples) == 17
    rectangle = Contour.rectangle(0.1, 0.9, 0.1, 0.9, I, nodes_per_side=8)
    assert rectangle.closed
    assert len(rectangle) == 32


@pytest.mark.parametrize("lam", test_lambdas, ids=test_lambdas_keys)
def test_cauchy_theorem(lam):
    F = _member(lam)
    I = UnitImaginary.random(N_GENERATORS, random_state)
    weight = lambda w: math.exp(lam * w.real)
    assert contour_integral(weight, Contour.circle(CENTER, RADIUS, I, 512), F).norm() < 1e-8
    rectangle = Contour.rectangle(0.2, 0.8, -0.3, 0.4, I)
    assert contour_integral(weight, rectangle, F).norm() < 1e-8


def test_cauchy_value_of_constant():
    C = random_multivector()
    F = SliceFunction(lambda u, v, I: C, N_GENERATORS, domain=test_box)
    I = UnitImaginary.random(N_GENERATORS, random_state)
    value = cauchy_value(F, CENTER, RADIUS, SlicePoint(CENTER.real, 0.0, I), 0.0, 512)
    multivector_equals(value, C, atol=1e-10)


def test_cauchy_value_of_damped_constant():
    lam = 0.3
    C = random_multivector()
    F = SliceFunction(lambda u, v, I: math.exp(-lam * u) * C, N_GENERATORS, domain=test_box)
    I = UnitImaginary.random(N_GENERATORS, random_state)
    p = _disk_point(I)
    multivector_equals(cauchy_value(F, CENTER, RADIUS, p, lam, 512), math.exp(-lam * p.u) * C, atol=1e-6)


@pytest.mark.parametrize("lam", test_lambdas, ids=test_lambdas_keys)
def test_cauchy_value_reproduces_members(lam):
    F = _member(lam)
    I = UnitImaginary.random(N_GENERATORS, random_state)
    for _ in range(4):
        p = _disk_point(I)
        multivector_equals(cauchy_value(F, CENTER, RADIUS, p, lam, 512), F.at(p), atol=1e-6)
    p = _disk_point(I)
    multivector_equals(cauchy_value(_square(), CENTER, RADIUS, p), embed_complex(p.z ** 2, I), atol=1e-6)


def test_cauchy_value_errors():
    F = _member(0.0)
    I = UnitImaginary.basis(N_GENERATORS, 1)
    with pytest.raises(ContourError):
        cauchy_value(F, CENTER, RADIUS, SlicePoint(CENTER.real, RADIUS, I))
    with pytest.raises(DomainError):
        cauchy_value(F, CENTER, 0.9, SlicePoint(CENTER.real, 0.1, I))


def test_morera_classify():
    F = _member(EXP_LAMBDA)
    verdict = morera_classify(F, EXP_LAMBDA, trials=4, seed=0, tol=1e-8)
    assert verdict.passed
    verdict = morera_classify(_conjugate(), 0.0, trials=4, seed=0, tol=1e-8)
    assert not verdict.passed
    assert verdict.worst > 1e-3
    zero = SliceFunction(lambda u, v, I: 0.0, N_GENERATORS, domain=test_box)
    verdict = morera_classify(zero, 0.0, trials=2)
    assert verdict.passed and verdict.worst == 0.0
    with pytest.raises(DomainError):
        morera_classify(SliceFunction(lambda u, v, I: 0.0, N_GENERATORS), 0.0)


def test_series_fit_converges():
    C = random_multivector()
    F = exp_slice_function(C, test_box)
    I = UnitImaginary.random(N_GENERATORS, random_state)
    residuals = [series_fit(F, CENTER, 0.3, degree, I).residual for degree in range(2, 9)]
    assert all(later < earlier for earlier, later in zip(residuals[:-1], residuals[1:]))
    assert residuals[-1] < 1e-6


def test_series_fit_recovers_coefficients():
    coefficients = [random_multivector(scale=0.5) for _ in range(3)]
    F = sm_lambda_function(coefficients, EXP_LAMBDA, AxialBox(-1.0, 1.0, 1.0))
    I = UnitImaginary.random(N_GENERATORS, random_state)
    fit = series_fit(F, 0.0, 0.3, 2, I, EXP_LAMBDA, samples=24)
    assert fit.degree == 2
    assert fit.residual < 1e-10
    assert fit.holdout_residual < 1e-10
    for fitted, expected in zip(fit.coefficients, coefficients):
        multivector_equals(fitted, expected, atol=1e-9)
    with pytest.raises(FitError):
        series_fit(F, 0.0, 0.3, 4, I, samples=3)


def test_exp_slice_function_values():
    C = random_multivector()
    F = exp_slice_function(C, test_box)
    I = UnitImaginary.random(N_GENERATORS, random_state)
    multivector_equals(F(0.2, 0.3, I), embed_complex(cmath.exp(0.2 + 0.3j), I) * C, atol=1e-14)
    assert cr_residual(F, _interior_point(I), 0.0, test_quad.fd).norm() < 1e-8
