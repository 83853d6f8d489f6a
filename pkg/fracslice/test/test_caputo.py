from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import pytest
from scipy.special import gamma

from fracslice.algebra import Multivector, SlicePoint, UnitImaginary
from fracslice.calculus import power_law_derivative
from fracslice.error_message import ErrorMessage
from fracslice.harness.families import (
    constant_cross_function,
    linear_cross_function,
    smooth_cross_function,
    smooth_slice_function,
)
from fracslice.operators import (
    CAPUTO,
    RL,
    CornerVariant,
    MixedVariant,
    caputo_characterization_check,
    caputo_h_identity_residual,
    caputo_member_construct,
    caputo_operator,
    fd_partials,
    h_function,
    h_operator,
    is_caputo_member,
    is_frac_slice_monogenic,
    member_construct,
    mixed_operator,
    rl_operator,
)
from .utils import (
    N_GENERATORS,
    affine_config,
    multivector_equals,
    random_multivector,
    random_state,
    small_grid,
    test_configs_keys,
    test_configs_values,
)

variants = CornerVariant.all()
variants_keys = [variant.name for variant in variants]

mixed_variants = MixedVariant.all()
mixed_variants_keys = [variant.name for variant in mixed_variants]


def _point(u=0.4, v=0.6):
    return SlicePoint(u, v, UnitImaginary.random(N_GENERATORS, random_state))


@pytest.mark.parametrize("variant", variants, ids=variants_keys)
@pytest.mark.parametrize("cfg", test_configs_values, ids=test_configs_keys)
def test_constants_in_caputo_kernel(cfg, variant):
    f = constant_cross_function(random_multivector(), cfg)
    assert caputo_operator(f, None, variant, _point(), cfg).norm() == 0.0


@pytest.mark.parametrize("cfg", test_configs_values, ids=test_configs_keys)
def test_shifted_member(cfg):
    C0, K = random_multivector(), random_multivector()
    f = caputo_member_construct(C0, cfg, offset=K)
    report = is_caputo_member(f, cfg, small_grid)
    assert report.verdict
    assert report.max_residual < 1e-6
    assert not is_frac_slice_monogenic(f, CornerVariant(), cfg, small_grid).verdict


def test_unshifted_member_is_in_both_kernels():
    cfg = affine_config()
    f = caputo_member_construct(random_multivector(), cfg)
    assert is_caputo_member(f, cfg, small_grid).verdict
    assert is_frac_slice_monogenic(f, CornerVariant(), cfg, small_grid).verdict


def test_rl_operator_of_shifted_member():
    cfg = affine_config()
    C0, K = random_multivector(), random_multivector()
    p = _point()
    shifted = caputo_member_construct(C0, cfg, offset=K)
    rl = rl_operator(shifted, CornerVariant(), p, cfg)
    # the constant K contributes R_alpha(u) K + I R_beta(v) K to the RL operator
    expected = power_law_derivative(0.0, 0.5, p.u) * K + power_law_derivative(0.0, 0.5, p.v) * (
        p.I.as_multivector() * K
    )
    multivector_equals(rl, expected, atol=1e-6)


def test_scaled_weight_is_not_a_member():
    cfg = affine_config()
    C = random_multivector()
    report = is_caputo_member(linear_cross_function(C, cfg), cfg, small_grid)
    assert not report.verdict
    p = _point()
    # Caputo derivative of t C is t^{1-alpha} / Gamma(2 - alpha) C
    expected = p.u ** 0.5 / gamma(1.5) * C
    value = caputo_operator(linear_cross_function(C, cfg), None, CornerVariant(), p, cfg)
    multivector_equals(value, expected, atol=1e-8)


def _base_gap(value, order, distance):
    # RL minus Caputo derivative of a line taking this value at its base point
    return power_law_derivative(0.0, order, distance) * value


@pytest.mark.parametrize("variant", mixed_variants, ids=mixed_variants_keys)
def test_mixed_operators(variant):
    cfg = affine_config()
    f = smooth_cross_function(N_GENERATORS, random_state, cfg)
    p = _point()
    corner = variant.corner
    mixed = mixed_operator(f, None, variant, p, cfg)
    caputo = caputo_operator(f, None, corner, p, cfg)
    if variant.u_kind == CAPUTO and variant.v_kind == CAPUTO:
        multivector_equals(mixed, caputo)
        return
    if variant.u_kind == RL:
        end = 0.0 if corner.u_side == "a+" else 1.0
        expected = _base_gap(f.horizontal(end, cfg.s, p.I), cfg.alpha, abs(p.u - end))
    else:
        end = 0.0 if corner.v_side == "0+" else 1.0
        expected = p.I.as_multivector() * _base_gap(
            f.vertical(cfg.r, end, p.I), cfg.beta, abs(p.v - end)
        )
    multivector_equals(mixed - caputo, expected, atol=1e-5)


def test_mixed_operator_of_constant():
    cfg = affine_config()
    K = random_multivector()
    f = constant_cross_function(K, cfg)
    p = _point()
    Imv = p.I.as_multivector()
    rate_u = power_law_derivative(0.0, 0.5, p.u)
    rate_v = power_law_derivative(0.0, 0.5, p.v)
    mixed = mixed_operator(f, None, MixedVariant((RL, "a+"), (CAPUTO, "0+")), p, cfg)
    multivector_equals(mixed, rate_u * K, atol=1e-6)
    mixed = mixed_operator(f, None, MixedVariant((CAPUTO, "a+"), (RL, "0+")), p, cfg)
    multivector_equals(mixed, rate_v * (Imv * K), atol=1e-6)
    mixed = mixed_operator(f, None, MixedVariant((CAPUTO, "a+"), (RL, "0+"), "right"), p, cfg)
    multivector_equals(mixed, rate_v * (K * Imv), atol=1e-6)


def test_mixed_operator_on_member_without_base_values():
    cfg = affine_config()
    f = member_construct(random_multivector(), cfg)
    p = _point()
    # f vanishes at the base points, so RL and Caputo terms coincide
    for variant in MixedVariant.all()[:1] + [MixedVariant((CAPUTO, "a+"), (RL, "0+"))]:
        assert mixed_operator(f, None, variant, p, cfg).norm() < 1e-6


def test_fd_fallback():
    cfg = affine_config()
    f = smooth_slice_function(N_GENERATORS, random_state, cfg.box)
    p = _point()
    ErrorMessage.printed_fd_fallback.discard("Caputo operator")
    with pytest.warns(UserWarning):
        fallback = caputo_operator(f, None, CornerVariant(), p, cfg)
    explicit = caputo_operator(f, fd_partials(f, cfg), CornerVariant(), p, cfg)
    multivector_equals(fallback, explicit)


def test_fd_partials_match_analytic():
    cfg = affine_config()
    f = smooth_cross_function(N_GENERATORS, random_state, cfg)
    p = _point()
    analytic = caputo_operator(f, None, CornerVariant(), p, cfg)
    numeric = caputo_operator(f, fd_partials(f, cfg), CornerVariant(), p, cfg)
    multivector_equals(analytic, numeric, atol=1e-5)


def test_h_operator_of_constant():
    cfg = affine_config(alpha=0.25, beta=0.75)
    K = random_multivector()
    f = constant_cross_function(K, cfg)
    p = _point()
    expected = (p.u ** 0.75 / gamma(1.75) + p.v ** 0.25 / gamma(1.25)) * K
    multivector_equals(h_operator(f, p, cfg), expected, atol=1e-10)
    H = h_function(f, cfg)
    multivector_equals(H.at(p), h_operator(f, p, cfg), atol=1e-12)
    assert H.upper_only


def test_h_identity():
    cfg = affine_config()
    f = smooth_slice_function(N_GENERATORS, random_state, cfg.box)
    for p in [_point(0.3, 0.7), _point(0.6, 0.4)]:
        assert caputo_h_identity_residual(f, p, cfg).norm() < 1e-2


def test_characterization():
    cfg = affine_config()
    member = caputo_member_construct(random_multivector(), cfg, offset=random_multivector())
    outsider = linear_cross_function(random_multivector(), cfg)
    p = _point()
    first, second = caputo_characterization_check(member, p, cfg)
    assert first < 1e-2
    assert second < 1e-2
    first, second = caputo_characterization_check(outsider, p, cfg)
    assert first > 1e-2
    zero = constant_cross_function(Multivector.zeros(N_GENERATORS), cfg)
    assert caputo_characterization_check(zero, p, cfg) == (0.0, 0.0)
