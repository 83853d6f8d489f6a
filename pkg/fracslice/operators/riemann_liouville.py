"""Riemann-Liouville corner operators on S_{a,b,c} and their kernel."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from functools import lru_cache
import logging

import numpy as np

from fracslice.algebra.geometry import SlicePoint
from fracslice.algebra.multivector import Multivector, as_multivector
from fracslice.calculus.fractional import (
    frac_integral_left,
    frac_integral_right,
    rl_derivative_left,
    rl_derivative_right,
)
from fracslice.calculus.gamma import gamma_fn
from fracslice.engines.factories import SweepFactory
from fracslice.monogenic.domain import CrossSliceFunction, SliceFunction
from fracslice.monogenic.operators import cr_residual
from fracslice.operators.config import (
    A_PLUS,
    LEFT,
    ZERO_PLUS,
    CornerVariant,
    MembershipGrid,
    MembershipReport,
)

logger = logging.getLogger(__name__)

RESTRICTED_INTEGRALS = ("a+u", "0+v", "b-u", "c-v")
MEMBERSHIP_TOLERANCE = 1e-3


def horizontal_line(f, cfg, I):
    """t -> f(t + I s)."""
    s = cfg.s
    return lambda t: f.horizontal(t, s, I)


def vertical_line(f, cfg, I):
    """t -> f(r + I t)."""
    r = cfg.r
    return lambda t: f.vertical(r, t, I)


def line_integral(line, which, arg, cfg, quad=None):
    """Order 1-alpha (u) or 1-beta (v) integral of a line function."""
    quad = quad or cfg.quad
    box = cfg.box
    if which == "a+u":
        return frac_integral_left(line, box.a, 1.0 - cfg.alpha, cfg.g, arg, quad)
    if which == "b-u":
        return frac_integral_right(line, box.b, 1.0 - cfg.alpha, cfg.g, arg, quad)
    if which == "0+v":
        return frac_integral_left(line, 0.0, 1.0 - cfg.beta, cfg.h, arg, quad)
    if which == "c-v":
        return frac_integral_right(line, box.c, 1.0 - cfg.beta, cfg.h, arg, quad)
    raise ValueError(
        "Unknown restricted integral {!r}; expected one of {}".format(which, RESTRICTED_INTEGRALS)
    )


def restricted_integral(f, which, arg, I, cfg, quad=None):
    """One of the four restricted integrals of f on slice I.

    Args:
        f: SliceFunction.
        which: "a+u" or "b-u" integrate along v = s up to u = arg;
            "0+v" or "c-v" integrate along u = r up to v = arg.
        arg: The free coordinate.
        I: The slice unit.
        cfg: FracSliceConfig.
    """
    if which in ("a+u", "b-u"):
        line = horizontal_line(f, cfg, I)
    else:
        line = vertical_line(f, cfg, I)
    return line_integral(line, which, arg, cfg, quad)


def u_integral(f, u_side, u, I, cfg, quad=None):
    return restricted_integral(f, "a+u" if u_side == A_PLUS else "b-u", u, I, cfg, quad)


def v_integral(f, v_side, v, I, cfg, quad=None):
    return restricted_integral(f, "0+v" if v_side == ZERO_PLUS else "c-v", v, I, cfg, quad)


def rl_u_term(f, u_side, u, I, cfg, quad=None):
    """RL derivative of t -> f(t + I s) at u, from a (a+) or b (b-)."""
    quad = quad or cfg.quad
    line = horizontal_line(f, cfg, I)
    if u_side == A_PLUS:
        return rl_derivative_left(line, cfg.box.a, cfg.alpha, cfg.g, u, quad)
    return rl_derivative_right(line, cfg.box.b, cfg.alpha, cfg.g, u, quad)


def rl_v_term(f, v_side, v, I, cfg, quad=None):
    """RL derivative of t -> f(r + I t) at v, from 0 (0+) or c (c-)."""
    quad = quad or cfg.quad
    line = vertical_line(f, cfg, I)
    if v_side == ZERO_PLUS:
        return rl_derivative_left(line, 0.0, cfg.beta, cfg.h, v, quad)
    return rl_derivative_right(line, cfg.box.c, cfg.beta, cfg.h, v, quad)


def combine(u_term, v_term, I, mult_side):
    """u_term + I v_term, or u_term + v_term I for right operators."""
    if mult_side == LEFT:
        return u_term + I.as_multivector() * v_term
    return u_term + v_term * I.as_multivector()


def rl_operator(f, variant, p, cfg):
    """The Riemann-Liouville corner operator of f at p.

    For (a+, 0+, left) this is D_{a+}^alpha[f(. + I s)](u) + I D_{0+}^beta[f(r + I .)](v);
    at (u, v) = (r, s) it is the diagonal form of the operator.
    """
    u_term = rl_u_term(f, variant.u_side, p.u, p.I, cfg)
    v_term = rl_v_term(f, variant.v_side, p.v, p.I, cfg)
    return combine(u_term, v_term, p.I, variant.mult_side)


def diagonal_operator(f, variant, I, cfg):
    """The operator at the cross point itself, D f(r + I s)."""
    return rl_operator(f, variant, SlicePoint(cfg.r, cfg.s, I), cfg)


def hmap(f, p, cfg, variant=None):
    """sigma_u (1/g') I^{1-alpha} f(u + I s) + sigma_v (1/h') I^{1-beta} f(r + I v).

    The signs sigma are +1 for the a+ and 0+ ends, -1 for b- and c-.
    """
    variant = variant or CornerVariant()
    phi = u_integral(f, variant.u_side, p.u, p.I, cfg)
    psi = v_integral(f, variant.v_side, p.v, p.I, cfg)
    return (variant.u_sign / float(cfg.g.derivative(p.u))) * phi + (
        variant.v_sign / float(cfg.h.derivative(p.v))
    ) * psi


def hmap_function(f, cfg, variant=None):
    """hmap as a SliceFunction on the upper half of every slice.

    The two restricted integrals are cached per coordinate, so finite
    differences in u do not recompute the v part and vice versa.
    """
    variant = variant or CornerVariant()

    @lru_cache(maxsize=4096)
    def phi(u, I):
        weight = variant.u_sign / float(cfg.g.derivative(u))
        return weight * as_multivector(u_integral(f, variant.u_side, u, I, cfg), f.n)

    @lru_cache(maxsize=4096)
    def psi(v, I):
        weight = variant.v_sign / float(cfg.h.derivative(v))
        return weight * as_multivector(v_integral(f, variant.v_side, v, I, cfg), f.n)

    def evaluate(u, v, I):
        return phi(u, I) + psi(v, I)

    return SliceFunction(evaluate, f.n, "C1", domain=cfg.box, upper_only=True)


def fracprop1_residual(f, variant, p, cfg):
    """Residual of the identity linking the corner operator to dbar of hmap.

    With Phi, Psi the restricted integrals and H the signed hmap,
    2 lam [sigma_u Phi/g' + I sigma_v Psi/h'] + D f - 2 dbar H vanishes for
    every C^1 f. The inner (1/g')' = 2 lam / g' comes from g'' = -2 lam g'.
    """
    I = p.I
    phi = as_multivector(u_integral(f, variant.u_side, p.u, I, cfg), f.n)
    psi = as_multivector(v_integral(f, variant.v_side, p.v, I, cfg), f.n)
    u_part = (variant.u_sign / float(cfg.g.derivative(p.u))) * phi
    v_part = (variant.v_sign / float(cfg.h.derivative(p.v))) * psi
    lam_term = 2 * cfg.lam * combine(u_part, v_part, I, variant.mult_side)
    dbar = cr_residual(
        hmap_function(f, cfg, variant), p, 0.0, cfg.quad.fd, side=variant.mult_side
    )
    return lam_term + rl_operator(f, variant, p, cfg) - 2 * dbar


def _base_distances(cfg, variant):
    box, g, h = cfg.box, cfg.g, cfg.h
    if variant.u_side == A_PLUS:
        g_end, u_dir = float(g(box.a)), 1.0
    else:
        g_end, u_dir = float(g(box.b)), -1.0
    if variant.v_side == ZERO_PLUS:
        h_end, v_dir = float(h(0.0)), 1.0
    else:
        h_end, v_dir = float(h(box.c)), -1.0

    def u_base(t):
        return max(u_dir * (float(g(t)) - g_end), 0.0)

    def v_base(t):
        return max(v_dir * (float(h(t)) - h_end), 0.0)

    return u_base, u_dir, v_base, v_dir


def _power_line(base, direction, weight, order, scale, coefficient):
    """Value and derivative of scale * base(t)^order * coefficient(I)."""

    def value(t, I):
        return (scale * base(t) ** order) * coefficient(I)

    def slope(t, I):
        distance = max(base(t), np.finfo(float).tiny)
        factor = scale * order * distance ** (order - 1.0) * direction * float(
            weight.derivative(t)
        )
        return factor * coefficient(I)

    return value, slope


def member_construct(C0, cfg, variant=None, offset=None):
    """A function in the kernel of the corner operator.

    On the horizontal line f = base_u^alpha / Gamma(alpha + 1) C0, on the
    vertical line f = base_v^beta / Gamma(beta + 1) (I C0), or (C0 I) for
    right operators, where base_u = |g(u) - g(end)| from the variant's end.
    The u derivative is then C0 and the v derivative I C0, which cancel.

    Args:
        C0: Multivector constant.
        cfg: FracSliceConfig.
        variant: CornerVariant, (a+, 0+, left) by default.
        offset: Optional constant added on both lines. It keeps the function
            in the Caputo kernel but moves it out of the RL kernel.

    Returns:
        CrossSliceFunction with analytic line derivatives.
    """
    variant = variant or CornerVariant()
    n = C0.n
    u_base, u_dir, v_base, v_dir = _base_distances(cfg, variant)

    def u_coefficient(I):
        return C0

    if variant.mult_side == LEFT:

        def v_coefficient(I):
            return I.as_multivector() * C0

    else:

        def v_coefficient(I):
            return C0 * I.as_multivector()

    horizontal, du = _power_line(
        u_base, u_dir, cfg.g, cfg.alpha, 1.0 / gamma_fn(cfg.alpha + 1.0), u_coefficient
    )
    vertical, dv = _power_line(
        v_base, v_dir, cfg.h, cfg.beta, 1.0 / gamma_fn(cfg.beta + 1.0), v_coefficient
    )
    if offset is not None:
        shift = as_multivector(offset, n)
        raw_horizontal, raw_vertical = horizontal, vertical

        def horizontal(t, I):
            return raw_horizontal(t, I) + shift

        def vertical(t, I):
            return raw_vertical(t, I) + shift

    return CrossSliceFunction(
        horizontal, vertical, cfg.cross, n, domain=cfg.box, partials=(du, dv)
    )


def perturb(f, epsilon, cfg):
    """f + epsilon u, read on the cross lines of cfg."""
    r = cfg.r
    zero = Multivector.zeros(f.n)
    bump = CrossSliceFunction(
        lambda t, I: Multivector.scalar(f.n, epsilon * t),
        lambda t, I: Multivector.scalar(f.n, epsilon * r),
        cfg.cross,
        f.n,
        domain=cfg.box,
        partials=(lambda t, I: Multivector.scalar(f.n, epsilon), lambda t, I: zero),
    )
    return f + bump


def _membership_sample(f, variant, cfg, with_hmap):
    def evaluate(sample):
        I, u, v = sample
        p = SlicePoint(u, v, I)
        residual = rl_operator(f, variant, p, cfg).norm()
        size = hmap(f, p, cfg, variant).norm() if with_hmap else None
        return residual, size

    return evaluate


def is_frac_slice_monogenic(f, variant, cfg, grid=None, tol=MEMBERSHIP_TOLERANCE, with_hmap=True):
    """Sweep the corner operator over a (u, v) grid on random slices.

    Returns:
        MembershipReport. Its hmap_max and zero_on_grid fields record whether
        hmap vanishes on the whole grid, the sampled stand-in for the identity
        principle.
    """
    grid = grid or MembershipGrid()
    samples = grid.samples(cfg.box, f.n)
    results = SweepFactory.map(_membership_sample(f, variant, cfg, with_hmap), samples)
    records = [
        (I, u, v, residual) for (I, u, v), (residual, _) in zip(samples, results)
    ]
    hmap_max = max(size for _, size in results) if with_hmap and results else None
    report = MembershipReport(variant, grid, records, tol, hmap_max=hmap_max)
    logger.debug("Membership %r", report)
    return report


def cross_sweep(f, variant, cfg, grid=None, tol=MEMBERSHIP_TOLERANCE, points=5):
    """Membership for every cross point of a points x points (r, s) grid.

    Returns:
        A list of ((r, s), MembershipReport) in row-major order.
    """
    box = cfg.box
    reports = []
    for r in np.linspace(box.a, box.b, points):
        for s in np.linspace(0.0, box.c, points):
            shifted = cfg.replace(cross=(float(r), float(s)))
            reports.append(
                ((float(r), float(s)), is_frac_slice_monogenic(f, variant, shifted, grid, tol, with_hmap=False))
            )
    return reports
