"""Caputo and mixed Riemann-Liouville/Caputo corner operators.

The Caputo terms integrate the first derivative of f along the cross lines.
Derivatives come from, in order of preference, an explicit (du, dv) pair,
the analytic partials of a CrossSliceFunction, or shrinking finite
differences. The last case warns once through ErrorMessage.fd_fallback.

Note that H below is the unweighted sum of the two restricted integrals,
unlike riemann_liouville.hmap, which divides by g' and h'.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from functools import lru_cache
import logging

from fracslice.algebra.geometry import SlicePoint
from fracslice.algebra.multivector import as_multivector
from fracslice.calculus.differentiation import derivative
from fracslice.calculus.fractional import (
    caputo_derivative_left,
    caputo_derivative_right,
)
from fracslice.calculus.gamma import power_law_derivative, power_law_integral
from fracslice.engines.factories import SweepFactory
from fracslice.error_message import ErrorMessage
from fracslice.monogenic.domain import SliceFunction
from fracslice.operators.config import (
    A_PLUS,
    CAPUTO,
    ZERO_PLUS,
    CornerVariant,
    MembershipGrid,
    MembershipReport,
)
from fracslice.operators.riemann_liouville import (
    MEMBERSHIP_TOLERANCE,
    combine,
    member_construct,
    restricted_integral,
    rl_u_term,
    rl_v_term,
)

logger = logging.getLogger(__name__)


def fd_partials(f, cfg):
    """Finite-difference line derivatives (du, dv) of f on the cross of cfg."""
    box = cfg.box
    policy = cfg.quad.fd.shrinking()
    r, s = cfg.r, cfg.s

    def du(t, I):
        return derivative(lambda x: f.horizontal(x, s, I), t, box.a, box.b, policy)[0]

    def dv(t, I):
        return derivative(lambda y: f.vertical(r, y, I), t, 0.0, box.c, policy)[0]

    return du, dv


def resolve_partials(f, f_partials, cfg):
    if f_partials is not None:
        return f_partials
    if getattr(f, "partials", None) is not None:
        return f.horizontal_partial, f.vertical_partial
    ErrorMessage.fd_fallback("Caputo operator")
    return fd_partials(f, cfg)


def caputo_u_term(du, u_side, u, I, cfg, quad=None):
    """Caputo derivative of t -> f(t + I s) at u, from a or b."""
    quad = quad or cfg.quad
    prime = lambda t: du(t, I)
    if u_side == A_PLUS:
        return caputo_derivative_left(None, prime, cfg.box.a, cfg.alpha, cfg.g, u, quad)
    return caputo_derivative_right(None, prime, cfg.box.b, cfg.alpha, cfg.g, u, quad)


def caputo_v_term(dv, v_side, v, I, cfg, quad=None):
    """Caputo derivative of t -> f(r + I t) at v, from 0 or c."""
    quad = quad or cfg.quad
    prime = lambda t: dv(t, I)
    if v_side == ZERO_PLUS:
        return caputo_derivative_left(None, prime, 0.0, cfg.beta, cfg.h, v, quad)
    return caputo_derivative_right(None, prime, cfg.box.c, cfg.beta, cfg.h, v, quad)


def caputo_operator(f, f_partials, variant, p, cfg):
    """The Caputo corner operator of f at p.

    Args:
        f: SliceFunction.
        f_partials: Pair (du, dv) of callables (t, I), or None.
        variant: CornerVariant.
        p: SlicePoint.
        cfg: FracSliceConfig.
    """
    du, dv = resolve_partials(f, f_partials, cfg)
    u_term = caputo_u_term(du, variant.u_side, p.u, p.I, cfg)
    v_term = caputo_v_term(dv, variant.v_side, p.v, p.I, cfg)
    return combine(u_term, v_term, p.I, variant.mult_side)


def mixed_operator(f, f_partials, variant, p, cfg):
    """A corner operator whose u and v terms are each RL or Caputo.

    Each term goes through the same helper as the pure operators, so a
    (Caputo, Caputo) variant reproduces caputo_operator exactly.
    """
    corner = variant.corner
    du, dv = resolve_partials(f, f_partials, cfg)
    if variant.u_kind == CAPUTO:
        u_term = caputo_u_term(du, corner.u_side, p.u, p.I, cfg)
    else:
        u_term = rl_u_term(f, corner.u_side, p.u, p.I, cfg)
    if variant.v_kind == CAPUTO:
        v_term = caputo_v_term(dv, corner.v_side, p.v, p.I, cfg)
    else:
        v_term = rl_v_term(f, corner.v_side, p.v, p.I, cfg)
    return combine(u_term, v_term, p.I, corner.mult_side)


def _caputo_sample(f, partials, variant, cfg):
    def evaluate(sample):
        I, u, v = sample
        return caputo_operator(f, partials, variant, SlicePoint(u, v, I), cfg).norm()

    return evaluate


def is_caputo_member(f, cfg, grid=None, tol=MEMBERSHIP_TOLERANCE, variant=None, f_partials=None):
    """Sweep the Caputo corner operator over a grid of random slices."""
    variant = variant or CornerVariant()
    grid = grid or MembershipGrid()
    partials = resolve_partials(f, f_partials, cfg)
    samples = grid.samples(cfg.box, f.n)
    residuals = SweepFactory.map(_caputo_sample(f, partials, variant, cfg), samples)
    records = [(I, u, v, residual) for (I, u, v), residual in zip(samples, residuals)]
    report = MembershipReport(variant, grid, records, tol)
    logger.debug("Caputo membership %r", report)
    return report


def caputo_member_construct(C0, cfg, offset=0.0):
    """A member of the (a+, 0+, left) Caputo kernel.

    The RL member plus a constant; with a nonzero offset it is not an RL
    member.
    """
    return member_construct(C0, cfg, CornerVariant(), offset=offset)


def h_operator(f, p, cfg):
    """H(f)(u + I v) = I_{a+}^{1-alpha} f(u + I s) + I_{0+}^{1-beta} f(r + I v)."""
    return as_multivector(restricted_integral(f, "a+u", p.u, p.I, cfg), f.n) + as_multivector(
        restricted_integral(f, "0+v", p.v, p.I, cfg), f.n
    )


def _separable(n, u_part, v_part, box):
    """SliceFunction on the upper half slices with value u_part(u, I) + v_part(v, I)."""
    u_part = lru_cache(maxsize=4096)(u_part)
    v_part = lru_cache(maxsize=4096)(v_part)

    def evaluate(u, v, I):
        return u_part(u, I) + v_part(v, I)

    return SliceFunction(evaluate, n, "C1", domain=box, upper_only=True)


def h_function(f, cfg):
    """H(f) as a SliceFunction, with both integrals cached per coordinate."""
    n = f.n
    return _separable(
        n,
        lambda u, I: as_multivector(restricted_integral(f, "a+u", u, I, cfg), n),
        lambda v, I: as_multivector(restricted_integral(f, "0+v", v, I, cfg), n),
        cfg.box,
    )


def _rl_function(f, cfg, corrected=False):
    """(u, v) -> RL u-term at u plus I times the RL v-term at v, on the cross of cfg.

    With corrected=True the terms of f's values at the base points are
    removed, which turns both terms into Caputo derivatives.
    """
    n = f.n
    nested = cfg.replace(quad=cfg.quad.shrinking())
    ga, h0 = float(cfg.g(cfg.box.a)), float(cfg.h(0.0))

    def u_part(u, I):
        value = as_multivector(rl_u_term(f, A_PLUS, u, I, nested), n)
        if corrected:
            rate = power_law_derivative(0.0, cfg.alpha, float(cfg.g(u)) - ga)
            value = value - rate * as_multivector(f.horizontal(cfg.box.a, cfg.s, I), n)
        return value

    def v_part(v, I):
        value = as_multivector(rl_v_term(f, ZERO_PLUS, v, I, nested), n)
        if corrected:
            rate = power_law_derivative(0.0, cfg.beta, float(cfg.h(v)) - h0)
            value = value - rate * as_multivector(f.vertical(cfg.r, 0.0, I), n)
        return I.as_multivector() * value

    return _separable(n, u_part, v_part, cfg.box)


def caputo_h_identity_residual(f, p, cfg):
    """Residual of the exchange between Caputo and RL through H.

    C D(Hf)(u + I v) = H[RL D f](u + I v) - I^{1-beta}[1](v) RL D_u f(r + I s)
    - I^{1-alpha}[1](u) I RL D_v f(r + I s) for the (a+, 0+, left) corner.
    The cross point must lie off the base lines (r > a, s > 0).
    """
    hf = h_function(f, cfg)
    lhs = caputo_operator(hf, fd_partials(hf, cfg), CornerVariant(), p, cfg)
    nested = cfg.replace(quad=cfg.quad.shrinking())
    rl_f = _rl_function(f, cfg)
    rhs = h_operator(rl_f, p, cfg)
    u_rate = as_multivector(rl_u_term(f, A_PLUS, cfg.r, p.I, nested), f.n)
    v_rate = as_multivector(rl_v_term(f, ZERO_PLUS, cfg.s, p.I, nested), f.n)
    mass_v = power_law_integral(0.0, 1.0 - cfg.beta, float(cfg.h(p.v)) - float(cfg.h(0.0)))
    mass_u = power_law_integral(0.0, 1.0 - cfg.alpha, float(cfg.g(p.u)) - float(cfg.g(cfg.box.a)))
    rhs = rhs - mass_v * u_rate - mass_u * (p.I.as_multivector() * v_rate)
    return lhs - rhs


def caputo_characterization_check(f, p, cfg):
    """Both forms of the Caputo kernel characterization at p.

    W = RL D f - Corr_f is the (a+, 0+, left) Caputo operator, Corr_f carrying
    f(a + I s) and f(r) times the RL derivatives of 1.

    Returns:
        (norm of H[W](p), norm of R_{1-beta}(v) W(u + I s) + R_{1-alpha}(u) W(r + I v)),
        where R_mu is the RL derivative of order mu of 1. Both vanish exactly
        on Caputo members.
    """
    W = _rl_function(f, cfg, corrected=True)
    first = h_operator(W, p, cfg).norm()
    ga, h0 = float(cfg.g(cfg.box.a)), float(cfg.h(0.0))
    rate_v = power_law_derivative(0.0, 1.0 - cfg.beta, float(cfg.h(p.v)) - h0)
    rate_u = power_law_derivative(0.0, 1.0 - cfg.alpha, float(cfg.g(p.u)) - ga)
    second = (rate_v * W(p.u, cfg.s, p.I) + rate_u * W(cfg.r, p.v, p.I)).norm()
    logger.debug("Caputo characterization at %r: %s, %s", p, first, second)
    return first, second


__all__ = [
    "caputo_operator",
    "mixed_operator",
    "is_caputo_member",
    "caputo_member_construct",
    "h_operator",
    "h_function",
    "caputo_h_identity_residual",
    "caputo_characterization_check",
    "fd_partials",
]
