"""Consequences of membership, read through the associated map hmap.

Every check returns a residual that vanishes for members of the kernel of the
configured corner operator. They share one convention: hmap is evaluated by
riemann_liouville.hmap_function and carries the weight exp(lam Re w) of the
lambda-slice monogenic integral formulas.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
import math

from scipy.special import comb

from fracslice.algebra.geometry import embed_complex
from fracslice.algebra.multivector import Multivector, as_multivector
from fracslice.calculus.fractional import rl_derivative_left
from fracslice.monogenic.integrals import (
    cauchy_value,
    contour_integral,
    morera_classify,
)
from fracslice.monogenic.operators import splitting_holomorphy_check
from fracslice.monogenic.series import series_fit
from fracslice.operators.config import A_PLUS, ZERO_PLUS, CornerVariant
from fracslice.operators.riemann_liouville import (
    hmap,
    hmap_function,
    horizontal_line,
    line_integral,
    vertical_line,
)

logger = logging.getLogger(__name__)


def frac_representation_check(f, p, I, cfg, variant=None):
    """hmap at p against the combination of restricted integrals on slices I and -I.

    The right-hand side integrates 1/2 (1 - Ix I) f(. ; I) + 1/2 (1 + Ix I) f(. ; -I)
    along both cross lines, Ix being the slice of p.
    """
    variant = variant or CornerVariant()
    n = f.n
    one = Multivector.scalar(n, 1.0)
    rotation = p.I.as_multivector() * I.as_multivector()
    minus = 0.5 * (one - rotation)
    plus = 0.5 * (one + rotation)

    def mix(line_I, line_minus_I):
        return lambda t: minus * line_I(t) + plus * line_minus_I(t)

    u_which = "a+u" if variant.u_side == A_PLUS else "b-u"
    v_which = "0+v" if variant.v_side == ZERO_PLUS else "c-v"
    phi = line_integral(
        mix(horizontal_line(f, cfg, I), horizontal_line(f, cfg, -I)), u_which, p.u, cfg
    )
    psi = line_integral(
        mix(vertical_line(f, cfg, I), vertical_line(f, cfg, -I)), v_which, p.v, cfg
    )
    rhs = (variant.u_sign / float(cfg.g.derivative(p.u))) * as_multivector(phi, n) + (
        variant.v_sign / float(cfg.h.derivative(p.v))
    ) * as_multivector(psi, n)
    return (hmap(f, p, cfg, variant) - rhs).norm()


def frac_splitting_check(f, I, basis, cfg, grid, variant=None):
    """Largest complex CR residual of exp(lam Re z) times the split hmap."""
    return splitting_holomorphy_check(
        hmap_function(f, cfg, variant), I, basis, cfg.lam, grid, cfg.quad.fd
    )


def frac_series_fit(f, center, radius, degree, cfg, I, variant=None):
    """Fit hmap by sum_n exp(-lam Re z) (z - z0)^n C_n on a disk of slice I."""
    return series_fit(hmap_function(f, cfg, variant), center, radius, degree, I, cfg.lam)


def frac_cauchy_check(f, center, radius, z, cfg, nodes=256, variant=None):
    """Cauchy integral of hmap over the circle against hmap(z)."""
    value = cauchy_value(hmap_function(f, cfg, variant), center, radius, z, cfg.lam, nodes)
    return (value - hmap(f, z, cfg, variant)).norm()


def frac_cauchy_theorem_check(f, contour, cfg, variant=None):
    lam = cfg.lam
    integral = contour_integral(
        lambda w: math.exp(lam * w.real), contour, hmap_function(f, cfg, variant)
    )
    return integral.norm()


def frac_morera_check(ell, cfg, trials=4, seed=0, tol=1e-3, nodes=128, variant=None):
    """Morera surrogate on hmap of ell; a pass is consistent with membership."""
    return morera_classify(hmap_function(ell, cfg, variant), cfg.lam, trials, seed, tol, nodes)


def _u_derivatives(cfg, u, u0, degree, quad, damped):
    """RL D_{a+}^{1-alpha} of g'(t) exp(-lam t) (t - u0)^k, k = 0..degree."""
    g, lam = cfg.g, cfg.lam
    order = 1.0 - cfg.alpha
    values = []
    for k in range(degree + 1):
        if damped:
            line = lambda t, k=k: float(g.derivative(t)) * math.exp(-lam * t) * (t - u0) ** k
        else:
            line = lambda t, k=k: float(g.derivative(t)) * (t - u0) ** k
        values.append(rl_derivative_left(line, cfg.box.a, order, g, u, quad))
    return values


def _v_derivatives(cfg, v, v0, degree, quad, sign):
    """RL D_{0+}^{1-beta} of h'(t) (sign t - v0)^j, j = 0..degree."""
    h = cfg.h
    order = 1.0 - cfg.beta
    values = []
    for j in range(degree + 1):
        line = lambda t, j=j: float(h.derivative(t)) * (sign * t - v0) ** j
        values.append(rl_derivative_left(line, 0.0, order, h, v, quad))
    return values


def _series_image(fit, du, dv, I):
    """sum_n [sum_j C(n, j) du[n - j] dv[j] i^j] C_n read in slice I."""
    total = Multivector.zeros(I.n)
    for n, coefficient in enumerate(fit.coefficients):
        factor = sum(
            comb(n, j, exact=True) * du[n - j] * dv[j] * (1j ** j) for j in range(n + 1)
        )
        total = total + embed_complex(complex(factor), I) * coefficient
    return total


def cross_recovery_check(f, p, cfg, center, radius, degree=3, I=None, fit=None, quad=None):
    """Recover f on the cross from the series of hmap.

    Applies D_u = RL D_{a+}^{1-alpha} and D_v = RL D_{0+}^{1-beta} to
    g'(u) h'(v) hmap(u + Ix v), with hmap on Ix obtained from the series on
    slice I through the representation formula, and compares with
    D_v[h'](v) f(u + Ix s) + D_u[g'](u) f(r + Ix v). Only the (a+, 0+, left)
    corner is covered.

    Args:
        f: SliceFunction, a member of the (a+, 0+, left) kernel.
        p: SlicePoint; its slice is Ix.
        center, radius: Disk of the series fit.
        degree: Series degree.
        I: Slice of the fit, p.I by default.
        fit: A precomputed SeriesFit on slice I.
        quad: QuadratureSpec of the outer derivatives, cfg.quad by default.

    Returns:
        The residual norm.
    """
    Ix = p.I
    I = I or Ix
    quad = quad or cfg.quad
    fit = fit or frac_series_fit(f, center, radius, degree, cfg, I)
    degree = fit.degree
    u0, v0 = fit.center.real, fit.center.imag

    du = _u_derivatives(cfg, p.u, u0, degree, quad, damped=True)
    dv_plus = _v_derivatives(cfg, p.v, v0, degree, quad, 1.0)
    dv_minus = _v_derivatives(cfg, p.v, v0, degree, quad, -1.0)

    one = Multivector.scalar(f.n, 1.0)
    rotation = Ix.as_multivector() * I.as_multivector()
    series_side = 0.5 * (one - rotation) * _series_image(fit, du, dv_plus, I) + 0.5 * (
        one + rotation
    ) * _series_image(fit, du, dv_minus, I)

    if cfg.lam == 0.0:
        dg = du[0]
    else:
        dg = _u_derivatives(cfg, p.u, u0, 0, quad, damped=False)[0]
    dh = dv_plus[0]
    line_side = dh * f.horizontal(p.u, cfg.s, Ix) + dg * f.vertical(cfg.r, p.v, Ix)
    residual = (series_side - line_side).norm()
    logger.debug("Cross recovery at %r: %s", p, residual)
    return residual


def cross_recovery_convergence(f, p, cfg, center, radius, degree=3, I=None):
    """Cross-recovery residuals at the configured quadrature order and twice it."""
    I = I or p.I
    fit = frac_series_fit(f, center, radius, degree, cfg, I)
    coarse = cross_recovery_check(f, p, cfg, center, radius, degree, I, fit)
    fine = cross_recovery_check(
        f, p, cfg, center, radius, degree, I, fit, quad=cfg.quad.with_order(2 * cfg.quad.order)
    )
    return coarse, fine


__all__ = [
    "frac_representation_check",
    "frac_splitting_check",
    "frac_series_fit",
    "frac_cauchy_check",
    "frac_cauchy_theorem_check",
    "frac_morera_check",
    "cross_recovery_check",
    "cross_recovery_convergence",
]
