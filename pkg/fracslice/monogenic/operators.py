"""Slice Cauchy-Riemann operators and the lambda-slice monogenic checks."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np

from fracslice.algebra.geometry import split
from fracslice.algebra.multivector import Multivector
from fracslice.calculus.differentiation import derivative
from fracslice.monogenic.domain import SliceFunction

LEFT = "left"
RIGHT = "right"
DEFAULT_MARGIN = 0.1


def box_grid(box, nu, nv, margin=None, upper_only=True):
    """Rectangular (u, v) sample grid strictly inside a slice of the box."""
    if margin is None:
        margin = DEFAULT_MARGIN * min(box.b - box.a, box.c)
    us = np.linspace(box.a + margin, box.b - margin, nu)
    if upper_only:
        vs = np.linspace(margin, box.c - margin, nv)
    else:
        vs = np.linspace(-box.c + margin, box.c - margin, nv)
    return [(float(u), float(v)) for u in us for v in vs]


def cr_residual(f, p, lam=0.0, fd=None, side=LEFT):
    """The lambda-slice Cauchy-Riemann residual of f at p.

    Args:
        f: SliceFunction.
        p: SlicePoint whose stencil fits in f's domain.
        lam: The lambda of SM_lambda.
        fd: FDPolicy for the partial derivatives.
        side: "left" gives 1/2 (f_u + I f_v + lam f); "right" puts I on the
            right of f_v.

    Returns:
        The residual Multivector. It vanishes exactly when exp(lam u) f is
        slice monogenic, so exp(-lam u) C is a member for every constant C.

    The 1/2 also scales lam f, matching 1/2 (d_u + I d_v)[exp(lam u) f] =
    exp(lam u) residual. So f = u with lam = 1 gives 1/2 + u/2, not 1/2 + u.
    """
    I = p.I
    u_lo, u_hi = f.u_bounds()
    v_lo, v_hi = f.v_bounds()
    du, _ = derivative(lambda t: f(t, p.v, I), p.u, u_lo, u_hi, fd)
    dv, _ = derivative(lambda t: f(p.u, t, I), p.v, v_lo, v_hi, fd)
    if side == LEFT:
        rotated = I.as_multivector() * dv
    elif side == RIGHT:
        rotated = dv * I.as_multivector()
    else:
        raise ValueError("side must be 'left' or 'right', got {!r}".format(side))
    return 0.5 * (du + rotated + lam * f.at(p))


def exp_conjugation_residual(f, p, lam, fd=None):
    """dbar[exp(lam u) f] - exp(lam u) cr_residual(f, p, lam); vanishes for all C^1 f."""

    def weighted(u, v, I):
        return math.exp(lam * u) * f(u, v, I)

    conjugated = SliceFunction(
        weighted, f.n, f.smoothness, domain=f.domain, upper_only=f.upper_only
    )
    return cr_residual(conjugated, p, 0.0, fd) - math.exp(lam * p.u) * cr_residual(
        f, p, lam, fd
    )


def representation_combine(f, u, v, I, Ix):
    """1/2 (1 - Ix I) f(u + I v) + 1/2 (1 + Ix I) f(u - I v)."""
    one = Multivector.scalar(f.n, 1.0)
    rotation = Ix.as_multivector() * I.as_multivector()
    return 0.5 * (one - rotation) * f(u, v, I) + 0.5 * (one + rotation) * f(u, v, -I)


def splitting_holomorphy_check(f, I, basis, lam, grid, fd=None):
    """Largest complex Cauchy-Riemann residual of the split components.

    The components are F_A(z) = exp(lam Re z) * (split of f(z) on slice I).
    """
    if basis.I != I:
        raise ValueError("Splitting basis must start with the slice unit")
    size = len(basis)
    u_lo, u_hi = f.u_bounds()
    v_lo, v_hi = f.v_bounds()

    def components(u, v):
        parts = math.exp(lam * u) * split(f(u, v, I), basis)
        return np.concatenate([parts.real, parts.imag])

    worst = 0.0
    for u, v in grid:
        du, _ = derivative(lambda t: components(t, v), u, u_lo, u_hi, fd)
        dv, _ = derivative(lambda t: components(u, t), v, v_lo, v_hi, fd)
        du = du[:size] + 1j * du[size:]
        dv = dv[:size] + 1j * dv[size:]
        worst = max(worst, float(np.max(np.abs(0.5 * (du + 1j * dv)))))
    return worst
