"""Fractional integrals and derivatives of a real variable with respect to a
weight g, for real or Multivector valued integrands.

Right-sided derivatives carry the minus sign of d/dx acting toward the left
end, so that D_{b-} inverts I_{b-} exactly as D_{a+} inverts I_{a+}.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
import numbers

from fracslice.algebra.multivector import pack_values
from fracslice.calculus.differentiation import derivative
from fracslice.calculus.quadrature import QuadratureSpec, kernel_integral
from fracslice.error_message import DomainError, ErrorMessage

logger = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"


class FracOrder(object):
    """Fractional order in the open interval (0, 1)."""

    __slots__ = ("value",)

    def __init__(self, value):
        if isinstance(value, FracOrder):
            value = value.value
        if not isinstance(value, numbers.Real) or not 0.0 < value < 1.0:
            raise ValueError("Fractional order must lie in (0, 1), got {!r}".format(value))
        object.__setattr__(self, "value", float(value))

    def __setattr__(self, key, value):
        raise AttributeError("FracOrder is immutable")

    @property
    def complement(self):
        return FracOrder(1.0 - self.value)

    def __float__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FracOrder):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "FracOrder({!r})".format(self.value)


def order_value(alpha):
    return FracOrder(alpha).value


def _check_interval(end, x, g, side):
    g.check_contains(end, "endpoint")
    g.check_contains(x, "x")
    if side == LEFT and x < end:
        raise DomainError("Left integral needs a <= x, got a={}, x={}".format(end, x))
    if side == RIGHT and x > end:
        raise DomainError("Right integral needs x <= b, got x={}, b={}".format(x, end))


def _integral(f, end, alpha, g, x, quad, side):
    _check_interval(end, x, g, side)
    return kernel_integral(f, x, end, alpha, g, quad or QuadratureSpec())


def frac_integral_left(f, a, alpha, g, x, quad=None):
    """Left integral of order alpha with respect to g.

    Args:
        f: Callable of one real returning a real or a Multivector.
        a: Left end of the interval.
        alpha: Order in (0, 1), a float or FracOrder.
        g: WeightFunction whose domain holds [a, x].
        x: Evaluation point, a <= x.
        quad: QuadratureSpec.

    Returns:
        (1/Gamma(alpha)) int_a^x f(t) (g(x) - g(t))^(alpha-1) g'(t) dt, with
        the type f returns. x = a gives 0.
    """
    coeffs, n = _integral(f, a, order_value(alpha), g, x, quad, LEFT)
    return pack_values(coeffs, n)


def frac_integral_right(f, b, alpha, g, x, quad=None):
    """Mirror of frac_integral_left over [x, b]."""
    coeffs, n = _integral(f, b, order_value(alpha), g, x, quad, RIGHT)
    return pack_values(coeffs, n)


def _rl(f, end, alpha, g, x, quad, side, full_output):
    quad = quad or QuadratureSpec()
    order = 1.0 - order_value(alpha)
    _check_interval(end, x, g, side)
    lo, hi = g.domain
    if side == LEFT:
        lower, upper = end, hi
    else:
        lower, upper = lo, end
    dims = []

    def integral(t):
        coeffs, n = kernel_integral(f, t, end, order, g, quad)
        dims.append(n)
        return coeffs

    slope, error = derivative(integral, x, lower, upper, quad.fd)
    scale = 1.0 / float(g.derivative(x))
    if side == RIGHT:
        scale = -scale
    value = pack_values(scale * slope, dims[0])
    if full_output:
        return value, abs(scale) * error
    return value


def rl_derivative_left(f, a, alpha, g, x, quad=None, full_output=False):
    """Riemann-Liouville derivative (1/g'(x)) d/dx I_{a+}^{1-alpha} f.

    The outer derivative uses Richardson-extrapolated central differences, so
    the stencil must fit inside [a, sup domain] unless quad.fd shrinks.

    Returns:
        The derivative, or (derivative, FD error estimate) with full_output.
    """
    return _rl(f, a, alpha, g, x, quad, LEFT, full_output)


def rl_derivative_right(f, b, alpha, g, x, quad=None, full_output=False):
    """Riemann-Liouville derivative -(1/g'(x)) d/dx I_{b-}^{1-alpha} f."""
    return _rl(f, b, alpha, g, x, quad, RIGHT, full_output)


def fd_prime(f, lower, upper, fd):
    """Finite-difference derivative of f with stencils shrunk near the ends."""
    policy = fd.shrinking()

    def prime(t):
        return derivative(f, t, lower, upper, policy)[0]

    return prime


def _caputo(f, f_prime, end, alpha, g, x, quad, side):
    quad = quad or QuadratureSpec()
    if f_prime is None:
        ErrorMessage.fd_fallback("a Caputo derivative")
        lo, hi = g.domain
        f_prime = fd_prime(f, lo, hi, quad.fd)
    sign = 1.0 if side == LEFT else -1.0

    def integrand(t):
        return f_prime(t) * (sign / float(g.derivative(t)))

    coeffs, n = _integral(integrand, end, 1.0 - order_value(alpha), g, x, quad, side)
    return pack_values(coeffs, n)


def caputo_derivative_left(f, f_prime, a, alpha, g, x, quad=None):
    """Caputo derivative I_{a+}^{1-alpha}(f'/g').

    Args:
        f: The function; only used when f_prime is None.
        f_prime: Derivative of f. None falls back to finite differences and
            warns.
    """
    return _caputo(f, f_prime, a, alpha, g, x, quad, LEFT)


def caputo_derivative_right(f, f_prime, b, alpha, g, x, quad=None):
    """Caputo derivative I_{b-}^{1-alpha}(-f'/g')."""
    return _caputo(f, f_prime, b, alpha, g, x, quad, RIGHT)
