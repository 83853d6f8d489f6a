"""Quadrature for the weakly singular kernel (g(x) - g(tau))^(alpha - 1)."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from functools import lru_cache
import math

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from fracslice.algebra.multivector import stack_values
from fracslice.calculus.differentiation import FDPolicy
from fracslice.calculus.gamma import gamma_fn

GAUSS_JACOBI = "gauss-jacobi"
GRADED_COMPOSITE = "graded-composite"
SCHEMES = (GAUSS_JACOBI, GRADED_COMPOSITE)

# Far-panel grading exponent; smooths (s - g(a))^sigma endpoint behaviour.
ENDPOINT_GRADING = 4
# Halvings toward the far end of the graded scheme, and the smallest
# relative width left next to the singular end.
FAR_LEVELS = 24
INNER_CUTOFF = 1e-12


class QuadratureSpec(object):
    """Scheme, node count and finite-difference policy of the fractional operators."""

    def __init__(self, scheme=GAUSS_JACOBI, order=24, fd=None):
        if scheme not in SCHEMES:
            raise ValueError(
                "Unknown quadrature scheme {!r}; expected one of {}".format(scheme, SCHEMES)
            )
        if int(order) != order or order < 4:
            raise ValueError("Quadrature order must be an integer >= 4, got {}".format(order))
        self.scheme = scheme
        self.order = int(order)
        self.fd = fd if fd is not None else FDPolicy()

    def with_order(self, order):
        return QuadratureSpec(self.scheme, order, self.fd)

    def with_fd(self, fd):
        return QuadratureSpec(self.scheme, self.order, fd)

    def shrinking(self):
        """Same rule, with stencils that shrink near the interval ends."""
        return self.with_fd(self.fd.shrinking())

    def __eq__(self, other):
        return isinstance(other, QuadratureSpec) and (
            (self.scheme, self.order, self.fd) == (other.scheme, other.order, other.fd)
        )

    def __repr__(self):
        return "QuadratureSpec({!r}, order={!r}, fd={!r})".format(
            self.scheme, self.order, self.fd
        )


@lru_cache(maxsize=64)
def _legendre_unit(order):
    t, w = roots_legendre(order)
    return (t + 1.0) / 2.0, w / 2.0


@lru_cache(maxsize=256)
def singular_rule(order, alpha):
    """Nodes and weights for int_0^1 F(y) y^(alpha - 1) dy.

    Gauss-Jacobi on [0, 1/2] absorbs the singularity; the panel [1/2, 1] is
    mapped by y = 1 - w^q / 2 so that endpoint behaviour of F at y = 1 is
    smoothed before Gauss-Legendre.
    """
    t, w = roots_jacobi(order, 0.0, alpha - 1.0)
    near_nodes = (1.0 + t) / 4.0
    near_weights = w * 4.0 ** (-alpha)
    x, wl = _legendre_unit(order)
    q = ENDPOINT_GRADING
    far_nodes = 1.0 - x ** q / 2.0
    far_weights = wl * (q / 2.0) * x ** (q - 1) * far_nodes ** (alpha - 1.0)
    nodes = np.concatenate([near_nodes, far_nodes])
    weights = np.concatenate([near_weights, far_weights])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@lru_cache(maxsize=256)
def graded_rule(order, levels):
    """Gauss-Legendre on a geometric mesh of [0, 1].

    Panels halve toward 0 for ``levels`` steps and toward 1 for FAR_LEVELS
    steps; the last panel closes at 1. Each panel gets ``order // 2`` nodes.

    Returns:
        (nodes, weights, inner) where inner is the width of the sliver [0, inner]
        left to the caller.
    """
    x, w = _legendre_unit(max(4, order // 2))
    breaks = [0.5 ** j for j in range(1, levels + 1)][::-1]
    breaks += [1.0 - 0.5 ** j for j in range(2, FAR_LEVELS + 1)] + [1.0]
    nodes = []
    weights = []
    for left, right in zip(breaks[:-1], breaks[1:]):
        nodes.append(left + (right - left) * x)
        weights.append((right - left) * w)
    nodes = np.concatenate(nodes)
    weights = np.concatenate(weights)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights, breaks[0]


def graded_levels(x, length):
    """Number of halvings toward the singular end of [x, x + length].

    The innermost break stays at INNER_CUTOFF relative to max(1, |x| / |length|)
    so that the nodes next to x remain distinct from x in floating point.
    """
    cutoff = INNER_CUTOFF * max(1.0, abs(x) / abs(length))
    return max(1, int(math.ceil(math.log(1.0 / cutoff, 2.0))))


def _zero(f, end):
    data, n = stack_values([f(end)])
    return np.zeros(data.shape[1]), n


def kernel_integral(f, x, end, alpha, g, quad):
    """(1/Gamma(alpha)) times the integral between x and end of
    f(tau) |g(x) - g(tau)|^(alpha - 1) g'(tau) dtau.

    Returns:
        A pair (coefficient vector, n) as produced by stack_values.
    """
    if x == end:
        return _zero(f, end)
    if quad.scheme == GAUSS_JACOBI:
        gx = float(g(x))
        spread = float(g(end)) - gx
        nodes, weights = singular_rule(quad.order, alpha)
        taus = g.inverse(gx + spread * nodes)
        data, n = stack_values([f(tau) for tau in taus])
        scale = abs(spread) ** alpha / gamma_fn(alpha)
        return scale * weights.dot(data), n
    length = end - x
    nodes, weights, inner = graded_rule(quad.order, graded_levels(x, length))
    taus = x + length * nodes
    kernel = (
        np.abs(float(g(x)) - g(taus)) ** (alpha - 1.0)
        * g.derivative(taus)
        * abs(length)
    )
    data, n = stack_values([f(tau) for tau in taus] + [f(x + length * inner / 2.0)])
    total = (weights * kernel).dot(data[:-1])
    total = total + data[-1] * (
        (float(g.derivative(x)) * abs(length)) ** alpha * inner ** alpha / alpha
    )
    return total / gamma_fn(alpha), n
