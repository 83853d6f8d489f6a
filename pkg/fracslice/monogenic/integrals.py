"""Contours in a slice plane and the slice Cauchy integral formulas."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from collections import namedtuple
import logging
import math

import numpy as np
from scipy.special import roots_legendre

from fracslice.algebra.geometry import UnitImaginary
from fracslice.algebra.multivector import (
    Multivector,
    left_multiplication_matrix,
    stack_values,
)
from fracslice.error_message import ContourError, DomainError

logger = logging.getLogger(__name__)

MoreraVerdict = namedtuple("MoreraVerdict", ["passed", "worst"])

MIN_NODES = 3
INTERIOR_SLACK = 1e-12


class Contour(object):
    """Piecewise C^1 curve w(t) in the slice C_I with its quadrature.

    Args:
        nodes: Complex slice coordinates w_j.
        tangents: Complex dw/dt at each node.
        weights: Quadrature weights in t.
        I: The slice unit.
        closed: Whether the curve ends where it starts.
    """

    def __init__(self, nodes, tangents, weights, I, closed=False):
        nodes = np.asarray(nodes, dtype=np.complex128)
        tangents = np.asarray(tangents, dtype=np.complex128)
        weights = np.asarray(weights, dtype=np.float64)
        if len(nodes) < MIN_NODES:
            raise ContourError(
                "A contour needs at least {} nodes, got {}".format(MIN_NODES, len(nodes))
            )
        if not len(nodes) == len(tangents) == len(weights):
            raise ContourError("Nodes, tangents and weights must have equal length")
        self.nodes = nodes
        self.tangents = tangents
        self.weights = weights
        self.I = I
        self.closed = bool(closed)

    @property
    def samples(self):
        """Ordered (u, v) points; a closed contour repeats its first point."""
        points = [(w.real, w.imag) for w in self.nodes]
        if self.closed:
            points.append(points[0])
        return points

    @classmethod
    def circle(cls, center, radius, I, nodes=256):
        """Counterclockwise circle with the periodic trapezoid rule."""
        center = complex(*center) if isinstance(center, tuple) else complex(center)
        if not radius > 0:
            raise ContourError("Circle radius must be positive, got {}".format(radius))
        t = 2 * np.pi * np.arange(nodes) / nodes
        phase = np.exp(1j * t)
        return cls(
            center + radius * phase,
            1j * radius * phase,
            np.full(nodes, 2 * np.pi / nodes),
            I,
            closed=True,
        )

    @classmethod
    def segment(cls, start, end, I, nodes=64):
        """Straight segment with Gauss-Legendre nodes."""
        start, end = complex(start), complex(end)
        t, w = roots_legendre(nodes)
        t = (t + 1.0) / 2.0
        return cls(
            start + (end - start) * t,
            np.full(nodes, end - start),
            w / 2.0,
            I,
            closed=False,
        )

    @classmethod
    def polyline(cls, points, I, nodes_per_side=64, closed=False):
        points = [complex(p) for p in points]
        if closed and points[0] != points[-1]:
            points.append(points[0])
        if len(points) < 2:
            raise ContourError("A polyline needs at least two points")
        pieces = [
            cls.segment(start, end, I, nodes_per_side)
            for start, end in zip(points[:-1], points[1:])
        ]
        result = pieces[0]
        for piece in pieces[1:]:
            result = result + piece
        result.closed = closed
        return result

    @classmethod
    def rectangle(cls, u0, u1, v0, v1, I, nodes_per_side=64):
        """Counterclockwise axis-aligned rectangle."""
        corners = [complex(u0, v0), complex(u1, v0), complex(u1, v1), complex(u0, v1)]
        return cls.polyline(corners, I, nodes_per_side, closed=True)

    def reversed(self):
        return Contour(
            self.nodes[::-1], -self.tangents[::-1], self.weights[::-1], self.I, self.closed
        )

    def __add__(self, other):
        if not isinstance(other, Contour):
            return NotImplemented
        if other.I != self.I:
            raise ContourError("Cannot join contours lying on different slices")
        return Contour(
            np.concatenate([self.nodes, other.nodes]),
            np.concatenate([self.tangents, other.tangents]),
            np.concatenate([self.weights, other.weights]),
            self.I,
            closed=self.closed and other.closed,
        )

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return "Contour(nodes={}, closed={}, I={!r})".format(len(self), self.closed, self.I)


def contour_integral(weight, contour, f):
    """Quadrature of weight(w) d_w sigma(I) f(w) along the contour.

    d_w sigma(I) = -dw I is taken in C_I. weight maps the complex slice
    coordinate w to a real, a complex (read in C_I) or a Multivector; None
    means 1.
    """
    I = contour.I
    values, _ = stack_values([f.on_slice(w, I) for w in contour.nodes])
    measure = -1j * contour.tangents * contour.weights
    if weight is None:
        kernels = np.ones(len(contour), dtype=np.complex128)
    else:
        kernels = [weight(w) for w in contour.nodes]
        if any(isinstance(k, Multivector) for k in kernels):
            return _multivector_weighted(kernels, measure, values, f.n, I)
        kernels = np.asarray(kernels, dtype=np.complex128)
    factors = kernels * measure
    rotation = left_multiplication_matrix(I.as_multivector())
    coeffs = factors.real.dot(values) + rotation.dot(factors.imag.dot(values))
    return Multivector(f.n, coeffs)


def _multivector_weighted(kernels, measure, values, n, I):
    Imv = I.as_multivector()
    total = Multivector.zeros(n)
    for kernel, step, value in zip(kernels, measure, values):
        dsigma = step.real + step.imag * Imv
        total = total + kernel * dsigma * Multivector(n, value)
    return total


def _check_disk(f, center, radius):
    if f.domain is None:
        return
    u_lo, u_hi = f.u_bounds()
    v_lo, v_hi = f.v_bounds()
    if (
        center.real - radius < u_lo
        or center.real + radius > u_hi
        or center.imag - radius < v_lo
        or center.imag + radius > v_hi
    ):
        raise DomainError(
            "Disk around {} of radius {} leaves the domain {}".format(center, radius, f.domain)
        )


def cauchy_value(f, center, radius, z, lam=0.0, nodes=512):
    """Value at z from the lambda-Cauchy integral over a circle in z's slice.

    Computes (1/2pi) int exp(lam (Re w - Re z)) (w - z)^{-1} d_w sigma(I) f(w).
    """
    center = complex(*center) if isinstance(center, tuple) else complex(center)
    zc = z.z
    if abs(zc - center) >= radius * (1.0 - INTERIOR_SLACK):
        raise ContourError("z = {} is not strictly inside the disk".format(zc))
    _check_disk(f, center, radius)
    contour = Contour.circle(center, radius, z.I, nodes)

    def kernel(w):
        return math.exp(lam * (w.real - z.u)) / (w - zc)

    return contour_integral(kernel, contour, f) / (2 * math.pi)


def random_contour(box_bounds, I, random_state, shape, nodes=256):
    """A circle or rectangle inside the (u, v) bounds, drawn from random_state."""
    (u_lo, u_hi), (v_lo, v_hi) = box_bounds
    width, height = u_hi - u_lo, v_hi - v_lo
    if shape == "circle":
        radius = random_state.uniform(0.1, 0.45) * min(width, height)
        center = complex(
            random_state.uniform(u_lo + radius, u_hi - radius),
            random_state.uniform(v_lo + radius, v_hi - radius),
        )
        return Contour.circle(center, radius, I, nodes)
    u0, u1 = sorted(random_state.uniform(u_lo, u_hi, size=2))
    v0, v1 = sorted(random_state.uniform(v_lo, v_hi, size=2))
    u1 = max(u1, min(u0 + 0.05 * width, u_hi))
    v1 = max(v1, min(v0 + 0.05 * height, v_hi))
    return Contour.rectangle(u0, u1, v0, v1, I, max(MIN_NODES, nodes // 4))


def morera_classify(f, lam=0.0, trials=8, seed=0, tol=1e-8, nodes=256):
    """Morera surrogate: lambda-weighted integrals over random closed contours.

    Circles and rectangles alternate, each on a fresh random slice.

    Returns:
        MoreraVerdict(passed, worst).
    """
    if f.domain is None:
        raise DomainError("Morera sampling needs a bounded domain")
    random_state = np.random.RandomState(seed)
    bounds = (f.u_bounds(), f.v_bounds())
    worst = 0.0
    for trial in range(trials):
        I = UnitImaginary.random(f.n, random_state)
        shape = "circle" if trial % 2 == 0 else "rectangle"
        contour = random_contour(bounds, I, random_state, shape, nodes)
        residual = contour_integral(
            lambda w: math.exp(lam * w.real), contour, f
        ).norm()
        logger.debug("Morera trial %d (%s): %s", trial, shape, residual)
        worst = max(worst, residual)
    return MoreraVerdict(worst <= tol, worst)
