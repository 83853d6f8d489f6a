from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
import math

import numpy as np

from fracslice.algebra.geometry import embed_complex
from fracslice.algebra.multivector import (
    Multivector,
    left_multiplication_matrix,
    stack_values,
)
from fracslice.error_message import FitError

logger = logging.getLogger(__name__)

FIT_RADII = (0.3, 0.6, 0.9)
HOLDOUT_RADII = (0.45, 0.75)
# Fits worse conditioned than this are rejected.
MAX_CONDITION = 1e12


class SeriesFit(object):
    """Fitted sum_n exp(-lam Re z) (z - z0)^n C_n on one slice."""

    def __init__(self, coefficients, center, radius, lam, I, residual, holdout_residual, condition):
        self.coefficients = list(coefficients)
        self.center = complex(center)
        self.radius = radius
        self.lam = lam
        self.I = I
        self.residual = residual
        self.holdout_residual = holdout_residual
        self.condition = condition

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def powers(self, z):
        """Complex factors exp(-lam Re z) (z - z0)^k, k = 0..degree."""
        z = complex(z)
        damping = math.exp(-self.lam * z.real)
        return damping * (z - self.center) ** np.arange(self.degree + 1)

    def evaluate(self, z):
        """Series value at the complex slice coordinate z, read in C_I."""
        total = Multivector.zeros(self.I.n)
        for factor, coefficient in zip(self.powers(z), self.coefficients):
            total = total + embed_complex(factor, self.I) * coefficient
        return total

    def __repr__(self):
        return "SeriesFit(degree={}, residual={:.3e}, condition={:.3e})".format(
            self.degree, self.residual, self.condition
        )


def _ring_points(center, radius, count, radii, offset):
    per_ring = int(math.ceil(count / float(len(radii))))
    points = []
    for ring, scale in enumerate(radii):
        angles = 2 * np.pi * (np.arange(per_ring) + offset * (ring + 1)) / per_ring
        points.extend(center + scale * radius * np.exp(1j * angles))
    return points


def series_fit(F, center, radius, degree, I, lam=0.0, samples=None):
    """Least-squares fit of a slice function by a lambda-damped power series.

    Args:
        F: SliceFunction to fit on slice I.
        center: Complex slice coordinate z0 of the disk center.
        radius: Disk radius.
        degree: Highest power N.
        I: The slice unit.
        lam: Damping exponent.
        samples: Number of fit points, at least 4 (N + 1) by default.

    Returns:
        SeriesFit with the max residual on the fit points and on held-out
        points.
    """
    center = complex(*center) if isinstance(center, tuple) else complex(center)
    count = samples or 4 * (degree + 1)
    if count < degree + 1:
        raise FitError("Need at least {} sample points".format(degree + 1))
    points = _ring_points(center, radius, count, FIT_RADII, 0.0)
    dim = 2 ** F.n
    rotation = left_multiplication_matrix(I.as_multivector())
    eye = np.eye(dim)

    shell = SeriesFit([Multivector.zeros(F.n)] * (degree + 1), center, radius, lam, I, 0.0, 0.0, 1.0)
    blocks = []
    for z in points:
        row = [factor.real * eye + factor.imag * rotation for factor in shell.powers(z)]
        blocks.append(np.hstack(row))
    design = np.vstack(blocks)
    targets, _ = stack_values([F.on_slice(z, I) for z in points])
    solution = np.linalg.lstsq(design, targets.ravel(), rcond=None)[0]
    condition = float(np.linalg.cond(design))
    if not np.isfinite(condition) or condition > MAX_CONDITION:
        raise FitError("Series fit is ill-conditioned (condition {:.3e})".format(condition))
    coefficients = [Multivector(F.n, block) for block in solution.reshape(degree + 1, dim)]
    fit = SeriesFit(coefficients, center, radius, lam, I, 0.0, 0.0, condition)
    fit.residual = max((fit.evaluate(z) - F.on_slice(z, I)).norm() for z in points)
    holdout = _ring_points(center, radius, count, HOLDOUT_RADII, 0.5)
    fit.holdout_residual = max((fit.evaluate(z) - F.on_slice(z, I)).norm() for z in holdout)
    logger.debug("Series fit %r", fit)
    return fit
