from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np

from fracslice.error_message import DomainError

LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _lanczos(x):
    x -= 1.0
    total = LANCZOS_COEFFICIENTS[0]
    for k in range(1, LANCZOS_G + 2):
        total += LANCZOS_COEFFICIENTS[k] / (x + k)
    t = x + LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (x + 0.5) * math.exp(-t) * total


def gamma_fn(x):
    """Gamma function for x > 0.

    Args:
        x: A positive real.

    Returns:
        Gamma(x), from the Lanczos approximation (g=7) with the reflection
        formula below 1/2.
    """
    x = float(x)
    if not x > 0 or not np.isfinite(x):
        raise DomainError("gamma_fn is defined for finite x > 0, got {}".format(x))
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * _lanczos(1.0 - x))
    return _lanczos(x)


def power_law_integral(sigma, alpha, delta):
    """Order-alpha integral of (g - g(a))^sigma, evaluated at distance delta."""
    scale = gamma_fn(sigma + 1.0) / gamma_fn(sigma + alpha + 1.0)
    return scale * np.power(delta, sigma + alpha)


def power_law_derivative(sigma, alpha, delta):
    """Order-alpha RL derivative of (g - g(a))^sigma at distance delta."""
    scale = gamma_fn(sigma + 1.0) / gamma_fn(sigma - alpha + 1.0)
    return scale * np.power(delta, sigma - alpha)
