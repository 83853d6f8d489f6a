"""Closed-form slice functions driving the scenarios."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import cmath
import math

import numpy as np

from fracslice.algebra.geometry import embed_complex
from fracslice.algebra.multivector import Multivector
from fracslice.monogenic.domain import CrossSliceFunction, SliceFunction


def random_constants(n, count, random_state, scale=1.0):
    """count Multivectors of R_n with coefficients uniform in [-scale, scale]."""
    return [
        Multivector(n, random_state.uniform(-scale, scale, size=2 ** n))
        for _ in range(count)
    ]


def sm_lambda_function(coefficients, lam, box):
    """exp(-lam u) sum_k (u + I v)^k C_k, lambda-slice monogenic on every slice."""
    n = coefficients[0].n

    def evaluate(u, v, I):
        z = complex(u, v)
        total = Multivector.zeros(n)
        for k, coefficient in enumerate(coefficients):
            total = total + embed_complex(z ** k, I) * coefficient
        return math.exp(-lam * u) * total

    return SliceFunction(evaluate, n, "C2", domain=box)


def exp_slice_function(C, box):
    """exp(u + I v) C."""

    def evaluate(u, v, I):
        return embed_complex(cmath.exp(complex(u, v)), I) * C

    return SliceFunction(evaluate, C.n, "C2", domain=box)


def smooth_slice_function(n, random_state, box):
    """A generic C^2 slice function, not slice monogenic."""
    C1, C2, C3 = random_constants(n, 3, random_state)

    def evaluate(u, v, I):
        Imv = I.as_multivector()
        return (
            math.sin(u + 0.5) * C1
            + (1.0 + v * v) * (Imv * C2)
            + (u * v + math.cos(u - v)) * C3
        )

    return SliceFunction(evaluate, n, "C2", domain=box)


def smooth_cross_function(n, random_state, cfg):
    """A generic function on the cross of cfg with analytic line derivatives."""
    C1, C2, C3 = random_constants(n, 3, random_state)

    def horizontal(t, I):
        return math.sin(t + 0.5) * C1 + t * t * (I.as_multivector() * C2)

    def du(t, I):
        return math.cos(t + 0.5) * C1 + 2.0 * t * (I.as_multivector() * C2)

    def vertical(t, I):
        return math.exp(-t) * C3 + (1.0 + t) * (I.as_multivector() * C2)

    def dv(t, I):
        return -math.exp(-t) * C3 + I.as_multivector() * C2

    return CrossSliceFunction(horizontal, vertical, cfg.cross, n, domain=cfg.box, partials=(du, dv))


def constant_cross_function(C, cfg):
    """f = C on the cross, with zero line derivatives."""
    zero = Multivector.zeros(C.n)
    return CrossSliceFunction(
        lambda t, I: C,
        lambda t, I: C,
        cfg.cross,
        C.n,
        domain=cfg.box,
        partials=(lambda t, I: zero, lambda t, I: zero),
    )


def linear_cross_function(C, cfg):
    """f = u C, a generic non-member."""
    r = cfg.r
    return CrossSliceFunction(
        lambda t, I: t * C,
        lambda t, I: r * C,
        cfg.cross,
        C.n,
        domain=cfg.box,
        partials=(lambda t, I: C, lambda t, I: Multivector.zeros(C.n)),
    )


def scalar_test_functions():
    """Named smooth real functions with their derivatives."""
    return [
        ("exp", np.exp, np.exp),
        ("sin", lambda t: np.sin(2 * t) + 1.0, lambda t: 2 * np.cos(2 * t)),
        ("square", lambda t: t * t, lambda t: 2 * t),
    ]
