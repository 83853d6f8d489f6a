from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np

from fracslice.algebra.multivector import pack_values, stack_values
from fracslice.error_message import NonFiniteSampleError, StencilError

# Central five point stencil and its offsets in units of h.
STENCIL_OFFSETS = (-2.0, -1.0, 1.0, 2.0)
STENCIL_WEIGHTS = (1.0, -8.0, 8.0, -1.0)
STENCIL_REACH = 2.0
# Fraction of the distance to the boundary a shrunken step may use.
SHRINK_FRACTION = 1.0 / 8.0


class FDPolicy(object):
    """Step and Richardson depth for central differences.

    Args:
        step: Base step h0. The step used at x is h0 * max(1, |x|).
        levels: Number of Richardson halvings.
        shrink: Shrink the step near a boundary instead of raising.
    """

    def __init__(self, step=1e-3, levels=2, shrink=False):
        if not step > 0:
            raise ValueError("Finite-difference step must be positive, got {}".format(step))
        if int(levels) != levels or levels < 0:
            raise ValueError("Richardson levels must be a non-negative integer")
        self.step = float(step)
        self.levels = int(levels)
        self.shrink = bool(shrink)

    def step_at(self, x):
        return self.step * max(1.0, abs(x))

    def shrinking(self):
        return FDPolicy(self.step, self.levels, shrink=True)

    def __eq__(self, other):
        return isinstance(other, FDPolicy) and (
            (self.step, self.levels, self.shrink)
            == (other.step, other.levels, other.shrink)
        )

    def __repr__(self):
        return "FDPolicy(step={!r}, levels={!r}, shrink={!r})".format(
            self.step, self.levels, self.shrink
        )


def _stencil_step(x, lower, upper, policy):
    h = policy.step_at(x)
    reach = STENCIL_REACH * h
    if x - reach >= lower and x + reach <= upper:
        return h
    if not policy.shrink:
        raise StencilError(
            "Stencil [{}, {}] leaves the domain [{}, {}]".format(
                x - reach, x + reach, lower, upper
            )
        )
    h = min(h, (x - lower) * SHRINK_FRACTION, (upper - x) * SHRINK_FRACTION)
    if not h > 0:
        raise StencilError("No room for a stencil at {} in [{}, {}]".format(x, lower, upper))
    return h


def _stack(samples):
    if isinstance(samples[0], np.ndarray):
        data = np.array(samples, dtype=np.float64)
        if not np.all(np.isfinite(data)):
            raise NonFiniteSampleError("Differentiated function returned non-finite values")
        return data, np.ndarray
    return stack_values(samples)


def _unstack(row, n):
    if n is np.ndarray:
        return row
    return pack_values(row, n)


def _central(func, x, h):
    samples, n = _stack([func(x + k * h) for k in STENCIL_OFFSETS])
    return np.tensordot(STENCIL_WEIGHTS, samples, axes=1) / (12.0 * h), n


def derivative(func, x, lower=-np.inf, upper=np.inf, policy=None):
    """Richardson-extrapolated central difference of func at x.

    Args:
        func: Callable returning a real, a numpy array or a Multivector.
        x: Evaluation point.
        lower, upper: Bounds the stencil must respect.
        policy: FDPolicy; the default is FDPolicy().

    Returns:
        A pair (value, error estimate). The value has the type func returns.
    """
    if policy is None:
        policy = FDPolicy()
    h = _stencil_step(x, lower, upper, policy)
    table = []
    n = None
    for level in range(policy.levels + 1):
        value, n = _central(func, x, h / 2 ** level)
        row = [value]
        for j in range(1, level + 1):
            # halving the step removes the h^(2j+2) term
            factor = 4.0 ** (j + 1) - 1.0
            row.append(row[j - 1] + (row[j - 1] - table[level - 1][j - 1]) / factor)
        table.append(row)
    best = table[-1][-1]
    if policy.levels == 0:
        error = 0.0
    else:
        error = float(np.max(np.abs(best - table[-1][-2])))
    return _unstack(best, n), error
