from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
from scipy.optimize import bisect

from fracslice.error_message import DomainError

NOT_IMPLEMENTED_MESSAGE = "Must be implemented in child class"
MONOTONICITY_GRID = 64
INVERSE_XTOL = 1e-13


class WeightFunction(object):
    """Strictly increasing C^2 weight g with g'' + 2*lam*g' = 0.

    Every method accepts a real or a numpy array.
    """

    family = None

    def __init__(self, domain):
        lo, hi = (float(x) for x in domain)
        if not (np.isfinite(lo) and np.isfinite(hi)) or not lo < hi:
            raise ValueError("Weight domain must be a finite interval, got {}".format(domain))
        self.domain = (lo, hi)

    def __call__(self, x):  # pragma: no cover
        raise NotImplementedError(NOT_IMPLEMENTED_MESSAGE)

    def derivative(self, x):  # pragma: no cover
        raise NotImplementedError(NOT_IMPLEMENTED_MESSAGE)

    def second_derivative(self, x):  # pragma: no cover
        raise NotImplementedError(NOT_IMPLEMENTED_MESSAGE)

    def inverse(self, s):  # pragma: no cover
        raise NotImplementedError(NOT_IMPLEMENTED_MESSAGE)

    @property
    def lam(self):  # pragma: no cover
        raise NotImplementedError(NOT_IMPLEMENTED_MESSAGE)

    def grid(self, points=MONOTONICITY_GRID):
        return np.linspace(self.domain[0], self.domain[1], points)

    def _check_increasing(self):
        if not np.all(np.asarray(self.derivative(self.grid())) > 0):
            raise ValueError(
                "{} weight is not strictly increasing on {}".format(
                    self.family, self.domain
                )
            )

    def ode_residual(self, lam):
        """Relative size of g'' + 2*lam*g' on the monotonicity grid."""
        grid = self.grid()
        first = np.asarray(self.derivative(grid))
        second = np.asarray(self.second_derivative(grid))
        return float(np.max(np.abs(second + 2 * lam * first)) / np.max(np.abs(first)))

    def contains(self, x, slack=1e-12):
        lo, hi = self.domain
        scale = slack * max(1.0, abs(lo), abs(hi))
        return lo - scale <= x <= hi + scale

    def check_contains(self, x, name="x"):
        if not self.contains(x):
            raise DomainError(
                "{}={} lies outside the weight domain {}".format(name, x, self.domain)
            )

    def _clip(self, x):
        return np.clip(x, self.domain[0], self.domain[1])

    def __repr__(self):
        return "{}(domain={})".format(type(self).__name__, self.domain)


class AffineWeight(WeightFunction):
    family = "affine"

    def __init__(self, slope=1.0, intercept=0.0, domain=(0.0, 1.0)):
        super(AffineWeight, self).__init__(domain)
        self.slope = float(slope)
        self.intercept = float(intercept)
        self._check_increasing()

    def __call__(self, x):
        return self.slope * np.asarray(x, dtype=float) + self.intercept

    def derivative(self, x):
        return self.slope + 0.0 * np.asarray(x, dtype=float)

    def second_derivative(self, x):
        return 0.0 * np.asarray(x, dtype=float)

    def inverse(self, s):
        return self._clip((np.asarray(s, dtype=float) - self.intercept) / self.slope)

    @property
    def lam(self):
        return 0.0

    def __repr__(self):
        return "AffineWeight({!r}, {!r}, domain={})".format(
            self.slope, self.intercept, self.domain
        )


class ExpODEWeight(WeightFunction):
    """g(u) = delta1 * exp(-2 lam u) + delta2."""

    family = "exp"

    def __init__(self, delta1, delta2, lam, domain=(0.0, 1.0)):
        super(ExpODEWeight, self).__init__(domain)
        self.delta1 = float(delta1)
        self.delta2 = float(delta2)
        self._lam = float(lam)
        if not -2 * self.delta1 * self._lam > 0:
            raise ValueError(
                "Exponential weight needs -2*delta1*lam > 0, got delta1={}, lam={}".format(
                    delta1, lam
                )
            )
        self._check_increasing()

    def _exp(self, x):
        return np.exp(-2 * self._lam * np.asarray(x, dtype=float))

    def __call__(self, x):
        return self.delta1 * self._exp(x) + self.delta2

    def derivative(self, x):
        return -2 * self._lam * self.delta1 * self._exp(x)

    def second_derivative(self, x):
        return 4 * self._lam ** 2 * self.delta1 * self._exp(x)

    def inverse(self, s):
        ratio = (np.asarray(s, dtype=float) - self.delta2) / self.delta1
        return self._clip(-np.log(ratio) / (2 * self._lam))

    @property
    def lam(self):
        return self._lam

    def __repr__(self):
        return "ExpODEWeight({!r}, {!r}, {!r}, domain={})".format(
            self.delta1, self.delta2, self._lam, self.domain
        )


class CustomWeight(WeightFunction):
    """User supplied weight. The inverse defaults to bisection."""

    family = "custom"

    def __init__(
        self,
        func,
        deriv,
        domain,
        inverse=None,
        second_derivative=None,
        lam=None,
    ):
        super(CustomWeight, self).__init__(domain)
        self._func = func
        self._deriv = deriv
        self._inverse = inverse
        self._second = second_derivative
        self._lam = lam
        self._check_increasing()

    @staticmethod
    def _apply(func, x):
        x = np.asarray(x, dtype=float)
        if x.ndim == 0:
            return float(func(float(x)))
        return np.array([func(t) for t in x.ravel()], dtype=float).reshape(x.shape)

    def __call__(self, x):
        return self._apply(self._func, x)

    def derivative(self, x):
        return self._apply(self._deriv, x)

    def second_derivative(self, x):
        if self._second is None:
            raise NotImplementedError(
                "Custom weight was built without a second derivative"
            )
        return self._apply(self._second, x)

    def _bisect(self, s):
        lo, hi = self.domain
        if s <= self._func(lo):
            return lo
        if s >= self._func(hi):
            return hi
        return bisect(lambda t: self._func(t) - s, lo, hi, xtol=INVERSE_XTOL)

    def inverse(self, s):
        if self._inverse is not None:
            return self._clip(self._apply(self._inverse, s))
        return self._apply(self._bisect, s)

    @property
    def lam(self):
        if self._lam is None:
            raise NotImplementedError("Custom weight was built without lam")
        return self._lam

    def ode_residual(self, lam):
        if self._second is None:
            return 0.0 if self._lam == lam else float("inf")
        return super(CustomWeight, self).ode_residual(lam)


def weight_from_family(family, p1, p2, lam, domain):
    """Build a weight by family name, as the run configuration spells it."""
    if family == AffineWeight.family:
        return AffineWeight(p1, p2, domain)
    if family == ExpODEWeight.family:
        return ExpODEWeight(p1, p2, lam, domain)
    raise ValueError("Unknown weight family {!r}".format(family))
