from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np

from fracslice.algebra.multivector import as_multivector
from fracslice.error_message import DomainError

SMOOTHNESS = ("C0", "AC1", "C1", "C2")
DOMAIN_SLACK = 1e-12


class AxialBox(object):
    """The axially symmetric box {u + I v : a <= u <= b, 0 <= v <= c, I in S}."""

    def __init__(self, a, b, c):
        a, b, c = float(a), float(b), float(c)
        if not all(np.isfinite([a, b, c])):
            raise ValueError("Box bounds must be finite")
        if not b > a:
            raise ValueError("Box needs b > a, got a={}, b={}".format(a, b))
        if not c > 0:
            raise ValueError("Box needs c > 0, got c={}".format(c))
        self.a = a
        self.b = b
        self.c = c

    def _slack(self):
        return DOMAIN_SLACK * max(1.0, abs(self.a), abs(self.b), self.c)

    def contains(self, u, v, upper_only=False):
        """Whether (u, v) of a slice plane lies in the box's slice."""
        slack = self._slack()
        lower_v = -slack if upper_only else -self.c - slack
        return (
            self.a - slack <= u <= self.b + slack
            and lower_v <= v <= self.c + slack
        )

    def u_bounds(self):
        return self.a, self.b

    def v_bounds(self, upper_only=False):
        return (0.0 if upper_only else -self.c), self.c

    def __eq__(self, other):
        return isinstance(other, AxialBox) and (self.a, self.b, self.c) == (
            other.a,
            other.b,
            other.c,
        )

    def __repr__(self):
        return "AxialBox(a={!r}, b={!r}, c={!r})".format(self.a, self.b, self.c)


class SliceFunction(object):
    """A function f(u + I v) given by eval(u, v, I) for v >= 0.

    Points with v < 0 are read as eval(u, -v, -I). Functions built from the
    fractional operators live on the upper half of each slice only and set
    upper_only.

    Note:
        eval may be called concurrently by the sweep engines and must not
        keep mutable state.
    """

    def __init__(self, eval, n, smoothness="C1", domain=None, upper_only=False):
        if smoothness not in SMOOTHNESS:
            raise ValueError(
                "Unknown smoothness {!r}; expected one of {}".format(smoothness, SMOOTHNESS)
            )
        self.eval = eval
        self.n = int(n)
        self.smoothness = smoothness
        self.domain = domain
        self.upper_only = bool(upper_only)

    def __call__(self, u, v, I):
        if self.domain is not None and not self.domain.contains(u, v, self.upper_only):
            raise DomainError("({}, {}) lies outside {}".format(u, v, self.domain))
        if v < 0:
            if self.upper_only:
                raise DomainError("{} is only defined for v >= 0".format(self))
            return self._value(u, -v, -I)
        return self._value(u, v, I)

    def _value(self, u, v, I):
        return as_multivector(self.eval(u, v, I), self.n)

    def at(self, p):
        return self(p.u, p.v, p.I)

    def on_slice(self, z, I):
        z = complex(z)
        return self(z.real, z.imag, I)

    def horizontal(self, t, s, I):
        """Value on the horizontal line v = s of slice I."""
        return self(t, s, I)

    def vertical(self, r, t, I):
        """Value on the vertical line u = r of slice I."""
        return self(r, t, I)

    def u_bounds(self):
        if self.domain is None:
            return -np.inf, np.inf
        return self.domain.u_bounds()

    def v_bounds(self):
        if self.domain is None:
            return (0.0 if self.upper_only else -np.inf), np.inf
        return self.domain.v_bounds(self.upper_only)

    def __repr__(self):
        return "SliceFunction(n={}, smoothness={!r}, domain={!r})".format(
            self.n, self.smoothness, self.domain
        )


class CrossSliceFunction(SliceFunction):
    """Slice function prescribed on the cross {v = s} U {u = r} of every slice.

    Args:
        horizontal_fn: (t, I) -> value of f(t + I s).
        vertical_fn: (t, I) -> value of f(r + I t).
        cross: The pair (r, s).
        partials: Optional pair (du, dv) of callables (t, I) giving the
            derivatives of horizontal_fn and vertical_fn in t.

    The horizontal line wins at the cross point itself. Away from the cross
    the value is horizontal_fn(u) + vertical_fn(v); the corner operators never
    read it.
    """

    def __init__(
        self,
        horizontal_fn,
        vertical_fn,
        cross,
        n,
        domain=None,
        partials=None,
        smoothness="AC1",
    ):
        self.r, self.s = float(cross[0]), float(cross[1])
        self._horizontal = horizontal_fn
        self._vertical = vertical_fn
        self.partials = partials
        super(CrossSliceFunction, self).__init__(
            self._dispatch, n, smoothness=smoothness, domain=domain
        )

    def _dispatch(self, u, v, I):
        if v == self.s:
            return self._horizontal(u, I)
        if u == self.r:
            return self._vertical(v, I)
        return self._horizontal(u, I) + self._vertical(v, I)

    def horizontal(self, t, s, I):
        if s == self.s:
            return as_multivector(self._horizontal(t, I), self.n)
        return super(CrossSliceFunction, self).horizontal(t, s, I)

    def vertical(self, r, t, I):
        if r == self.r:
            return as_multivector(self._vertical(t, I), self.n)
        return super(CrossSliceFunction, self).vertical(r, t, I)

    def horizontal_partial(self, t, I):
        return as_multivector(self.partials[0](t, I), self.n)

    def vertical_partial(self, t, I):
        return as_multivector(self.partials[1](t, I), self.n)

    def __add__(self, other):
        if not isinstance(other, CrossSliceFunction) or (self.r, self.s) != (
            other.r,
            other.s,
        ):
            return NotImplemented
        partials = None
        if self.partials is not None and other.partials is not None:
            partials = (
                lambda t, I: self.horizontal_partial(t, I)
                + other.horizontal_partial(t, I),
                lambda t, I: self.vertical_partial(t, I) + other.vertical_partial(t, I),
            )
        return CrossSliceFunction(
            lambda t, I: as_multivector(self._horizontal(t, I), self.n)
            + other._horizontal(t, I),
            lambda t, I: as_multivector(self._vertical(t, I), self.n)
            + other._vertical(t, I),
            (self.r, self.s),
            self.n,
            domain=self.domain,
            partials=partials,
            smoothness=self.smoothness,
        )
