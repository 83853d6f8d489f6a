from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools

import numpy as np

from fracslice.algebra.geometry import random_imaginaries
from fracslice.calculus.fractional import FracOrder
from fracslice.calculus.quadrature import QuadratureSpec
from fracslice.error_message import ConfigError
from fracslice.monogenic.operators import box_grid

A_PLUS = "a+"
B_MINUS = "b-"
ZERO_PLUS = "0+"
C_MINUS = "c-"
LEFT = "left"
RIGHT = "right"
RL = "RL"
CAPUTO = "Caputo"

# Largest relative violation of g'' + 2 lam g' = 0 accepted for a weight.
ODE_TOLERANCE = 1e-9


class FracSliceConfig(object):
    """Everything the corner operators on S_{a,b,c} depend on.

    Args:
        box: AxialBox.
        alpha, beta: Orders of the u and v directions.
        lam: The lambda shared by both weights.
        g: Weight on [a, b].
        h: Weight on [0, c].
        cross: The point (r, s) fixing the lines v = s and u = r.
        quad: QuadratureSpec used by every fractional operator.
    """

    def __init__(self, box, alpha, beta, lam, g, h, cross, quad=None):
        try:
            self.alpha = FracOrder(alpha).value
            self.beta = FracOrder(beta).value
        except ValueError as err:
            raise ConfigError(str(err))
        self.box = box
        self.lam = float(lam)
        self.g = g
        self.h = h
        self.r, self.s = float(cross[0]), float(cross[1])
        self.quad = quad if quad is not None else QuadratureSpec()
        self._validate()

    def _validate(self):
        box = self.box
        if not (self.g.contains(box.a) and self.g.contains(box.b)):
            raise ConfigError("g must be defined on [{}, {}]".format(box.a, box.b))
        if not (self.h.contains(0.0) and self.h.contains(box.c)):
            raise ConfigError("h must be defined on [0, {}]".format(box.c))
        for name, weight in (("g", self.g), ("h", self.h)):
            if weight.ode_residual(self.lam) > ODE_TOLERANCE:
                raise ConfigError(
                    "{} does not solve y'' + 2 lam y' = 0 for lam={}".format(name, self.lam)
                )
        if not box.a <= self.r <= box.b:
            raise ConfigError("Cross coordinate r={} outside [{}, {}]".format(self.r, box.a, box.b))
        if not 0.0 <= self.s <= box.c:
            raise ConfigError("Cross coordinate s={} outside [0, {}]".format(self.s, box.c))

    @property
    def cross(self):
        return self.r, self.s

    def replace(self, **kwargs):
        """Copy with some fields changed."""
        fields = dict(
            box=self.box,
            alpha=self.alpha,
            beta=self.beta,
            lam=self.lam,
            g=self.g,
            h=self.h,
            cross=self.cross,
            quad=self.quad,
        )
        fields.update(kwargs)
        return FracSliceConfig(**fields)

    def __repr__(self):
        return (
            "FracSliceConfig(box={!r}, alpha={!r}, beta={!r}, lam={!r}, g={!r}, "
            "h={!r}, cross={!r}, quad={!r})".format(
                self.box, self.alpha, self.beta, self.lam, self.g, self.h, self.cross, self.quad
            )
        )


class CornerVariant(object):
    """Which ends the u and v derivatives start from, and where I multiplies."""

    def __init__(self, u_side=A_PLUS, v_side=ZERO_PLUS, mult_side=LEFT):
        if u_side not in (A_PLUS, B_MINUS):
            raise ValueError("u_side must be 'a+' or 'b-', got {!r}".format(u_side))
        if v_side not in (ZERO_PLUS, C_MINUS):
            raise ValueError("v_side must be '0+' or 'c-', got {!r}".format(v_side))
        if mult_side not in (LEFT, RIGHT):
            raise ValueError("mult_side must be 'left' or 'right', got {!r}".format(mult_side))
        self.u_side = u_side
        self.v_side = v_side
        self.mult_side = mult_side

    @classmethod
    def all(cls):
        return [
            cls(u, v, m)
            for u, v, m in itertools.product(
                (A_PLUS, B_MINUS), (ZERO_PLUS, C_MINUS), (LEFT, RIGHT)
            )
        ]

    @property
    def u_sign(self):
        return 1.0 if self.u_side == A_PLUS else -1.0

    @property
    def v_sign(self):
        return 1.0 if self.v_side == ZERO_PLUS else -1.0

    @property
    def name(self):
        return "{}{},{}".format(self.u_side, self.v_side, self.mult_side)

    def __eq__(self, other):
        return isinstance(other, CornerVariant) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "CornerVariant({!r}, {!r}, {!r})".format(self.u_side, self.v_side, self.mult_side)


class MixedVariant(object):
    """Corner operator mixing Riemann-Liouville and Caputo directions.

    Args:
        u_op: Pair (kind, side) with kind in {"RL", "Caputo"}, side in {"a+", "b-"}.
        v_op: Pair (kind, side) with side in {"0+", "c-"}.
        mult_side: "left" or "right".
    """

    def __init__(self, u_op=(RL, A_PLUS), v_op=(CAPUTO, ZERO_PLUS), mult_side=LEFT):
        for kind, _ in (u_op, v_op):
            if kind not in (RL, CAPUTO):
                raise ValueError("Operator kind must be 'RL' or 'Caputo', got {!r}".format(kind))
        if CAPUTO not in (u_op[0], v_op[0]):
            raise ValueError("A mixed operator needs at least one Caputo direction")
        self.u_kind, u_side = u_op
        self.v_kind, v_side = v_op
        self.corner = CornerVariant(u_side, v_side, mult_side)

    @classmethod
    def all(cls, mult_side=LEFT):
        kinds = [(RL, CAPUTO), (CAPUTO, RL), (CAPUTO, CAPUTO)]
        return [
            cls((uk, us), (vk, vs), mult_side)
            for uk, vk in kinds
            for us in (A_PLUS, B_MINUS)
            for vs in (ZERO_PLUS, C_MINUS)
        ]

    @property
    def name(self):
        return "{}{}+I*{}{},{}".format(
            self.u_kind,
            self.corner.u_side,
            self.v_kind,
            self.corner.v_side,
            self.corner.mult_side,
        )

    def __repr__(self):
        return "MixedVariant({!r})".format(self.name)


class MembershipGrid(object):
    """Sample points of a membership sweep: a (u, v) grid on random slices."""

    def __init__(self, nu=5, nv=5, slices=4, seed=0, margin=None):
        if nu < 1 or nv < 1 or slices < 1:
            raise ValueError("Grid sizes must be positive")
        self.nu = int(nu)
        self.nv = int(nv)
        self.slices = int(slices)
        self.seed = seed
        self.margin = margin

    def points(self, box):
        return box_grid(box, self.nu, self.nv, self.margin, upper_only=True)

    def imaginaries(self, n):
        return random_imaginaries(n, self.slices, self.seed)

    def samples(self, box, n):
        """Ordered (I, u, v) triples, slice-major."""
        return [(I, u, v) for I in self.imaginaries(n) for u, v in self.points(box)]

    def __repr__(self):
        return "MembershipGrid(nu={}, nv={}, slices={}, seed={!r})".format(
            self.nu, self.nv, self.slices, self.seed
        )


class MembershipReport(object):
    """Residuals of a membership sweep.

    Attributes:
        records: Tuples (I, u, v, residual) in sample order.
        hmap_max: Largest norm of the associated map on the grid, when computed.
        zero_on_grid: Whether that map vanishes on the whole grid.
    """

    def __init__(self, variant, grid, records, tolerance, hmap_max=None):
        self.variant = variant
        self.grid = grid
        self.records = list(records)
        self.tolerance = tolerance
        self.residuals = np.array([record[3] for record in self.records])
        self.max_residual = float(self.residuals.max()) if len(self.records) else 0.0
        self.hmap_max = hmap_max
        self.zero_on_grid = None if hmap_max is None else hmap_max <= tolerance

    @property
    def verdict(self):
        return self.max_residual <= self.tolerance

    def __repr__(self):
        return "MembershipReport({}, max_residual={:.3e}, tolerance={:.1e}, verdict={})".format(
            getattr(self.variant, "name", self.variant),
            self.max_residual,
            self.tolerance,
            self.verdict,
        )
