"""Paravectors, the unit sphere of imaginary units and slice planes C_I."""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging

import numpy as np

from fracslice.algebra.multivector import (
    Multivector,
    as_multivector,
)
from fracslice.error_message import (
    DimensionMismatchError,
    NonFiniteSampleError,
    SingularityError,
)

logger = logging.getLogger(__name__)

UNIT_TOLERANCE = 1e-12
AXIS_TOLERANCE = 1e-14


class Paravector(object):
    __slots__ = ("x0", "vec")

    def __init__(self, x0, vec):
        vec = np.array(vec, dtype=np.float64).ravel()
        if not np.isfinite(x0) or not np.all(np.isfinite(vec)):
            raise NonFiniteSampleError("Paravector entries must be finite")
        vec.setflags(write=False)
        object.__setattr__(self, "x0", float(x0))
        object.__setattr__(self, "vec", vec)

    def __setattr__(self, key, value):
        raise AttributeError("Paravector is immutable")

    @property
    def n(self):
        return len(self.vec)

    @property
    def real(self):
        return self.x0

    def norm(self):
        return float(np.sqrt(self.x0 ** 2 + np.dot(self.vec, self.vec)))

    def as_multivector(self):
        return Multivector.from_vector(self.x0, self.vec)

    def __repr__(self):
        return "Paravector({!r}, {!r})".format(self.x0, list(self.vec))


class UnitImaginary(object):
    """A unit 1-vector I of R_n, so that I*I = -1."""

    __slots__ = ("dir", "_mv")

    def __init__(self, dir):
        dir = np.array(dir, dtype=np.float64).ravel()
        if not np.all(np.isfinite(dir)):
            raise NonFiniteSampleError("Imaginary unit entries must be finite")
        if abs(np.dot(dir, dir) - 1.0) > UNIT_TOLERANCE:
            raise ValueError(
                "Imaginary unit must have unit norm, got {}".format(
                    np.sqrt(np.dot(dir, dir))
                )
            )
        dir.setflags(write=False)
        object.__setattr__(self, "dir", dir)
        object.__setattr__(self, "_mv", Multivector.from_vector(0.0, dir))

    def __setattr__(self, key, value):
        raise AttributeError("UnitImaginary is immutable")

    @classmethod
    def from_vector(cls, vec):
        vec = np.asarray(vec, dtype=np.float64)
        norm = np.sqrt(np.dot(vec, vec))
        if norm <= AXIS_TOLERANCE:
            raise ValueError("Cannot normalize a zero vector")
        return cls(vec / norm)

    @classmethod
    def basis(cls, n, i):
        dir = np.zeros(n)
        dir[i - 1] = 1.0
        return cls(dir)

    @classmethod
    def random(cls, n, random_state):
        """Uniform sample of the unit sphere of R^n."""
        while True:
            vec = random_state.normal(size=n)
            if np.dot(vec, vec) > 1e-8:
                return cls.from_vector(vec)

    @property
    def n(self):
        return len(self.dir)

    def as_multivector(self):
        return self._mv

    def label(self):
        return ";".join("{:.12g}".format(x) for x in self.dir)

    def __neg__(self):
        return UnitImaginary(-self.dir)

    def __eq__(self, other):
        if not isinstance(other, UnitImaginary):
            return NotImplemented
        return np.array_equal(self.dir, other.dir)

    def __hash__(self):
        return hash(self.dir.tobytes())

    def __repr__(self):
        return "UnitImaginary({!r})".format(list(self.dir))


def random_imaginaries(n, count, seed):
    random_state = np.random.RandomState(seed)
    return [UnitImaginary.random(n, random_state) for _ in range(count)]


def embed_complex(z, I):
    """Image of the complex number z in the slice C_I."""
    z = complex(z)
    return Multivector.scalar(I.n, z.real) + z.imag * I.as_multivector()


class SlicePoint(object):
    """The point u + I v of the slice C_I, with v >= 0."""

    __slots__ = ("u", "v", "I")

    def __init__(self, u, v, I):
        if not (np.isfinite(u) and np.isfinite(v)):
            raise NonFiniteSampleError("Slice coordinates must be finite")
        if v < 0:
            raise ValueError("Slice coordinate v must be non-negative, got {}".format(v))
        object.__setattr__(self, "u", float(u))
        object.__setattr__(self, "v", float(v))
        object.__setattr__(self, "I", I)

    def __setattr__(self, key, value):
        raise AttributeError("SlicePoint is immutable")

    @property
    def z(self):
        """The complex coordinate u + iv of the point in C_I."""
        return complex(self.u, self.v)

    def as_multivector(self):
        return embed_complex(self.z, self.I)

    def to_paravector(self):
        return Paravector(self.u, self.v * self.I.dir)

    def __repr__(self):
        return "SlicePoint(u={!r}, v={!r}, I={!r})".format(self.u, self.v, self.I)


def to_slice(x, default_dir=None):
    """Write a paravector x as u + I_x v.

    Args:
        x: The Paravector.
        default_dir: Unit used when x is real. Defaults to e_1.

    Returns:
        The SlicePoint (u, v, I_x).
    """
    if default_dir is None:
        default_dir = UnitImaginary.basis(x.n, 1)
    elif default_dir.n != x.n:
        raise DimensionMismatchError("Default unit lives in a different R_n")
    v = float(np.sqrt(np.dot(x.vec, x.vec)))
    if v <= AXIS_TOLERANCE:
        return SlicePoint(x.x0, 0.0, default_dir)
    return SlicePoint(x.x0, v, UnitImaginary(x.vec / v))


def slice_inverse(w, z):
    """(w - z)^{-1} computed in C_I and embedded back in R_n."""
    if w.I != z.I:
        raise ValueError("Both points must lie on the same slice")
    delta = w.z - z.z
    if abs(delta) <= AXIS_TOLERANCE:
        raise SingularityError("Cannot invert w - z when w = z")
    return embed_complex(1.0 / delta, w.I)


class SplittingBasis(object):
    """Orthonormal imaginary units I_1..I_n with I_1 the slice unit."""

    def __init__(self, elems):
        elems = list(elems)
        if not elems:
            raise ValueError("A splitting basis needs at least one unit")
        n = elems[0].n
        if len(elems) != n or any(e.n != n for e in elems):
            raise DimensionMismatchError("A splitting basis of R_n needs n units")
        frame = np.array([e.dir for e in elems])
        gram = frame.dot(frame.T)
        if np.max(np.abs(gram - np.eye(n))) > 1e-10:
            raise ValueError("Splitting basis units must anticommute")
        self.elems = tuple(elems)
        self.n = n
        self._products = None
        self._matrix = None

    @property
    def I(self):
        return self.elems[0]

    @property
    def products(self):
        """The 2^{n-1} products I_A, A a subset of {2..n} as a bitmask.

        Bit k of the index selects I_{k+2}; index 0 is the empty product 1.
        """
        if self._products is None:
            products = []
            for mask in range(2 ** (self.n - 1)):
                value = Multivector.scalar(self.n, 1.0)
                for k in range(self.n - 1):
                    if (mask >> k) & 1:
                        value = value * self.elems[k + 1].as_multivector()
                products.append(value)
            self._products = products
        return self._products

    @property
    def matrix(self):
        """Columns I_A and I*I_A, interleaved."""
        if self._matrix is None:
            I = self.I.as_multivector()
            columns = []
            for product in self.products:
                columns.append(product.coeffs)
                columns.append((I * product).coeffs)
            self._matrix = np.array(columns).T
        return self._matrix

    def __len__(self):
        return len(self.products)


def complete_basis(I, seed=0):
    """Seeded completion of I to a splitting basis of R_n."""
    n = I.n
    random_state = np.random.RandomState(seed)
    frame = np.column_stack([I.dir, random_state.normal(size=(n, n - 1))])
    q, _ = np.linalg.qr(frame)
    # qr may flip the sign of the first column
    if np.dot(q[:, 0], I.dir) < 0:
        q = -q
    elems = [I]
    for k in range(1, n):
        elems.append(UnitImaginary.from_vector(q[:, k]))
    logger.debug("Completed %r to a splitting basis of R_%d", I, n)
    return SplittingBasis(elems)


def split(value, basis):
    """Complex components F_A with value = sum_A (a_A + I b_A) I_A."""
    value = as_multivector(value, basis.n)
    coords = np.linalg.solve(basis.matrix, value.coeffs)
    return coords[0::2] + 1j * coords[1::2]


def reassemble(parts, basis):
    parts = np.asarray(parts, dtype=np.complex128)
    if len(parts) != len(basis):
        raise DimensionMismatchError(
            "Expected {} components, got {}".format(len(basis), len(parts))
        )
    coords = np.empty(2 * len(parts))
    coords[0::2] = parts.real
    coords[1::2] = parts.imag
    return Multivector(basis.n, basis.matrix.dot(coords))
