from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from functools import lru_cache
import numbers

import numpy as np

from fracslice.error_message import DimensionMismatchError, NonFiniteSampleError

MAX_GENERATORS = 6
ALGEBRA_TOLERANCE = 1e-12


def _popcount(x):
    return bin(x).count("1")


def blade_sign(a, b):
    """Sign of e_a * e_b for blade bitmasks a and b.

    The sign is the parity of the swaps that sort the concatenated generator
    list, times (-1) for every generator shared by both blades (e_i^2 = -1).
    """
    swaps = 0
    j = 0
    while (b >> j) != 0:
        if (b >> j) & 1:
            swaps += _popcount(a >> (j + 1))
        j += 1
    sign = -1 if swaps % 2 else 1
    if _popcount(a & b) % 2:
        sign = -sign
    return sign


@lru_cache(maxsize=None)
def product_table(n):
    """Result blade index and sign of every blade product of R_n.

    Returns:
        A pair of read-only (2^n, 2^n) arrays.
    """
    dim = 2 ** n
    index = np.empty((dim, dim), dtype=np.intp)
    sign = np.empty((dim, dim), dtype=np.float64)
    for a in range(dim):
        for b in range(dim):
            index[a, b] = a ^ b
            sign[a, b] = blade_sign(a, b)
    index.setflags(write=False)
    sign.setflags(write=False)
    return index, sign


def _check_generators(n):
    if not isinstance(n, numbers.Integral) or not 1 <= n <= MAX_GENERATORS:
        raise ValueError(
            "Generator count must be an integer in [1, {}], got {}".format(
                MAX_GENERATORS, n
            )
        )


class Multivector(object):
    """An element of the real Clifford algebra R_n.

    Coefficient k belongs to the blade whose bitmask is k: bit i set means
    e_{i+1} is present, index 0 is the scalar part. Instances are immutable.
    """

    __slots__ = ("n", "coeffs")
    # numpy scalars defer to the reflected operators below.
    __array_ufunc__ = None

    def __init__(self, n, coeffs=None):
        _check_generators(n)
        if coeffs is None:
            coeffs = np.zeros(2 ** n)
        else:
            coeffs = np.array(coeffs, dtype=np.float64).ravel()
        if len(coeffs) != 2 ** n:
            raise DimensionMismatchError(
                "R_{} needs {} coefficients, got {}".format(n, 2 ** n, len(coeffs))
            )
        if not np.all(np.isfinite(coeffs)):
            raise NonFiniteSampleError("Multivector coefficients must be finite")
        coeffs.setflags(write=False)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, key, value):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def zeros(cls, n):
        return cls(n)

    @classmethod
    def scalar(cls, n, value=1.0):
        coeffs = np.zeros(2 ** n)
        coeffs[0] = value
        return cls(n, coeffs)

    @classmethod
    def blade(cls, n, mask, value=1.0):
        coeffs = np.zeros(2 ** n)
        coeffs[mask] = value
        return cls(n, coeffs)

    @classmethod
    def basis(cls, n, i):
        """The generator e_i, 1-based."""
        if not 1 <= i <= n:
            raise ValueError("Generator index {} out of range for n={}".format(i, n))
        return cls.blade(n, 1 << (i - 1))

    @classmethod
    def from_vector(cls, x0, vec):
        """Paravector x0 + sum_k vec[k] e_{k+1}."""
        vec = np.asarray(vec, dtype=np.float64)
        n = len(vec)
        coeffs = np.zeros(2 ** n)
        coeffs[0] = x0
        for k in range(n):
            coeffs[1 << k] = vec[k]
        return cls(n, coeffs)

    @property
    def dim(self):
        return 2 ** self.n

    def norm(self):
        """Max-norm over the coefficients."""
        return float(np.max(np.abs(self.coeffs)))

    def allclose(self, other, atol=ALGEBRA_TOLERANCE):
        other = as_multivector(other, self.n)
        return bool(np.all(np.abs(self.coeffs - other.coeffs) <= atol))

    def _coerce(self, other):
        if isinstance(other, Multivector):
            if other.n != self.n:
                raise DimensionMismatchError(
                    "Cannot combine R_{} and R_{} elements".format(self.n, other.n)
                )
            return other
        if isinstance(other, numbers.Real):
            return Multivector.scalar(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.n, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.n, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.n, other.coeffs - self.coeffs)

    def __neg__(self):
        return Multivector(self.n, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, numbers.Real):
            return Multivector(self.n, self.coeffs * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Multivector(self.n, other * self.coeffs)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Multivector(self.n, self.coeffs / other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.coeffs.tobytes()))

    def __repr__(self):
        terms = []
        for mask, value in enumerate(self.coeffs):
            if value == 0:
                continue
            if mask == 0:
                terms.append("{!r}".format(value))
            else:
                name = "".join(
                    str(k + 1) for k in range(self.n) if (mask >> k) & 1
                )
                terms.append("{!r}*e{}".format(value, name))
        return "Multivector(n={}, {})".format(self.n, " + ".join(terms) or "0")


def geometric_product(x, y):
    """Clifford product x*y in R_n."""
    if x.n != y.n:
        raise DimensionMismatchError(
            "Cannot multiply R_{} and R_{} elements".format(x.n, y.n)
        )
    index, sign = product_table(x.n)
    terms = sign * np.outer(x.coeffs, y.coeffs)
    coeffs = np.bincount(index.ravel(), weights=terms.ravel(), minlength=x.dim)
    return Multivector(x.n, coeffs)


def left_multiplication_matrix(x):
    """Matrix M with (x*y).coeffs == M @ y.coeffs for every y in R_n."""
    index, sign = product_table(x.n)
    matrix = np.zeros((x.dim, x.dim))
    columns = np.broadcast_to(np.arange(x.dim), index.shape)
    np.add.at(matrix, (index, columns), sign * x.coeffs[:, None])
    return matrix


def as_multivector(value, n):
    """Promote a real number to a scalar Multivector of R_n."""
    if isinstance(value, Multivector):
        if value.n != n:
            raise DimensionMismatchError(
                "Expected an R_{} element, got R_{}".format(n, value.n)
            )
        return value
    if isinstance(value, numbers.Real):
        return Multivector.scalar(n, float(value))
    raise TypeError("Cannot interpret {!r} as a multivector".format(value))


def stack_values(values):
    """Stack samples of a real or Multivector valued function.

    Returns:
        A pair (array, n). The array has one row per sample; n is None when
        every sample was a plain real number.
    """
    n = None
    for value in values:
        if isinstance(value, Multivector):
            if n is not None and value.n != n:
                raise DimensionMismatchError(
                    "Samples mix R_{} and R_{} values".format(n, value.n)
                )
            n = value.n
    if n is None:
        data = np.asarray(values, dtype=np.float64).reshape(len(values), 1)
    else:
        data = np.zeros((len(values), 2 ** n))
        for row, value in enumerate(values):
            if isinstance(value, Multivector):
                data[row] = value.coeffs
            else:
                data[row, 0] = value
    if not np.all(np.isfinite(data)):
        raise NonFiniteSampleError("Integrand produced a non-finite sample")
    return data, n


def pack_values(row, n):
    """Inverse of one row of stack_values."""
    if n is None:
        return float(row[0])
    return Multivector(n, row)
