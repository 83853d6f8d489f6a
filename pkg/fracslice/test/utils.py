import numpy as np

from fracslice.algebra.multivector import Multivector
from fracslice.calculus.differentiation import FDPolicy
from fracslice.calculus.quadrature import QuadratureSpec
from fracslice.calculus.weights import AffineWeight, ExpODEWeight
from fracslice.monogenic.domain import AxialBox
from fracslice.operators.config import FracSliceConfig, MembershipGrid

random_state = np.random.RandomState(seed=42)

# Generators of the test algebras
N_GENERATORS = 3
EXP_LAMBDA = 0.4

test_box = AxialBox(0.0, 1.0, 1.0)

test_quad = QuadratureSpec("gauss-jacobi", 16, FDPolicy(1e-3, 2))

# Weights on [0, 1] for each family
test_weights = {
    "affine": AffineWeight(1.0, 0.0, (0.0, 1.0)),
    "exp": ExpODEWeight(-1.0, 1.0, EXP_LAMBDA, (0.0, 1.0)),
}
test_weights_keys = list(test_weights.keys())
test_weights_values = list(test_weights.values())

test_orders = [0.25, 0.5, 0.75]
test_orders_keys = ["alpha_{}".format(alpha) for alpha in test_orders]

# Smooth real functions with their derivatives
test_functions = {
    "exp": (np.exp, np.exp),
    "sin": (lambda t: np.sin(2 * t) + 1.0, lambda t: 2 * np.cos(2 * t)),
    "square": (lambda t: t * t, lambda t: 2 * t),
}
test_functions_keys = list(test_functions.keys())
test_functions_values = list(test_functions.values())

small_grid = MembershipGrid(nu=2, nv=2, slices=2, seed=0)


def affine_config(alpha=0.5, beta=0.5, cross=(0.5, 0.5), quad=test_quad):
    """lambda = 0 configuration with identity weights on the unit box."""
    return FracSliceConfig(
        test_box,
        alpha,
        beta,
        0.0,
        AffineWeight(1.0, 0.0, (0.0, 1.0)),
        AffineWeight(1.0, 0.0, (0.0, 1.0)),
        cross,
        quad,
    )


def exp_config(alpha=0.5, beta=0.5, cross=(0.5, 0.5), quad=test_quad):
    return FracSliceConfig(
        test_box,
        alpha,
        beta,
        EXP_LAMBDA,
        ExpODEWeight(-1.0, 1.0, EXP_LAMBDA, (0.0, 1.0)),
        ExpODEWeight(-1.0, 1.0, EXP_LAMBDA, (0.0, 1.0)),
        cross,
        quad,
    )


test_configs = {"affine": affine_config(), "exp": exp_config()}
test_configs_keys = list(test_configs.keys())
test_configs_values = list(test_configs.values())


def random_multivector(n=N_GENERATORS, scale=1.0):
    return Multivector(n, random_state.uniform(-scale, scale, size=2 ** n))


def multivector_equals(left, right, atol=1e-12):
    """Assert two multivectors agree coefficient-wise."""
    assert left.n == right.n
    np.testing.assert_allclose(left.coeffs, right.coeffs, rtol=0, atol=atol)
