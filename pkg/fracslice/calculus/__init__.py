from .gamma import gamma_fn, power_law_integral, power_law_derivative
from .weights import (
    WeightFunction,
    AffineWeight,
    ExpODEWeight,
    CustomWeight,
    weight_from_family,
)
from .differentiation import FDPolicy, derivative
from .quadrature import QuadratureSpec, GAUSS_JACOBI, GRADED_COMPOSITE
from .fractional import (
    FracOrder,
    frac_integral_left,
    frac_integral_right,
    rl_derivative_left,
    rl_derivative_right,
    caputo_derivative_left,
    caputo_derivative_right,
)

__all__ = [
    "gamma_fn",
    "power_law_integral",
    "power_law_derivative",
    "WeightFunction",
    "AffineWeight",
    "ExpODEWeight",
    "CustomWeight",
    "weight_from_family",
    "FDPolicy",
    "derivative",
    "QuadratureSpec",
    "GAUSS_JACOBI",
    "GRADED_COMPOSITE",
    "FracOrder",
    "frac_integral_left",
    "frac_integral_right",
    "rl_derivative_left",
    "rl_derivative_right",
    "caputo_derivative_left",
    "caputo_derivative_right",
]
