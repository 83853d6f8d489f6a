from .multivector import (
    Multivector,
    geometric_product,
    as_multivector,
    left_multiplication_matrix,
)
from .geometry import (
    Paravector,
    UnitImaginary,
    SlicePoint,
    SplittingBasis,
    to_slice,
    slice_inverse,
    complete_basis,
    split,
    reassemble,
    embed_complex,
    random_imaginaries,
)

__all__ = [
    "Multivector",
    "geometric_product",
    "as_multivector",
    "left_multiplication_matrix",
    "Paravector",
    "UnitImaginary",
    "SlicePoint",
    "SplittingBasis",
    "to_slice",
    "slice_inverse",
    "complete_basis",
    "split",
    "reassemble",
    "embed_complex",
    "random_imaginaries",
]
