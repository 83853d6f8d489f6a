from .domain import AxialBox, SliceFunction, CrossSliceFunction, SMOOTHNESS
from .operators import (
    cr_residual,
    exp_conjugation_residual,
    representation_combine,
    splitting_holomorphy_check,
    box_grid,
)
from .integrals import (
    Contour,
    MoreraVerdict,
    contour_integral,
    cauchy_value,
    morera_classify,
)
from .series import SeriesFit, series_fit

__all__ = [
    "AxialBox",
    "SliceFunction",
    "CrossSliceFunction",
    "SMOOTHNESS",
    "cr_residual",
    "exp_conjugation_residual",
    "representation_combine",
    "splitting_holomorphy_check",
    "box_grid",
    "Contour",
    "MoreraVerdict",
    "contour_integral",
    "cauchy_value",
    "morera_classify",
    "SeriesFit",
    "series_fit",
]
