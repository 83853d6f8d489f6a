from .config import (
    FracSliceConfig,
    CornerVariant,
    MixedVariant,
    MembershipGrid,
    MembershipReport,
    A_PLUS,
    B_MINUS,
    ZERO_PLUS,
    C_MINUS,
    LEFT,
    RIGHT,
    RL,
    CAPUTO,
)
from .riemann_liouville import (
    line_integral,
    restricted_integral,
    u_integral,
    v_integral,
    rl_operator,
    diagonal_operator,
    member_construct,
    perturb,
    is_frac_slice_monogenic,
    fracprop1_residual,
    hmap,
    hmap_function,
    cross_sweep,
)
from .properties import (
    frac_representation_check,
    frac_splitting_check,
    frac_series_fit,
    frac_cauchy_check,
    frac_cauchy_theorem_check,
    frac_morera_check,
    cross_recovery_check,
    cross_recovery_convergence,
)
from .caputo import (
    caputo_operator,
    mixed_operator,
    is_caputo_member,
    caputo_member_construct,
    h_operator,
    h_function,
    caputo_h_identity_residual,
    caputo_characterization_check,
    fd_partials,
)

__all__ = [
    "FracSliceConfig",
    "CornerVariant",
    "MixedVariant",
    "MembershipGrid",
    "MembershipReport",
    "A_PLUS",
    "B_MINUS",
    "ZERO_PLUS",
    "C_MINUS",
    "LEFT",
    "RIGHT",
    "RL",
    "CAPUTO",
    "line_integral",
    "restricted_integral",
    "u_integral",
    "v_integral",
    "rl_operator",
    "diagonal_operator",
    "member_construct",
    "perturb",
    "is_frac_slice_monogenic",
    "fracprop1_residual",
    "hmap",
    "hmap_function",
    "cross_sweep",
    "frac_representation_check",
    "frac_splitting_check",
    "frac_series_fit",
    "frac_cauchy_check",
    "frac_cauchy_theorem_check",
    "frac_morera_check",
    "cross_recovery_check",
    "cross_recovery_convergence",
    "caputo_operator",
    "mixed_operator",
    "is_caputo_member",
    "caputo_member_construct",
    "h_operator",
    "h_function",
    "caputo_h_identity_residual",
    "caputo_characterization_check",
    "fd_partials",
]
