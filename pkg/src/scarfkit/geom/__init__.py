"""Euclidean layer: the standard simplex, integer lattices, and chains in ℝⁿ."""

from .lattice import (
    freudenthal,
    freudenthal_family,
    i_cells_by_dominance,
    i_cells_closed_form,
    in_gamma,
    integer_points,
    is_I_cell,
    lex_shift_family,
    s_map,
    s_operator,
    sigma_iota,
    t_map,
    verify_isomorphism,
)
from .rn import (
    GeneralPositionError,
    GeometricChain,
    Triangulation,
    affine_coordinates,
    affine_scarf,
    affinely_independent,
    barycentric,
    centered_simplex,
    freudenthal_triangulation,
    general_position,
    geometric_chain,
    in_hull,
    intersection_number,
    inward_tangent,
    linear_coordinates,
    segment_meets_hull,
    vector_hedgehog,
)
from .simplex import (
    BROUWER_ORACLES,
    KAKUTANI_ORACLES,
    Approximation,
    ApproximationWarning,
    SubSimplex,
    affine_refinement,
    barycenter,
    brouwer_approximate,
    constant_kakutani,
    constant_oracle,
    density_schedule,
    hull_distance,
    identity_oracle,
    kakutani_approximate,
    kkm_scarf_coloring,
    lex_good,
    piecewise_kakutani,
    rotation_oracle,
    simplex_grid,
    sub_simplex,
    whole_simplex_kakutani,
)
