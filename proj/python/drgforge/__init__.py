"""Bilinear forms graphs over finite fields and distance-regular
intersection-array feasibility screening."""

from drgforge._core import (
    check_distance_regular,
    construct,
    construct_to_file,
    drg_eigenvalues,
    expected_intersection_array,
    family_array,
    feasibility_verdict,
    gaussian_binomial,
    grid_recognize,
    is_isomorphic,
    make_field,
    matrix_rank,
    solve_local_multiplicities,
    spectrum,
    verify_suite,
)

__all__ = [
    "check_distance_regular",
    "construct",
    "construct_to_file",
    "drg_eigenvalues",
    "expected_intersection_array",
    "family_array",
    "feasibility_verdict",
    "gaussian_binomial",
    "grid_recognize",
    "is_isomorphic",
    "make_field",
    "matrix_rank",
    "solve_local_multiplicities",
    "spectrum",
    "verify_suite",
]

__version__ = "0.1.0"
