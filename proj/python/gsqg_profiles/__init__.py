from ._core import (
    AlphaParams,
    Error,
    alpha_params,
    burgers_profile,
    check_membership,
    f1,
    f1_prime,
    f2,
    f2_prime,
    mesh_nodes,
    solve_hp,
    solve_r2,
    velocity_2d,
)

__all__ = [
    "AlphaParams",
    "Error",
    "alpha_params",
    "burgers_profile",
    "check_membership",
    "f1",
    "f1_prime",
    "f2",
    "f2_prime",
    "mesh_nodes",
    "solve_hp",
    "solve_r2",
    "velocity_2d",
]
