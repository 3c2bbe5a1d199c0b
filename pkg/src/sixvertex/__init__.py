"""Exact free-fermionic six/eight-vertex model computations.

Polynomials over Gaussian rationals, Boltzmann weight systems with a
composition group law, Yang-Baxter commutator checks, lattice partition
functions with partition boundary conditions, and Schur polynomials.
"""

from .lattice import (BoundarySpec, GTPattern, LatticeState,
                      brute_force_states, enumerate_states, gt_row_sums,
                      gt_to_state, partition_function, state_to_gt,
                      state_weight, tokuyama_sum, transfer_matrix,
                      validate_partition)
from .matrix import PolyMatrix
from .poly import (IMAG, ONE, ZERO, GaussianRational, Polynomial, VarSpace,
                   poly_sum, prod)
from .schur import (deformed_denominator, s_gamma, schur_bialternant,
                    schur_pattern_sum)
from .weights import (IceKind, VertexWeights, compose, delta, delta_invariants,
                      free_fermion, gamma, ice_weights, inverse_scaled,
                      invariants_match, pi_map, r_weights, r_weights_params,
                      random_free_fermionic, random_matched_pair,
                      random_mismatched_pair, solve_R_from_ST)
from .yang_baxter import (check_ice_commutator, check_parametrized_ybe,
                          check_triangularity, check_yb_system, ddagger,
                          hatted, lift, r_family, r_solution_space,
                          star_triangle_sides, swap_matrix, yb_commutator)

__all__ = [
    "BoundarySpec", "GTPattern", "GaussianRational", "IMAG", "IceKind",
    "LatticeState", "ONE", "PolyMatrix", "Polynomial", "VarSpace",
    "VertexWeights", "ZERO", "brute_force_states", "check_ice_commutator",
    "check_parametrized_ybe", "check_triangularity", "check_yb_system",
    "compose", "ddagger", "deformed_denominator", "delta", "delta_invariants",
    "enumerate_states", "free_fermion", "gamma", "gt_row_sums", "gt_to_state",
    "hatted", "ice_weights", "inverse_scaled", "invariants_match", "lift",
    "partition_function", "pi_map", "poly_sum", "prod", "r_family",
    "r_solution_space",
    "r_weights", "r_weights_params", "random_free_fermionic",
    "random_matched_pair", "random_mismatched_pair", "s_gamma",
    "schur_bialternant", "schur_pattern_sum", "solve_R_from_ST",
    "star_triangle_sides", "state_to_gt", "state_weight", "swap_matrix",
    "tokuyama_sum", "transfer_matrix", "validate_partition", "yb_commutator",
]
