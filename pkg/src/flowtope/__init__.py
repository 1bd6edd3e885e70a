"""Flow polytopes, reduction trees, left-degree sequences and pipe dreams."""

from .arrays import b_vector, gr_graph, sol_enumerate, tri_array, verify_encoding_chain
from .flows import enumerate_flows, feasible, kostant, min_functional
from .genperm import GenPermSpec, MinkowskiSpec, genperm_lattice_points, minkowski_to_z
from .graph import GraphError, MultiGraph, parse_graph, tilde, tilde_minus_s0
from .hull import hull_membership
from .newton import (
    ehrhart, ld_polynomial, rd_polynomial, reduced_rd, verify_corollaries, volume,
    y_parameters, z_parameters, z_parameters_level,
)
from .polynomial import SparsePolynomial
from .reduction import build_tree, ld_multiset, reduce, verify_theorem_A
from .schubert import (
    conjecture_scan, grothendieck, is_one_dominant, pipe_dreams, reduced_pipe_dreams, schubert,
    transition, verify_theorem_C,
)
from .snp import snp_check

__all__ = [
    "GenPermSpec", "GraphError", "MinkowskiSpec", "MultiGraph", "SparsePolynomial",
    "b_vector", "build_tree", "conjecture_scan", "ehrhart", "enumerate_flows", "feasible",
    "genperm_lattice_points", "gr_graph", "grothendieck", "hull_membership", "is_one_dominant",
    "kostant", "ld_multiset", "ld_polynomial", "min_functional", "minkowski_to_z", "parse_graph",
    "pipe_dreams", "rd_polynomial", "reduce", "reduced_pipe_dreams", "reduced_rd", "schubert",
    "snp_check", "sol_enumerate", "tilde", "tilde_minus_s0", "transition", "tri_array",
    "verify_corollaries", "verify_encoding_chain", "verify_theorem_A", "verify_theorem_C",
    "volume", "y_parameters", "z_parameters", "z_parameters_level",
]
