"""Exact enumeration of arithmetical structures.

Works on non-negative integer matrices with zero diagonal and on dominated
square-free polynomials. Everything is exact integer arithmetic; vectors are
tuples and variable indices are 0-based throughout the Python API.
"""

from .arith_enum import (
    ArithStructure,
    EnumReport,
    arithmetical_structures,
    canonical_structure,
    min_completion,
    min_dgeq0_2x2,
    min_dgeq0_matrix,
    start_points,
    sub_frontier,
)
from .classify import (
    ZClassification,
    classify_z,
    critical_group_order,
    is_arithmetical_d,
    mp3_admissible_constants,
    mp3_membership,
    mp3_poly,
)
from .errors import *  # noqa: F401,F403
from .exactmat import IntMatrix, det, kernel_primitive, nullspace_basis, principal_minor, rank
from .frontier import Frontier, minimal_elements
from .graphs import (
    GraphSpec,
    adjacency,
    canonical_form,
    conjecture_check,
    connected_graphs_upto,
    count_structures,
    family,
)
from .poly_enum import (
    PolyEnumReport,
    ReducibleBlock,
    frontier_at_level,
    lift_non_squarefree,
    min_dgeq0_2var,
    min_dgeq0_poly,
    reducible_combine,
)
from .polyring import SqFreePoly, charpoly_of_matrix, parse, variable_disjoint_factor
from .solutions import SolutionSet, brute_force_box, slice_solve, solve_slice

__version__ = "0.1.0"
