from .data_models import IntMatrix, LatticeVector, vector
from .normal_forms import (
    smith_normal_form, smith_invariants, hermite_normal_form, integer_kernel, quotient_map,
)
from .cones import (
    LatticeError, primitive_part, is_primitive, rational_rank, is_independent,
    solve_rational, cone_solve, multiplicity, pairing,
)
from .lp import (
    find_nonnegative_solution, in_cone, in_relative_interior, is_strongly_convex,
    drop_redundant, face_generators,
)

__all__ = [
    'IntMatrix', 'LatticeVector', 'vector',
    'smith_normal_form', 'smith_invariants', 'hermite_normal_form', 'integer_kernel', 'quotient_map',
    'LatticeError', 'primitive_part', 'is_primitive', 'rational_rank', 'is_independent',
    'solve_rational', 'cone_solve', 'multiplicity', 'pairing',
    'find_nonnegative_solution', 'in_cone', 'in_relative_interior', 'is_strongly_convex',
    'drop_redundant', 'face_generators',
]
