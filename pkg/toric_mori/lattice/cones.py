"""
Exact rational linear algebra on lattice vectors.

Everything runs on fractions.Fraction; vectors come in as integer tuples.
"""
import logging
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence, Tuple

from toric_mori.errors import MathematicalError
from toric_mori.lattice.data_models import IntMatrix, LatticeVector
from toric_mori.lattice.normal_forms import smith_invariants

logger = logging.getLogger(__name__)


class LatticeError(MathematicalError):
    """Raised for a zero vector or dependent generators."""
    pass


def primitive_part(v: Sequence[int]) -> LatticeVector:
    """v divided by the gcd of its entries; sign is kept."""
    g = reduce(gcd, (abs(int(x)) for x in v), 0)
    if g == 0:
        raise LatticeError("zero vector has no primitive part")
    return tuple(int(x) // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    return reduce(gcd, (abs(int(x)) for x in v), 0) == 1


def _reduced_echelon(matrix: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Gauss-Jordan elimination in place; returns (matrix, pivot columns)."""
    rows = len(matrix)
    cols = len(matrix[0]) if matrix else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if matrix[i][c] != 0), None)
        if p is None:
            continue
        matrix[r], matrix[p] = matrix[p], matrix[r]
        pivot = matrix[r][c]
        if pivot != 1:
            matrix[r] = [x / pivot for x in matrix[r]]
        for i in range(rows):
            factor = matrix[i][c]
            if i != r and factor != 0:
                matrix[i] = [x - factor * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
    return matrix, pivots


def rational_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Dimension of the rational span."""
    if not vectors:
        return 0
    _, pivots = _reduced_echelon([[Fraction(x) for x in v] for v in vectors])
    return len(pivots)


def is_independent(vectors: Sequence[Sequence[int]]) -> bool:
    return rational_rank(vectors) == len(vectors)


def solve_rational(rows: Sequence[Sequence], rhs: Sequence, unknowns: int) -> Optional[List[Fraction]]:
    """Solve rows . x = rhs over Q.

    Free variables are set to zero. Returns None if the system is inconsistent.
    """
    augmented = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    if not augmented:
        return [Fraction(0)] * unknowns
    reduced, pivots = _reduced_echelon(augmented)
    if unknowns in pivots:
        return None
    solution = [Fraction(0)] * unknowns
    for i, c in enumerate(pivots):
        solution[c] = reduced[i][unknowns]
    return solution


def cone_solve(generators: Sequence[LatticeVector], v: Sequence[int]) -> Optional[List[Fraction]]:
    """Coefficients lambda >= 0 with v = sum lambda_i g_i, or None.

    Raises:
        LatticeError: If the generators are linearly dependent
    """
    if not is_independent(generators):
        raise LatticeError("not simplicial")
    n = len(v)
    # Equations are the coordinates; unknowns are the coefficients.
    rows = [[g[i] for g in generators] for i in range(n)]
    solution = solve_rational(rows, v, len(generators))
    if solution is None or any(x < 0 for x in solution):
        return None
    return solution


def multiplicity(generators: Sequence[LatticeVector]) -> int:
    """Index of the generated subgroup in its saturation; 1 iff smooth."""
    if not generators:
        return 1
    if not is_independent(generators):
        raise LatticeError("not simplicial")
    invariants = smith_invariants(IntMatrix.from_columns(generators, rows=len(generators[0])))
    return reduce(lambda x, y: x * y, invariants, 1)


def pairing(m: Sequence, v: Sequence) -> Fraction:
    """<m, v> for m in M (x) Q and v in N."""
    return sum((Fraction(x) * y for x, y in zip(m, v)), Fraction(0))
