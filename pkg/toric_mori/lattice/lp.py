"""
Exact feasibility linear programming.

A phase-one simplex over Fractions with Bland's rule decides whether a
target vector is a nonnegative combination of given columns. Cone
membership, relative interiors, strong convexity and redundant generators
are all reduced to that single question.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


def _subtract_scaled_row(row1: List[Fraction], row2: List[Fraction], k: Fraction):
    """row1 -= k*row2"""
    if k == 0:
        return
    for i, row2_i in enumerate(row2):
        if row2_i != 0:
            row1[i] -= k * row2_i


class FeasibilitySolver:
    """Phase-one simplex for {x >= 0 : A x = b}.

    Artificial variables start in the basis; their sum is minimized. The
    system is feasible iff that minimum is zero.
    """

    def __init__(self, columns: Sequence[Sequence], target: Sequence):
        self.num_vars = len(columns)
        self.num_rows = len(target)
        self.tableau: List[List[Fraction]] = []
        self.rhs: List[Fraction] = []
        for i in range(self.num_rows):
            row = [Fraction(col[i]) for col in columns]
            b = Fraction(target[i])
            if b < 0:
                row = [-x for x in row]
                b = -b
            artificial = [Fraction(int(i == k)) for k in range(self.num_rows)]
            self.tableau.append(row + artificial)
            self.rhs.append(b)
        self.basis = [self.num_vars + i for i in range(self.num_rows)]
        width = self.num_vars + self.num_rows
        # Reduced costs of the artificial objective.
        self.cost = [Fraction(0)] * width
        for row in self.tableau:
            for j in range(self.num_vars):
                self.cost[j] -= row[j]
        self.pivots = 0

    def _entering(self) -> Optional[int]:
        return next((j for j, c in enumerate(self.cost) if c < 0), None)

    def _leaving(self, j: int) -> Optional[int]:
        best = None
        for i, row in enumerate(self.tableau):
            if row[j] > 0:
                ratio = self.rhs[i] / row[j]
                if best is None or ratio < best[0] or (ratio == best[0] and self.basis[i] < self.basis[best[1]]):
                    best = (ratio, i)
        return None if best is None else best[1]

    def _pivot(self, i: int, j: int):
        pivot = self.tableau[i][j]
        if pivot != 1:
            self.tableau[i] = [x / pivot for x in self.tableau[i]]
            self.rhs[i] /= pivot
        for k, row in enumerate(self.tableau):
            if k != i and row[j] != 0:
                factor = row[j]
                _subtract_scaled_row(row, self.tableau[i], factor)
                self.rhs[k] -= factor * self.rhs[i]
        factor = self.cost[j]
        _subtract_scaled_row(self.cost, self.tableau[i], factor)
        self.basis[i] = j
        self.pivots += 1

    def solve(self) -> Optional[List[Fraction]]:
        while True:
            j = self._entering()
            if j is None:
                break
            i = self._leaving(j)
            if i is None:
                # Phase one is bounded below by zero.
                raise RuntimeError("unbounded phase-one simplex")
            self._pivot(i, j)

        for i, var in enumerate(self.basis):
            if var >= self.num_vars and self.rhs[i] != 0:
                return None
        solution = [Fraction(0)] * self.num_vars
        for i, var in enumerate(self.basis):
            if var < self.num_vars:
                solution[var] = self.rhs[i]
        return solution


def find_nonnegative_solution(columns: Sequence[Sequence], target: Sequence) -> Optional[List[Fraction]]:
    """lambda >= 0 with sum lambda_j columns[j] = target, or None."""
    if not columns:
        return [] if all(x == 0 for x in target) else None
    solver = FeasibilitySolver(columns, target)
    solution = solver.solve()
    logger.debug(f"feasibility LP: {len(columns)} columns, {solver.pivots} pivots, feasible={solution is not None}")
    return solution


def in_cone(generators: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    return find_nonnegative_solution(generators, v) is not None


def in_relative_interior(generators: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether v is a strictly positive combination of all generators.

    Solves t*v - sum mu_j g_j = sum g_j with t, mu >= 0; for a strongly
    convex cone any solution has t > 0.
    """
    if not generators:
        return all(x == 0 for x in v)
    total = [sum(g[i] for g in generators) for i in range(len(v))]
    columns = [list(v)] + [[-x for x in g] for g in generators]
    solution = find_nonnegative_solution(columns, total)
    return solution is not None and solution[0] > 0


def is_strongly_convex(generators: Sequence[Sequence[int]]) -> bool:
    """No nontrivial nonnegative combination of generators vanishes."""
    if not generators:
        return True
    columns = [list(g) + [1] for g in generators]
    target = [0] * len(generators[0]) + [1]
    return find_nonnegative_solution(columns, target) is None


def drop_redundant(generators: Sequence[Sequence[int]]) -> List[int]:
    """Indices of generators that are not in the cone of the others."""
    kept = list(range(len(generators)))
    for i in range(len(generators)):
        others = [generators[k] for k in kept if k != i]
        if in_cone(others, generators[i]):
            kept.remove(i)
    return kept


def face_generators(generators: Sequence[Sequence[int]], p: Sequence[int]) -> List[int]:
    """Generators of the smallest face of cone(generators) containing p.

    g_j lies in that face iff t*p - g_j is in the cone for some t > 0.
    Assumes p is in the cone and the cone is strongly convex.
    """
    columns = [list(p)] + [[-x for x in g] for g in generators]
    face = []
    for j, g in enumerate(generators):
        solution = find_nonnegative_solution(columns, g)
        if solution is not None and solution[0] > 0:
            face.append(j)
    return face
