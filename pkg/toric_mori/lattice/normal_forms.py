"""
Smith and Hermite normal forms over Z.

Matrices are handled as numpy object arrays so entries stay arbitrary
precision Python ints. Row operations are mirrored on U and column
operations on V, keeping S = U @ M @ V at every step.
"""
import logging
from typing import List, Sequence, Tuple

import numpy as np

from toric_mori.lattice.data_models import IntMatrix, LatticeVector

logger = logging.getLogger(__name__)


def _identity(size: int) -> np.ndarray:
    eye = np.zeros((size, size), dtype=object)
    for i in range(size):
        eye[i, i] = 1
    return eye


def _swap_rows(A: np.ndarray, i: int, j: int):
    if i != j:
        A[[i, j], :] = A[[j, i], :]


def _swap_cols(A: np.ndarray, i: int, j: int):
    if i != j:
        A[:, [i, j]] = A[:, [j, i]]


def _smallest_entry(A: np.ndarray, t: int):
    """Position of the smallest nonzero |entry| in A[t:, t:], or None."""
    best = None
    rows, cols = A.shape
    for i in range(t, rows):
        for j in range(t, cols):
            if A[i, j] != 0 and (best is None or abs(A[i, j]) < abs(A[best])):
                best = (i, j)
    return best


def smith_normal_form(matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms.

    Returns:
        (U, S, V) with U, V unimodular, S = U @ M @ V diagonal, diagonal
        entries nonnegative and each dividing the next.
    """
    A = matrix.to_array()
    rows, cols = A.shape
    U = _identity(rows)
    V = _identity(cols)

    for t in range(min(rows, cols)):
        pos = _smallest_entry(A, t)
        if pos is None:
            break
        _swap_rows(A, t, pos[0])
        _swap_rows(U, t, pos[0])
        _swap_cols(A, t, pos[1])
        _swap_cols(V, t, pos[1])

        while True:
            pivot = A[t, t]
            for i in range(t + 1, rows):
                q = A[i, t] // pivot
                if q:
                    A[i, :] = A[i, :] - q * A[t, :]
                    U[i, :] = U[i, :] - q * U[t, :]
            for j in range(t + 1, cols):
                q = A[t, j] // pivot
                if q:
                    A[:, j] = A[:, j] - q * A[:, t]
                    V[:, j] = V[:, j] - q * V[:, t]

            remainders = [(i, t) for i in range(t + 1, rows) if A[i, t] != 0]
            remainders += [(t, j) for j in range(t + 1, cols) if A[t, j] != 0]
            if remainders:
                i, j = min(remainders, key=lambda p: abs(A[p]))
                if j == t:
                    _swap_rows(A, t, i)
                    _swap_rows(U, t, i)
                else:
                    _swap_cols(A, t, j)
                    _swap_cols(V, t, j)
                continue

            # Divisibility: fold an offending row into the pivot row and redo.
            offending = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i, j] % pivot != 0),
                None,
            )
            if offending is None:
                break
            A[t, :] = A[t, :] + A[offending, :]
            U[t, :] = U[t, :] + U[offending, :]

        if A[t, t] < 0:
            A[t, :] = -A[t, :]
            U[t, :] = -U[t, :]

    return IntMatrix.from_array(U), IntMatrix.from_array(A), IntMatrix.from_array(V)


def smith_invariants(matrix: IntMatrix) -> List[int]:
    """Nonzero diagonal entries of the Smith form."""
    _, S, _ = smith_normal_form(matrix)
    return [S.row(i)[i] for i in range(min(S.rows, S.cols)) if S.row(i)[i] != 0]


def hermite_normal_form(rows: Sequence[Sequence[int]], cols: int) -> List[LatticeVector]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive, entries above a pivot lie in [0, pivot), zero rows
    are dropped. Two generating sets of the same lattice give the same output.
    """
    if not rows:
        return []
    A = IntMatrix.from_rows(rows, cols=cols).to_array()
    k = A.shape[0]
    r = 0
    for c in range(cols):
        if r == k:
            break
        while True:
            nonzero = [i for i in range(r, k) if A[i, c] != 0]
            if not nonzero:
                break
            p = min(nonzero, key=lambda i: abs(A[i, c]))
            _swap_rows(A, r, p)
            clear = True
            for i in range(r + 1, k):
                q = A[i, c] // A[r, c]
                if q:
                    A[i, :] = A[i, :] - q * A[r, :]
                if A[i, c] != 0:
                    clear = False
            if clear:
                break
        if A[r, c] == 0:
            continue
        if A[r, c] < 0:
            A[r, :] = -A[r, :]
        for i in range(r):
            q = A[i, c] // A[r, c]
            if q:
                A[i, :] = A[i, :] - q * A[r, :]
        r += 1
    return [tuple(int(x) for x in A[i, :]) for i in range(r)]


def integer_kernel(matrix: IntMatrix) -> List[LatticeVector]:
    """Hermite-reduced lattice basis of {z in Z^cols : M z = 0}."""
    _, S, V = smith_normal_form(matrix)
    rank = sum(1 for i in range(min(S.rows, S.cols)) if S.row(i)[i] != 0)
    basis = [V.column(j) for j in range(rank, matrix.cols)]
    return hermite_normal_form(basis, matrix.cols)


def quotient_map(vectors: Sequence[LatticeVector], rank: int) -> Tuple[IntMatrix, int]:
    """Surjection Z^rank -> Z^rank' whose kernel is the saturation of the span.

    Torsion of the literal quotient is discarded.
    """
    if not vectors:
        return IntMatrix.identity(rank), rank
    U, S, _ = smith_normal_form(IntMatrix.from_columns(vectors, rows=rank))
    span_rank = sum(1 for i in range(min(S.rows, S.cols)) if S.row(i)[i] != 0)
    torsion = [S.row(i)[i] for i in range(span_rank) if S.row(i)[i] != 1]
    if torsion:
        logger.debug(f"quotient discards torsion with invariants {torsion}")
    new_rank = rank - span_rank
    rows = hermite_normal_form([U.row(i) for i in range(span_rank, rank)], rank)
    return IntMatrix.from_rows(rows, cols=rank), new_rank
