from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

# A point of N = Z^n; plain tuples keep everything hashable.
LatticeVector = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix stored row-major.

    Rows and columns are explicit so that zero-row maps (to the rank-0
    lattice) keep their source dimension.
    """
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"IntMatrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> 'IntMatrix':
        rows = [tuple(int(x) for x in row) for row in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix without rows")
            cols = len(rows[0])
        if any(len(row) != cols for row in rows):
            raise ValueError("ragged matrix rows")
        return cls(len(rows), cols, tuple(x for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> 'IntMatrix':
        columns = [tuple(int(x) for x in c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ValueError("column length does not match row count")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def identity(cls, size: int) -> 'IntMatrix':
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], cols=size)

    @classmethod
    def from_array(cls, array: np.ndarray) -> 'IntMatrix':
        rows, cols = array.shape
        return cls(rows, cols, tuple(int(x) for x in array.reshape(-1)))

    def to_array(self) -> np.ndarray:
        """Object-dtype copy, so arithmetic stays in Python ints."""
        array = np.empty((self.rows, self.cols), dtype=object)
        for i in range(self.rows):
            for j in range(self.cols):
                array[i, j] = self.entries[i * self.cols + j]
        return array

    def row(self, i: int) -> LatticeVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> LatticeVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> Tuple[LatticeVector, ...]:
        return tuple(self.row(i) for i in range(self.rows))

    def apply(self, v: Sequence[int]) -> LatticeVector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} does not fit {self.rows}x{self.cols} matrix")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows))

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise ValueError("matrix shapes do not compose")
        return IntMatrix.from_rows(
            [[sum(self.row(i)[k] * other.column(j)[k] for k in range(self.cols))
              for j in range(other.cols)] for i in range(self.rows)],
            cols=other.cols,
        )

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == IntMatrix.identity(self.rows)


def vector(entries: Iterable[int]) -> LatticeVector:
    return tuple(int(x) for x in entries)
