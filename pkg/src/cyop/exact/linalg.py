"""Exact Gaussian elimination over the rationals."""

from dataclasses import dataclass, field
from fractions import Fraction

from .rational import as_fraction


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`rational_linear_solve`.

    ``status`` is ``"unique"``, ``"family"`` or ``"inconsistent"``.  For a
    family the solutions are ``particular + sum t_i * nullspace[i]``.
    """

    status: str
    rank: int
    particular: tuple = None
    nullspace: tuple = field(default_factory=tuple)

    @property
    def solution(self):
        return self.particular if self.status != "inconsistent" else None


def row_reduce(rows, ncols):
    """Reduced row echelon form in place; returns the pivot columns."""
    pivots = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return pivots


def rational_linear_solve(matrix, rhs):
    """Solve ``matrix @ v = rhs`` exactly."""
    ncols = len(matrix[0]) if matrix else 0
    if len(rhs) != len(matrix):
        raise ValueError("rhs length does not match the number of rows")
    rows = [[as_fraction(v) for v in row] + [as_fraction(b)] for row, b in zip(matrix, rhs)]
    if any(len(row) != ncols + 1 for row in rows):
        raise ValueError("ragged matrix")
    pivots = row_reduce(rows, ncols)
    rank = len(pivots)
    for row in rows[rank:]:
        if row[ncols] != 0:
            return LinearSolution("inconsistent", rank)
    particular = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        particular[col] = rows[i][ncols]
    basis = _nullspace_from_rref(rows, pivots, ncols)
    status = "unique" if not basis else "family"
    return LinearSolution(status, rank, tuple(particular), basis)


def _nullspace_from_rref(rows, pivots, ncols):
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -rows[i][fc]
        basis.append(tuple(v))
    return tuple(basis)


def nullspace(matrix):
    """Basis of the right kernel of ``matrix``."""
    ncols = len(matrix[0]) if matrix else 0
    rows = [[as_fraction(v) for v in row] for row in matrix]
    pivots = row_reduce(rows, ncols)
    return _nullspace_from_rref(rows, pivots, ncols)


def rank(matrix):
    ncols = len(matrix[0]) if matrix else 0
    rows = [[as_fraction(v) for v in row] for row in matrix]
    return len(row_reduce(rows, ncols))
