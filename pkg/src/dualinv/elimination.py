"""Gauss-Jordan elimination over the rationals.

Pivots are chosen as the first nonzero entry in column order.  Magnitude
pivoting buys nothing in exact arithmetic and would cost determinism, which
the byte-stable command line output relies on.
"""

from __future__ import annotations

from fractions import Fraction

from .exceptions import DimensionError, NotInvertible
from .matrices import RealMatrix, hstack

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(m: RealMatrix) -> tuple[RealMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the tuple of pivot columns."""
    work = [list(row) for row in m.entries]
    pivots: list[int] = []
    pr = 0
    for pc in range(m.cols):
        if pr == m.rows:
            break
        hit = next((i for i in range(pr, m.rows) if work[i][pc] != 0), None)
        if hit is None:
            continue
        work[pr], work[hit] = work[hit], work[pr]
        inv = ONE / work[pr][pc]
        work[pr] = [x * inv for x in work[pr]]
        for i in range(m.rows):
            if i != pr and work[i][pc] != 0:
                f = work[i][pc]
                row_pr = work[pr]
                work[i] = [a - f * b for a, b in zip(work[i], row_pr)]
        pivots.append(pc)
        pr += 1
    return RealMatrix(m.rows, m.cols, tuple(tuple(r) for r in work)), tuple(pivots)


def rank(m: RealMatrix) -> int:
    return len(rref(m)[1])


def nullspace(m: RealMatrix) -> RealMatrix:
    """Basis of the right null space, one column per free variable.

    Free variables are set to 1 one at a time (in increasing column order),
    bound variables read off the reduced form.  Returns a cols x nullity
    matrix; nullity 0 gives a cols x 0 matrix.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    columns = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -reduced.entries[i][f]
        columns.append(v)
    entries = tuple(tuple(col[i] for col in columns) for i in range(m.cols))
    return RealMatrix(m.cols, len(free), entries)


def solve(a: RealMatrix, b: RealMatrix) -> tuple[RealMatrix, RealMatrix] | None:
    """General solution of a x = b, or None when inconsistent.

    b may have several columns; the particular solution then has the same
    column count.  Returns (particular, nullspace basis of a).
    """
    if a.rows != b.rows:
        raise DimensionError(f"system {a.shape} does not accept rhs {b.shape}")
    reduced, pivots = rref(hstack(a, b))
    if any(pc >= a.cols for pc in pivots):
        return None
    particular_rows = [[ZERO] * b.cols for _ in range(a.cols)]
    for i, pc in enumerate(pivots):
        particular_rows[pc] = list(reduced.entries[i][a.cols:])
    particular = RealMatrix(a.cols, b.cols, tuple(tuple(r) for r in particular_rows))
    return particular, nullspace(a)


def inverse(m: RealMatrix) -> RealMatrix:
    """Inverse of a square matrix; raises NotInvertible when singular."""
    if not m.is_square:
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    if n == 0:
        return m
    reduced, pivots = rref(hstack(m, RealMatrix.identity(n)))
    if len([pc for pc in pivots if pc < n]) < n:
        raise NotInvertible(f"matrix of rank {rank(m)} is singular")
    return reduced.submatrix(0, n, n, 2 * n)


def column_space_contains(span: RealMatrix, vectors: RealMatrix) -> bool:
    """True when every column of ``vectors`` lies in the column space of ``span``."""
    if span.rows != vectors.rows:
        raise DimensionError("column space test needs equal row counts")
    return rank(hstack(span, vectors)) == rank(span)
