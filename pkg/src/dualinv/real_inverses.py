"""Classical generalized inverses of rational matrices.

The Drazin inverse is computed through the core-nilpotent decomposition
M = P diag(C, N) P^(-1) with C invertible (rank r = rank of M^k) and N
nilpotent, where k is the index of M.  The Moore-Penrose inverse comes from
a full-rank factorization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import DimensionError, IndexTooLarge, InternalInvariantViolation
from .matrices import RealMatrix, block_diag, hstack
from .elimination import inverse, nullspace, rank, rref


def index(m: RealMatrix) -> int:
    """Smallest positive k with rank(M^(k+1)) = rank(M^k).

    The index of a 0 x 0 matrix and of any invertible matrix is 1.
    """
    if not m.is_square:
        raise DimensionError("index of a non-square matrix")
    n = m.rows
    power = m
    r_prev = rank(power)
    for k in range(1, max(n, 1) + 1):
        power = power @ m
        r_next = rank(power)
        if r_next == r_prev:
            return k
        r_prev = r_next
    raise InternalInvariantViolation("rank sequence failed to stabilize by n")


@dataclass(frozen=True)
class CoreNilpotentDecomposition:
    """M = p @ block_diag(c, n) @ p^(-1).

    c is r x r invertible with r = rank(M^k); n is nilpotent (n^k = 0);
    k is the index of M.  p's first r columns span the column space of M^k,
    the rest its null space.
    """

    p: RealMatrix
    c: RealMatrix
    n: RealMatrix
    r: int
    k: int

    def assemble(self) -> RealMatrix:
        return self.p @ block_diag(self.c, self.n) @ inverse(self.p)


def core_nilpotent(m: RealMatrix) -> CoreNilpotentDecomposition:
    if not m.is_square:
        raise DimensionError("core-nilpotent form of a non-square matrix")
    size = m.rows
    k = index(m)
    mk = m**k
    _, pivots = rref(mk)
    r = len(pivots)
    p = hstack(mk.columns_at(pivots), nullspace(mk))
    p_inv = inverse(p)
    similar = p_inv @ m @ p
    c = similar.submatrix(0, r, 0, r)
    n = similar.submatrix(r, size, r, size)
    off_upper = similar.submatrix(0, r, r, size)
    off_lower = similar.submatrix(r, size, 0, r)
    if not (off_upper.is_zero and off_lower.is_zero):
        raise InternalInvariantViolation("similarity transform is not block diagonal")
    if rank(c) != r:
        raise InternalInvariantViolation("core block is singular")
    if not (n**k).is_zero:
        raise InternalInvariantViolation("nilpotent block survives power k")
    return CoreNilpotentDecomposition(p, c, n, r, k)


def drazin(m: RealMatrix) -> RealMatrix:
    """Drazin inverse via the core-nilpotent decomposition."""
    d = core_nilpotent(m)
    zero = RealMatrix.zeros(m.rows - d.r, m.rows - d.r)
    return d.p @ block_diag(inverse(d.c), zero) @ inverse(d.p)


def group_inverse(m: RealMatrix) -> RealMatrix:
    """Drazin inverse restricted to index-1 matrices."""
    k = index(m)
    if k != 1:
        raise IndexTooLarge(f"group inverse needs index 1, matrix has index {k}")
    return drazin(m)


def moore_penrose(m: RealMatrix) -> RealMatrix:
    """Moore-Penrose inverse via a full-rank factorization M = F G.

    F collects the pivot columns of M, G the nonzero rows of its reduced
    echelon form; then M+ = G^T (G G^T)^(-1) (F^T F)^(-1) F^T.
    """
    reduced, pivots = rref(m)
    r = len(pivots)
    f = m.columns_at(pivots)
    g = reduced.submatrix(0, r, 0, m.cols)
    return g.T @ inverse(g @ g.T) @ inverse(f.T @ f) @ f.T
