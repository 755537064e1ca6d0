"""Solvers for A^ x^ = b^ when the standard part has index 1.

Write W for the weak dual group inverse of A^ and A_sharp for the group
inverse of W (so A_sharp = phat diag(chat, 0) phat^(-1)).  The unrestricted
equation is consistent exactly when

    (a) the standard part of (I - W A^) b^ vanishes, and
    (b) (I - W A^) b^ lies in the range of A^ - A_sharp.

The restricted equation (solutions constrained to the range of A^) needs the
stronger condition (I - W A^) b^ = 0.  Conditions are tested in that order
and reported through distinct errors.

One reading note for the particular solution: with P^^(-1) b^ split into
(b1; b2), the bottom block of the particular solution is N+ applied to the
dual-part coefficient of b2 (condition (a) forces b2's standard part to
zero).  Applying N+ to b2 as a dual vector would not solve the bottom
equations: eps*N times an eps-multiple dies, so the bottom unknown must be
appreciable.
"""

from __future__ import annotations

from .exceptions import (
    DimensionError,
    Inconsistent,
    InconsistentDualPart,
    InconsistentStandardPart,
    IndexTooLarge,
    InternalInvariantViolation,
)
from .matrices import DualMatrix, RealMatrix, dual_block_diag, dual_vstack
from .real_inverses import moore_penrose
from .dual_linear import (
    DualAffineSet,
    ParametricDualSolutions,
    dual_inverse,
    in_range,
)
from .indices import index_profile
from .block_decomposition import DualBlockDecompositionInd1, block_diagonalize_ind1


def _check_column(a: DualMatrix, b: DualMatrix) -> None:
    if not a.std.is_square:
        raise DimensionError("coefficient matrix must be square")
    if b.cols != 1 or b.rows != a.rows:
        raise DimensionError(f"rhs {b.shape} does not fit system {a.shape}")


def _solver_pieces(
    d: DualBlockDecompositionInd1, n: int
) -> tuple[DualMatrix, DualMatrix]:
    """(weak group inverse W, complement A^ - A_sharp) from one decomposition."""
    zero = DualMatrix.zeros(n - d.r, n - d.r)
    phat_inv = dual_inverse(d.phat)
    w = d.phat @ dual_block_diag(dual_inverse(d.chat), zero) @ phat_inv
    complement = (
        d.phat
        @ dual_block_diag(DualMatrix.zeros(d.r, d.r), DualMatrix.eps(d.nblock))
        @ phat_inv
    )
    return w, complement


def solve_general(a: DualMatrix, b: DualMatrix) -> ParametricDualSolutions:
    """All solutions of A^ x^ = b^ for aind(A^) = 1.

    Returns a particular solution plus two generators: the projector
    generator ((I - N+ N) on the bottom block) and the eps generator (eps
    times the identity on the bottom block), both taking dual parameters.
    Raises InconsistentStandardPart when (a) fails, InconsistentDualPart
    when (b) fails, IndexTooLarge when aind > 1.
    """
    _check_column(a, b)
    d = block_diagonalize_ind1(a)
    n, r = a.rows, d.r
    w, complement = _solver_pieces(d, n)
    residual = (DualMatrix.identity(n) - w @ a) @ b
    if not residual.std.is_zero:
        raise InconsistentStandardPart("standard part of the residual is nonzero")
    if not in_range(complement, residual):
        raise InconsistentDualPart("residual lies outside the reachable dual range")
    pb = dual_inverse(d.phat) @ b
    b1 = pb.submatrix(0, r, 0, 1)
    b2 = pb.submatrix(r, n, 0, 1)
    if not b2.std.is_zero:
        raise InternalInvariantViolation("bottom rhs kept a standard part")
    n_pinv = moore_penrose(d.nblock)
    top = dual_inverse(d.chat) @ b1
    bottom = DualMatrix.from_real(n_pinv @ b2.dual)
    particular = d.phat @ dual_vstack(top, bottom)
    generators = []
    if n > r:
        zero_top = DualMatrix.zeros(r, n - r)
        projector = RealMatrix.identity(n - r) - n_pinv @ d.nblock
        generators.append(
            d.phat @ dual_vstack(zero_top, DualMatrix.from_real(projector))
        )
        generators.append(
            d.phat @ dual_vstack(zero_top, DualMatrix.eps(RealMatrix.identity(n - r)))
        )
    return ParametricDualSolutions(particular, tuple(generators))


def solve_restricted(a: DualMatrix, b: DualMatrix) -> ParametricDualSolutions:
    """Solutions of A^ x^ = b^ lying in the range of A^, for aind(A^) = 1.

    Consistent exactly when (I - W A^) b^ = 0; then the set is
    W b^ + (A^ - A_sharp) y^ over dual columns y^.  Raises Inconsistent or
    IndexTooLarge.
    """
    _check_column(a, b)
    d = block_diagonalize_ind1(a)
    w, complement = _solver_pieces(d, a.rows)
    residual = (DualMatrix.identity(a.rows) - w @ a) @ b
    if not residual.is_zero:
        raise Inconsistent("restricted system rejects this right-hand side")
    return ParametricDualSolutions(w @ b, (complement,))


def solve_ind1_corollaries(
    a: DualMatrix, b: DualMatrix, restricted: bool
) -> ParametricDualSolutions:
    """Specialized solver for dind(A^) = 1, where the group-type dual
    inverse G of A^ exists outright.

    Unrestricted: particular G b^ with the single generator I - G A^.
    Restricted: the unique solution G b^ with no generators.  Both outcomes
    are checked against the general solvers before returning.  Raises
    IndexTooLarge when dind > 1 and Inconsistent when (I - G A^) b^ != 0.
    """
    _check_column(a, b)
    profile = index_profile(a)
    if profile.dind != 1:
        raise IndexTooLarge(f"corollary solver needs dind 1, got {profile.dind}")
    d = block_diagonalize_ind1(a)
    g, _ = _solver_pieces(d, a.rows)
    residual = (DualMatrix.identity(a.rows) - g @ a) @ b
    if not residual.is_zero:
        raise Inconsistent("system rejects this right-hand side")
    particular = g @ b
    if restricted:
        result = ParametricDualSolutions(particular, ())
        reference = solve_restricted(a, b)
        if reference.particular != particular:
            raise InternalInvariantViolation("restricted particular mismatch")
    else:
        result = ParametricDualSolutions(
            particular, (DualMatrix.identity(a.rows) - g @ a,)
        )
        reference = solve_general(a, b)
    same = DualAffineSet.from_solutions(result).same_set(
        DualAffineSet.from_solutions(reference)
    )
    if not same:
        raise InternalInvariantViolation("corollary set differs from general set")
    return result
