"""Rank and index invariants of dual matrices.

The appreciable rank of M + eps*M0 is rank(M).  The dual rank adds the
defect carried by the dual part:

    drank = rank([[M0, M], [M, 0]]) - rank(M)

which is also rank of the doubled form minus rank(M), since swapping block
rows turns one bordered matrix into the other.  The appreciable index is the
index of M; the dual index is the smallest power t at which the two ranks of
A^t agree.  That t always lands in [aind, 2*aind].
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import DimensionError, InternalInvariantViolation
from .matrices import DualMatrix, RealMatrix, block2x2, dual_power
from .elimination import rank
from .real_inverses import index


def rank_profile(a: DualMatrix) -> tuple[int, int]:
    """(appreciable rank, dual rank) of a dual matrix of any shape."""
    arank = rank(a.std)
    bordered = block2x2(
        a.dual, a.std, a.std, RealMatrix.zeros(a.rows, a.cols)
    )
    drank = rank(bordered) - arank
    if drank < arank:
        raise InternalInvariantViolation("dual rank fell below appreciable rank")
    return arank, drank


@dataclass(frozen=True)
class DualIndexProfile:
    arank: int
    drank: int
    aind: int
    dind: int

    def __post_init__(self):
        if self.drank < self.arank:
            raise InternalInvariantViolation("dual rank below appreciable rank")
        if not (self.aind <= self.dind <= 2 * self.aind):
            raise InternalInvariantViolation("dual index outside [aind, 2*aind]")


def index_profile(a: DualMatrix) -> DualIndexProfile:
    """All four invariants of a square dual matrix."""
    if not a.std.is_square:
        raise DimensionError("index of a non-square dual matrix")
    arank, drank = rank_profile(a)
    aind = index(a.std)
    for t in range(aind, 2 * aind + 1):
        power, _ = dual_power(a, t)
        ar_t, dr_t = rank_profile(power)
        if ar_t == dr_t:
            return DualIndexProfile(arank, drank, aind, t)
    raise InternalInvariantViolation("no dual index found in [aind, 2*aind]")
