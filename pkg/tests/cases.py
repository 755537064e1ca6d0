"""Shared known-answer fixtures.

Four square dual matrices with pinned expected results, plus one right-hand
side for the solvers.  The names describe the behaviour: DDI_ABSENT has no
dual Drazin inverse (nonzero obstruction), DDI_PRESENT has one, and the two
2x2 cases split the same way for the group flavour.
"""

from fractions import Fraction as F

from dualinv import DualMatrix, RealMatrix

# 4x4, aind 2, dind 4; the dual Drazin inverse does not exist.
DDI_ABSENT = DualMatrix.of(
    [[1, 1, 0, 0], [0, 0, 1, 1], [0, 1, 0, 0], [1, 0, 0, 0]],
    [[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]],
)
DDI_ABSENT_AIND = 2
DDI_ABSENT_DIND = 4
DDI_ABSENT_ARANK = 3
DDI_ABSENT_DRAZIN = RealMatrix.from_rows(
    [[1, 1, -1, -1], [-1, -1, 2, 2], [2, 2, -3, -3], [-1, -1, 2, 2]]
)
# dual part of the square of DDI_ABSENT
DDI_ABSENT_POWER2_DUAL = RealMatrix.from_rows(
    [[2, 3, 1, 1], [2, 1, 2, 2], [2, 2, 0, 1], [1, 1, 2, 1]]
)
DDI_ABSENT_OBSTRUCTION = RealMatrix.from_rows(
    [[-1, 0, 1, 1], [1, 0, -1, -1], [-1, -1, 1, 2], [1, 1, -1, -2]]
)
DDI_ABSENT_WEAK_DUAL_PART = RealMatrix.from_rows(
    [[-4, -4, 6, 6], [3, 3, -6, -6], [-4, -4, 8, 8], [4, 4, -8, -8]]
)

# 4x4, aind 2 = dind; the dual Drazin inverse exists.
DDI_PRESENT = DualMatrix.of(
    [[4, 8, 12, 10], [2, 8, 10, 8], [0, -2, -2, 0], [-2, -4, -6, -6]],
    [[-4, 3, -3, 2], [5, 4, 0, 2], [-7, 7, 1, 0], [2, -3, 2, 1]],
)
DDI_PRESENT_AIND = 2
DDI_PRESENT_DRAZIN = RealMatrix.from_rows(
    [
        [F(3, 2), F(-1, 2), 1, 1],
        [1, F(1, 2), F(3, 2), F(3, 2)],
        [F(-1, 2), 0, F(-1, 2), F(-1, 2)],
        [F(-1, 2), 0, F(-1, 2), F(-1, 2)],
    ]
)
DDI_PRESENT_POWER2_DUAL = RealMatrix.from_rows(
    [
        [-54, 88, -4, 6],
        [2, 148, 108, 98],
        [-10, -24, -18, -18],
        [18, -62, -28, -28],
    ]
)
DDI_PRESENT_S = RealMatrix.from_rows(
    [
        [48, F(-55, 4), F(163, 4), F(213, 4)],
        [F(97, 4), F(-57, 2), -2, F(17, 4)],
        [-17, 19, F(1, 4), F(-7, 2)],
        [F(-27, 2), F(15, 4), F(-23, 2), F(-61, 4)],
    ]
)

# 2x2, aind 1; the dual group inverse does not exist.
DGI_ABSENT = DualMatrix.of([[1, 0], [0, 0]], [[0, 0], [1, 1]])
DGI_ABSENT_WITNESS = RealMatrix.from_rows([[0, 0], [0, 1]])
DGI_ABSENT_WEAK = DualMatrix.of([[1, 0], [0, 0]], [[0, 0], [1, 0]])

# 2x2, aind 1 = dind; the dual group inverse exists and equals its weak form.
DGI_PRESENT = DualMatrix.of([[1, 0], [0, 0]], [[0, 1], [1, 0]])
DGI_PRESENT_INVERSE = DualMatrix.of([[1, 0], [0, 0]], [[0, 1], [1, 0]])

# Right-hand side for DGI_ABSENT: the restricted system is solvable but not
# uniquely; both pinned solutions lie in the range of the matrix.
RHS_MIXED = DualMatrix.of([[1], [0]], [[0], [1]])
RHS_SOLUTION_A = DualMatrix.of([[1], [0]], [[0], [1]])
RHS_SOLUTION_B = DualMatrix.of([[1], [0]], [[0], [2]])
