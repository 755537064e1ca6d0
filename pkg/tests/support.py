"""Random instance generators and independent oracles for the test suite.

Everything takes an explicit random.Random so each test controls its seed.
The oracle here rebuilds the weak-inverse dual part from scratch by solving
the defining equations as one big real linear system; it shares only the
elimination primitives with the code under test, not the closed form.
"""

from __future__ import annotations

import random
from fractions import Fraction

from dualinv import (
    DualMatrix,
    RealMatrix,
    drazin,
    dual_block_diag,
    dual_inverse,
    dual_power,
    hstack,
    inverse,
    rank,
    solve,
    vstack,
)


def rand_fraction(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_matrix(rng, rows: int, cols: int, bound: int = 9) -> RealMatrix:
    return RealMatrix.from_rows(
        [[rand_fraction(rng, bound) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def rand_int_matrix(rng, rows: int, cols: int, bound: int = 3) -> RealMatrix:
    return RealMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def rand_low_rank(rng, n: int, r: int, bound: int = 2) -> RealMatrix:
    """n x n product of n x r and r x n integer factors; rank at most r."""
    return rand_int_matrix(rng, n, r, bound) @ rand_int_matrix(rng, r, n, bound)


def rand_square(rng, n: int, bound: int = 9) -> RealMatrix:
    """Random square standard part; half the draws are forced low-rank so
    index > 1 shows up often."""
    if n > 0 and rng.random() < 0.5:
        return rand_low_rank(rng, n, rng.randint(0, n - 1))
    return rand_matrix(rng, n, n, bound)


def rand_dual(rng, n: int, bound: int = 9) -> DualMatrix:
    return DualMatrix(rand_square(rng, n, bound), rand_matrix(rng, n, n, bound))


def rand_invertible(rng, n: int, bound: int = 3) -> RealMatrix:
    while True:
        m = rand_int_matrix(rng, n, bound=bound, cols=n)
        if rank(m) == n:
            return m


def rand_dual_invertible_std(rng, n: int, bound: int = 3) -> DualMatrix:
    return DualMatrix(rand_invertible(rng, n, bound), rand_int_matrix(rng, n, n, bound))


def rand_aind1(rng, n: int) -> DualMatrix:
    """Random dual matrix whose standard part has index 1.

    Built as P (diag(C, 0) + eps*E) P^(-1) with C invertible; the dual part
    is arbitrary, so the bordering blocks exercise the eps-similarity
    correction.
    """
    r = rng.randint(0, n)
    p = rand_invertible(rng, n)
    c = rand_invertible(rng, r)
    core = vstack(
        hstack(c, RealMatrix.zeros(r, n - r)),
        RealMatrix.zeros(n - r, n),
    )
    std = p @ core @ inverse(p)
    return DualMatrix(std, rand_int_matrix(rng, n, n))


def rand_nilpotent(rng, n: int) -> RealMatrix:
    """Strictly upper triangular after a random change of basis."""
    upper = RealMatrix.from_rows(
        [
            [rng.randint(-2, 2) if j > i else 0 for j in range(n)]
            for i in range(n)
        ],
        cols=n,
    )
    p = rand_invertible(rng, n)
    return p @ upper @ inverse(p)


def rand_dual_parameter(rng, width: int, bound: int = 5) -> DualMatrix:
    return DualMatrix(
        rand_int_matrix(rng, width, 1, bound), rand_int_matrix(rng, width, 1, bound)
    )


def kron(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    entries = []
    for i in range(a.rows):
        for bi in range(b.rows):
            entries.append(
                tuple(
                    a.entries[i][j] * b.entries[bi][bj]
                    for j in range(a.cols)
                    for bj in range(b.cols)
                )
            )
    return RealMatrix(a.rows * b.rows, a.cols * b.cols, tuple(entries))


def vec(m: RealMatrix) -> RealMatrix:
    """Column-stacking vectorization; vec(A X B) = (B^T kron A) vec(X)."""
    return RealMatrix(
        m.rows * m.cols,
        1,
        tuple((m.entries[i][j],) for j in range(m.cols) for i in range(m.rows)),
    )


def unvec(v: RealMatrix, rows: int, cols: int) -> RealMatrix:
    return RealMatrix(
        rows,
        cols,
        tuple(
            tuple(v.entries[j * rows + i][0] for j in range(cols))
            for i in range(rows)
        ),
    )


def weak_dual_part_oracle(a: DualMatrix, t: int) -> RealMatrix:
    """Unique S with X = M^D + eps*S solving the three defining equations.

    The equations, in dual parts with X = M^D fixed:

        M S M^t             = K - M M^D K - M0 M^D M^t
        M^D M S + S M M^D - S = -M^D M0 M^D
        M S - S M           = M^D M0 - M0 M^D

    stacked as one real system in vec(S) and solved exactly; the oracle
    asserts the solution is unique before returning it.
    """
    m, m0 = a.std, a.dual
    n = m.rows
    md = drazin(m)
    power_t, big_k = dual_power(a, t)
    mt = power_t.std
    eye = RealMatrix.identity(n)
    eye2 = RealMatrix.identity(n * n)
    rows_a = kron(mt.T, m)
    rhs_a = vec(big_k - m @ md @ big_k - m0 @ md @ mt)
    rows_b = kron(eye, md @ m) + kron((m @ md).T, eye) - eye2
    rhs_b = vec(-(md @ m0 @ md))
    rows_c = kron(eye, m) - kron(m.T, eye)
    rhs_c = vec(md @ m0 - m0 @ md)
    system = vstack(rows_a, rows_b, rows_c)
    rhs = vstack(rhs_a, rhs_b, rhs_c)
    outcome = solve(system, rhs)
    assert outcome is not None, "defining equations have no solution"
    particular, homogeneous = outcome
    assert homogeneous.cols == 0, "defining equations do not pin S uniquely"
    return unvec(particular, n, n)


def assemble_decomposition(
    phat: DualMatrix, chat: DualMatrix, nhat: DualMatrix
) -> DualMatrix:
    return phat @ dual_block_diag(chat, nhat) @ dual_inverse(phat)


def size_mix(rng, count: int, small=(1, 2, 3, 4), large=(5, 6), large_every: int = 25):
    """Yield ``count`` sizes, mostly small with a sprinkle of large ones."""
    for i in range(count):
        if large and i % large_every == large_every - 1:
            yield rng.choice(large)
        else:
            yield rng.choice(small)
