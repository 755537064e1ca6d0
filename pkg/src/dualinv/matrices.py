"""Exact matrices over the rationals and their dual-number extension.

A dual number is a + eps*a0 where eps*eps = 0.  A dual matrix is a pair of
rational matrices (standard part, dual part) multiplied with the same rule:

    (A + eps*A0)(B + eps*B0) = AB + eps*(A*B0 + A0*B)

Everything here is immutable and exact; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DimensionError, InternalInvariantViolation

ZERO = Fraction(0)
ONE = Fraction(1)


def _freeze(entries) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in entries)


@dataclass(frozen=True)
class RealMatrix:
    """Immutable rational matrix.

    ``entries`` is a tuple of row tuples of Fraction.  Use ``from_rows`` for
    anything hand-written; the raw constructor trusts its input types and
    only validates the shape.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows:
            raise DimensionError("row count does not match entry grid")
        if any(len(row) != self.cols for row in self.entries):
            raise DimensionError("ragged entry grid")

    @classmethod
    def from_rows(cls, rows_data, cols: int | None = None) -> "RealMatrix":
        entries = _freeze(rows_data)
        r = len(entries)
        if r == 0:
            if cols is None:
                cols = 0
            return cls(0, cols, ())
        c = len(entries[0])
        if cols is not None and cols != c:
            raise DimensionError("declared column count does not match rows")
        return cls(r, c, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RealMatrix":
        return cls(rows, cols, tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RealMatrix":
        return cls(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def __add__(self, other: "RealMatrix") -> "RealMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return RealMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "RealMatrix") -> "RealMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return RealMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __neg__(self) -> "RealMatrix":
        return RealMatrix(
            self.rows, self.cols, tuple(tuple(-a for a in row) for row in self.entries)
        )

    def __mul__(self, scalar) -> "RealMatrix":
        s = Fraction(scalar)
        return RealMatrix(
            self.rows, self.cols, tuple(tuple(a * s for a in row) for row in self.entries)
        )

    __rmul__ = __mul__

    def __matmul__(self, other: "RealMatrix") -> "RealMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        # inner dimension 0 would leave ordinary ints from sum(); special-case it
        if self.cols == 0:
            return RealMatrix.zeros(self.rows, other.cols)
        bt = tuple(zip(*other.entries))
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.entries
        )
        return RealMatrix(self.rows, other.cols, out)

    def __pow__(self, k: int) -> "RealMatrix":
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power is not defined here")
        result = RealMatrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    @property
    def T(self) -> "RealMatrix":
        return RealMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else tuple(() for _ in range(self.cols)))

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "RealMatrix":
        """Rows r0..r1-1 and columns c0..c1-1."""
        return RealMatrix(
            r1 - r0, c1 - c0, tuple(row[c0:c1] for row in self.entries[r0:r1])
        )

    def column(self, j: int) -> "RealMatrix":
        return self.submatrix(0, self.rows, j, j + 1)

    def columns_at(self, indices) -> "RealMatrix":
        idx = tuple(indices)
        return RealMatrix(
            self.rows, len(idx), tuple(tuple(row[j] for j in idx) for row in self.entries)
        )

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"RealMatrix([{body}])"


def hstack(*mats: RealMatrix) -> RealMatrix:
    mats = tuple(m for m in mats)
    if not mats:
        raise DimensionError("hstack of nothing")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise DimensionError("hstack row mismatch")
    entries = tuple(
        tuple(x for m in mats for x in m.entries[i]) for i in range(rows)
    )
    return RealMatrix(rows, sum(m.cols for m in mats), entries)


def vstack(*mats: RealMatrix) -> RealMatrix:
    mats = tuple(m for m in mats)
    if not mats:
        raise DimensionError("vstack of nothing")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise DimensionError("vstack column mismatch")
    entries = tuple(row for m in mats for row in m.entries)
    return RealMatrix(sum(m.rows for m in mats), cols, entries)


def block2x2(a: RealMatrix, b: RealMatrix, c: RealMatrix, d: RealMatrix) -> RealMatrix:
    """[[a, b], [c, d]] with conforming shapes."""
    return vstack(hstack(a, b), hstack(c, d))


def block_diag(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    return block2x2(
        a, RealMatrix.zeros(a.rows, b.cols), RealMatrix.zeros(b.rows, a.cols), b
    )


@dataclass(frozen=True)
class DualScalar:
    """Dual number a + eps*a0 over the rationals."""

    std: Fraction
    dual: Fraction

    @classmethod
    def of(cls, std, dual=0) -> "DualScalar":
        return cls(Fraction(std), Fraction(dual))

    def __add__(self, other: "DualScalar") -> "DualScalar":
        return DualScalar(self.std + other.std, self.dual + other.dual)

    def __sub__(self, other: "DualScalar") -> "DualScalar":
        return DualScalar(self.std - other.std, self.dual - other.dual)

    def __neg__(self) -> "DualScalar":
        return DualScalar(-self.std, -self.dual)

    def __mul__(self, other: "DualScalar") -> "DualScalar":
        return DualScalar(
            self.std * other.std, self.std * other.dual + self.dual * other.std
        )

    def __truediv__(self, other: "DualScalar") -> "DualScalar":
        if other.std == 0:
            raise ZeroDivisionError("dual number with zero standard part has no inverse")
        q = self.std / other.std
        return DualScalar(q, (self.dual - q * other.dual) / other.std)

    def inverse(self) -> "DualScalar":
        return DualScalar.of(1) / self

    def __repr__(self) -> str:
        return f"DualScalar({self.std} + {self.dual}*eps)"


@dataclass(frozen=True)
class DualMatrix:
    """Dual matrix std + eps*dual; both parts share one shape."""

    std: RealMatrix
    dual: RealMatrix

    def __post_init__(self):
        if self.std.shape != self.dual.shape:
            raise DimensionError("standard and dual parts differ in shape")

    @classmethod
    def of(cls, std_rows, dual_rows) -> "DualMatrix":
        return cls(RealMatrix.from_rows(std_rows), RealMatrix.from_rows(dual_rows))

    @classmethod
    def from_real(cls, m: RealMatrix) -> "DualMatrix":
        return cls(m, RealMatrix.zeros(m.rows, m.cols))

    @classmethod
    def eps(cls, m: RealMatrix) -> "DualMatrix":
        return cls(RealMatrix.zeros(m.rows, m.cols), m)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DualMatrix":
        z = RealMatrix.zeros(rows, cols)
        return cls(z, z)

    @classmethod
    def identity(cls, n: int) -> "DualMatrix":
        return cls(RealMatrix.identity(n), RealMatrix.zeros(n, n))

    @property
    def shape(self) -> tuple[int, int]:
        return self.std.shape

    @property
    def rows(self) -> int:
        return self.std.rows

    @property
    def cols(self) -> int:
        return self.std.cols

    @property
    def is_zero(self) -> bool:
        return self.std.is_zero and self.dual.is_zero

    def entry(self, i: int, j: int) -> DualScalar:
        return DualScalar(self.std[i, j], self.dual[i, j])

    def __add__(self, other: "DualMatrix") -> "DualMatrix":
        return DualMatrix(self.std + other.std, self.dual + other.dual)

    def __sub__(self, other: "DualMatrix") -> "DualMatrix":
        return DualMatrix(self.std - other.std, self.dual - other.dual)

    def __neg__(self) -> "DualMatrix":
        return DualMatrix(-self.std, -self.dual)

    def __matmul__(self, other: "DualMatrix") -> "DualMatrix":
        return DualMatrix(
            self.std @ other.std,
            self.std @ other.dual + self.dual @ other.std,
        )

    def scale(self, scalar: DualScalar) -> "DualMatrix":
        return DualMatrix(
            self.std * scalar.std,
            self.std * scalar.dual + self.dual * scalar.std,
        )

    @property
    def T(self) -> "DualMatrix":
        return DualMatrix(self.std.T, self.dual.T)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "DualMatrix":
        return DualMatrix(
            self.std.submatrix(r0, r1, c0, c1), self.dual.submatrix(r0, r1, c0, c1)
        )

    def __repr__(self) -> str:
        return f"DualMatrix(std={self.std!r}, dual={self.dual!r})"


def dual_hstack(*mats: DualMatrix) -> DualMatrix:
    return DualMatrix(hstack(*(m.std for m in mats)), hstack(*(m.dual for m in mats)))


def dual_vstack(*mats: DualMatrix) -> DualMatrix:
    return DualMatrix(vstack(*(m.std for m in mats)), vstack(*(m.dual for m in mats)))


def dual_block_diag(a: DualMatrix, b: DualMatrix) -> DualMatrix:
    return DualMatrix(block_diag(a.std, b.std), block_diag(a.dual, b.dual))


def dual_power(a: DualMatrix, t: int) -> tuple[DualMatrix, RealMatrix]:
    """t-th power of a square dual matrix, plus its dual part K.

    The power is computed by repeated multiplication and re-derived from the
    closed form

        (M + eps*M0)^t = M^t + eps * sum_{i=1..t} M^(t-i) M0 M^(i-1);

    the two results are compared entry for entry before returning.  K is the
    dual part.  t must be at least 1.
    """
    if not a.std.is_square:
        raise DimensionError("power of a non-square dual matrix")
    if t < 1:
        raise ValueError("dual power needs t >= 1")
    product = a
    for _ in range(t - 1):
        product = product @ a
    m, m0 = a.std, a.dual
    powers = [RealMatrix.identity(m.rows)]
    for _ in range(t):
        powers.append(powers[-1] @ m)
    k = RealMatrix.zeros(m.rows, m.cols)
    for i in range(1, t + 1):
        k = k + powers[t - i] @ m0 @ powers[i - 1]
    if product.std != powers[t] or product.dual != k:
        raise InternalInvariantViolation(
            "repeated product and closed-form power disagree"
        )
    return product, k
