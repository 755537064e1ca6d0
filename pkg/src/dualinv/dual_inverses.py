"""Drazin- and group-type inverses of dual matrices.

For A^ = M + eps*M0 with aind(M) = k, the dual Drazin inverse (DDI) exists
exactly when the obstruction

    (I - M M^D) K (I - M M^D),   K = dual part of A^^k,

vanishes, which is also equivalent to dind(A^) = aind(A^) and to the two
ranks of A^^k agreeing.  Whether or not that happens, the weak dual Drazin
inverse (WDDI) always exists:

    WDDI(A^) = M^D + eps*S,
    S = (M^D)^2 (sum_{i<t} (M^D)^i M0 M^i) (I - M M^D)
        + (I - M M^D) (sum_{i<t} M^i M0 (M^D)^i) (M^D)^2
        - M^D M0 M^D,

with t = dind(A^).  When the DDI exists the same S with t replaced by
k = aind gives it, and the two agree because terms with i >= k die against
the projector.  The group flavour (DGI / WDGI) is the index-1 case, with the
WDGI using the group inverse in place of M^D and single first terms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import DoesNotExist, IndexTooLarge
from .exceptions import DimensionError, InternalInvariantViolation
from .matrices import DualMatrix, RealMatrix, dual_power
from .indices import index_profile, rank_profile
from .real_inverses import drazin, group_inverse, index, moore_penrose


@dataclass(frozen=True)
class ExistenceProfile:
    """Three equivalent answers to "does the dual Drazin inverse exist?".

    ddi_exists states that the obstruction matrix vanishes; index_equality
    states dind == aind; rank_equality states that the two ranks of A^^aind
    agree.  The three characterizations are equivalent, so the constructor
    insists they match.  The obstruction matrix is kept as the witness.
    """

    ddi_exists: bool
    index_equality: bool
    rank_equality: bool
    obstruction: RealMatrix

    def __post_init__(self):
        if not (
            self.ddi_exists
            == self.obstruction.is_zero
            == self.index_equality
            == self.rank_equality
        ):
            raise InternalInvariantViolation("existence characterizations disagree")


def _square(a: DualMatrix) -> None:
    if not a.std.is_square:
        raise DimensionError("operation needs a square dual matrix")


def ddi_obstruction(a: DualMatrix) -> RealMatrix:
    """(I - M M^D) K (I - M M^D) with K the dual part of A^^aind."""
    _square(a)
    k = index(a.std)
    _, kd = dual_power(a, k)
    proj = RealMatrix.identity(a.rows) - a.std @ drazin(a.std)
    return proj @ kd @ proj


def existence_profile(a: DualMatrix) -> ExistenceProfile:
    _square(a)
    obstruction = ddi_obstruction(a)
    profile = index_profile(a)
    power_k, _ = dual_power(a, profile.aind)
    ar, dr = rank_profile(power_k)
    return ExistenceProfile(
        ddi_exists=obstruction.is_zero,
        index_equality=profile.dind == profile.aind,
        rank_equality=ar == dr,
        obstruction=obstruction,
    )


def _weak_drazin_dual_part(m: RealMatrix, m0: RealMatrix, terms: int) -> RealMatrix:
    """Dual part of the WDDI with the sums truncated after ``terms`` terms."""
    md = drazin(m)
    eye = RealMatrix.identity(m.rows)
    proj = eye - m @ md
    md2 = md @ md
    left = RealMatrix.zeros(m.rows, m.cols)
    right = RealMatrix.zeros(m.rows, m.cols)
    md_i = eye
    m_i = eye
    for _ in range(terms):
        left = left + md_i @ m0 @ m_i
        right = right + m_i @ m0 @ md_i
        md_i = md_i @ md
        m_i = m_i @ m
    return md2 @ left @ proj + proj @ right @ md2 - md @ m0 @ md


def wddi(a: DualMatrix) -> DualMatrix:
    """Weak dual Drazin inverse; always exists for square input."""
    _square(a)
    t = index_profile(a).dind
    return DualMatrix(drazin(a.std), _weak_drazin_dual_part(a.std, a.dual, t))


def ddi(a: DualMatrix) -> DualMatrix:
    """Dual Drazin inverse; DoesNotExist carries the obstruction witness."""
    _square(a)
    obstruction = ddi_obstruction(a)
    if not obstruction.is_zero:
        raise DoesNotExist("dual Drazin inverse does not exist", obstruction)
    k = index(a.std)
    return DualMatrix(drazin(a.std), _weak_drazin_dual_part(a.std, a.dual, k))


def wdgi(a: DualMatrix) -> DualMatrix:
    """Weak dual group inverse; needs aind = 1 but always exists then.

    Dual part: (M#)^2 M0 (I - M M#) + (I - M M#) M0 (M#)^2 - M# M0 M#.
    """
    _square(a)
    g = group_inverse(a.std)
    eye = RealMatrix.identity(a.rows)
    proj = eye - a.std @ g
    g2 = g @ g
    dual = g2 @ a.dual @ proj + proj @ a.dual @ g2 - g @ a.dual @ g
    return DualMatrix(g, dual)


def dgi(a: DualMatrix) -> DualMatrix:
    """Dual group inverse.

    Raises IndexTooLarge when aind > 1 and DoesNotExist (with the witness
    (I - M M+) M0 (I - M+ M)) when the index-1 existence test fails.  When
    it exists it coincides with the WDGI.
    """
    _square(a)
    k = index(a.std)
    if k != 1:
        raise IndexTooLarge(f"dual group inverse needs aind 1, got {k}")
    mp = moore_penrose(a.std)
    eye = RealMatrix.identity(a.rows)
    witness = (eye - a.std @ mp) @ a.dual @ (eye - mp @ a.std)
    if not witness.is_zero:
        raise DoesNotExist("dual group inverse does not exist", witness)
    return wdgi(a)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking the three defining equations of an inverse kind."""

    kind: str
    exponent: int
    equations: tuple[tuple[str, bool], ...]
    all_hold: bool


VERIFY_KINDS = ("group", "drazin-k", "wddi-t", "wdgi")


def verify(a: DualMatrix, x: DualMatrix, kind: str) -> VerificationReport:
    """Check X^ against the equations defining an inverse of kind ``kind``.

    group:    A X A   = A,    X A X = X,  A X = X A
    drazin-k: A X A^k = A^k   (k = aind), same trailing two
    wddi-t:   A X A^t = A^t   (t = dind), same trailing two
    wdgi:     A X A^2 = A^2,  same trailing two

    All equations are tested exactly; nothing is assumed about where X came
    from.
    """
    _square(a)
    if x.shape != a.shape:
        raise DimensionError("candidate inverse has the wrong shape")
    if kind not in VERIFY_KINDS:
        raise ValueError(f"unknown verification kind {kind!r}")
    if kind == "group":
        e = 1
    elif kind == "drazin-k":
        e = index(a.std)
    elif kind == "wddi-t":
        e = index_profile(a).dind
    else:
        e = 2
    a_e, _ = dual_power(a, e)
    checks = (
        (f"A X A^{e} = A^{e}", a @ x @ a_e == a_e),
        ("X A X = X", x @ a @ x == x),
        ("A X = X A", a @ x == x @ a),
    )
    return VerificationReport(kind, e, checks, all(ok for _, ok in checks))
