"""Burrows-Wheeler matrices of Christoffel words and their group structure.

M(n, a, b, r) is the n x n table whose rows are the rotations, sorted
decreasingly, of the Christoffel word with r high letters b and n-r low
letters a; entry (i, j) is b exactly when (i + qj) mod n < r, q = n - r.
Over a field of characteristic 0 or > n, the invertible ones form a
commutative group isomorphic to K* x K* x (Z/nZ)* via
M(n, a, b, r) -> ((n-r)a + rb, b - a, r).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    CharacteristicTooSmallError,
    ChristoffelError,
    IndexOutOfRangeError,
    KindMismatchError,
    NonInvertibleRowSumError,
    NotCoprimeError,
    NotPrimitiveError,
    OrderMismatchError,
    OutOfRangeError,
)
from .numeric import ExactMatrix, FieldScalar, ScalarLike
from .permsign import zolotareff
from .words import Word, is_primitive, bw_rows


def _check_characteristic(n: int, modulus: int | None) -> None:
    if modulus is not None and modulus <= n:
        raise CharacteristicTooSmallError(
            f"characteristic {modulus} must exceed the order {n}")


@dataclass(frozen=True)
class ChristoffelParams:
    """The (n, a, b, r) parameterization of a Christoffel matrix."""

    n: int
    a: FieldScalar
    b: FieldScalar
    r: int

    def __post_init__(self):
        a = self.a if isinstance(self.a, FieldScalar) else FieldScalar.coerce(self.a)
        b = self.b if isinstance(self.b, FieldScalar) else FieldScalar.coerce(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if self.n < 2:
            raise OutOfRangeError(f"order must be >= 2, got {self.n}")
        if not 1 <= self.r <= self.n - 1:
            raise OutOfRangeError(f"r={self.r} outside [1, {self.n - 1}]")
        if gcd(self.r, self.n) != 1:
            raise NotCoprimeError(f"gcd({self.r}, {self.n}) != 1")
        if a.modulus != b.modulus:
            raise KindMismatchError("a and b must share one scalar kind")
        if a == b:
            raise ChristoffelError("alphabet letters must differ")
        _check_characteristic(self.n, a.modulus)

    @property
    def q(self) -> int:
        return self.n - self.r

    @property
    def r_star(self) -> int:
        """Inverse of r modulo n, in [1, n-1]."""
        return pow(self.r, -1, self.n)

    @property
    def q_star(self) -> int:
        return pow(self.q, -1, self.n)

    @property
    def big_q(self) -> int:
        """Q with r * r_star = 1 + Q n."""
        return (self.r * self.r_star - 1) // self.n

    @property
    def modulus(self) -> int | None:
        return self.a.modulus


def params(n: int, a: ScalarLike, b: ScalarLike, r: int,
           modulus: int | None = None) -> ChristoffelParams:
    """Convenience constructor coercing plain numbers."""
    return ChristoffelParams(n, FieldScalar.coerce(a, modulus),
                             FieldScalar.coerce(b, modulus), r)


@dataclass(frozen=True)
class GroupTriple:
    """Image ((n-r)a + rb, b - a, r) of a Christoffel matrix in K* x K* x (Z/n)*."""

    n: int
    c: FieldScalar
    d: FieldScalar
    r: int

    def __post_init__(self):
        if self.c.is_zero():
            raise NonInvertibleRowSumError("row sum c must be nonzero")
        if self.d.is_zero():
            raise NonInvertibleRowSumError("difference d must be nonzero")
        if gcd(self.r % self.n, self.n) != 1:
            raise NotCoprimeError(f"gcd({self.r}, {self.n}) != 1")

    def inverse(self) -> "GroupTriple":
        return GroupTriple(self.n, self.c.inverse(), self.d.inverse(),
                           pow(self.r, -1, self.n))

    def __mul__(self, other: "GroupTriple") -> "GroupTriple":
        if self.n != other.n:
            raise OrderMismatchError(f"orders {self.n} and {other.n} differ")
        return GroupTriple(self.n, self.c * other.c, self.d * other.d,
                           (self.r * other.r) % self.n)


def bw_matrix(w: Word) -> ExactMatrix:
    """Burrows-Wheeler table of a primitive word as an exact matrix."""
    if not is_primitive(w):
        raise NotPrimitiveError(f"word {w} is not primitive")
    return ExactMatrix.from_rows([row.letters for row in bw_rows(w)])


def christoffel_matrix(p: ChristoffelParams) -> ExactMatrix:
    """The table by the residue rule: entry (i,j) = b iff (i + qj) mod n < r."""
    n, q, r = p.n, p.q, p.r
    a, b = p.a, p.b
    entries = [b if (i + q * j) % n < r else a
               for i in range(n) for j in range(n)]
    return ExactMatrix(n, n, entries)


def to_triple(p: ChristoffelParams) -> GroupTriple:
    c = p.a * (p.n - p.r) + p.b * p.r
    if c.is_zero():
        raise NonInvertibleRowSumError(f"row sum of {p} is zero")
    return GroupTriple(p.n, c, p.b - p.a, p.r)


def from_triple(n: int, t: GroupTriple) -> ChristoffelParams:
    """Inverse of the isomorphism: a = (c - rd)/n, b = a + d."""
    if t.n != n:
        raise OrderMismatchError(f"triple of order {t.n} used at order {n}")
    _check_characteristic(n, t.c.modulus)
    r = t.r % n
    n_scalar = FieldScalar.coerce(n, t.c.modulus)
    a = (t.c - t.d * r) / n_scalar
    return ChristoffelParams(n, a, a + t.d, r)


def group_identity(n: int, modulus: int | None = None) -> ChristoffelParams:
    """Params of the identity matrix: M(n, 0, 1, 1)."""
    return params(n, 0, 1, 1, modulus)


def group_mul(p1: ChristoffelParams, p2: ChristoffelParams) -> ChristoffelParams:
    """Parameters of the matrix product, via the componentwise triple product."""
    if p1.n != p2.n:
        raise OrderMismatchError(f"orders {p1.n} and {p2.n} differ")
    return from_triple(p1.n, to_triple(p1) * to_triple(p2))


def unit_inverse_params(n: int, r: int) -> ChristoffelParams:
    """Closed-form inverse of M(n, 0, 1, r): M(n, -Q/r, 1 - Q/r, r*)."""
    base = params(n, 0, 1, r)
    q_frac = Fraction(base.big_q, r)
    return params(n, -q_frac, 1 - q_frac, base.r_star)


def group_inverse(p: ChristoffelParams) -> ChristoffelParams:
    """Group inverse via the inverted triple.

    For M(n, 0, 1, r) over the rationals the closed form
    M(n, -Q/r, 1-Q/r, r*) is computed as well and the two must agree.
    """
    inv = from_triple(p.n, to_triple(p).inverse())
    if p.modulus is None and p.a == 0 and p.b == 1:
        direct = unit_inverse_params(p.n, p.r)
        assert to_triple(direct) == to_triple(inv), (p, inv, direct)
    return inv


def det_closed(p: ChristoffelParams) -> FieldScalar:
    """Determinant by the closed form ((n-r)a + rb)(b - a)^(n-1) sgn(x -> rx)."""
    c = p.a * (p.n - p.r) + p.b * p.r
    d = p.b - p.a
    sign = zolotareff(p.r, p.n)
    return c * d ** (p.n - 1) * FieldScalar.coerce(sign, p.modulus)


def consecutive_rows_square(p: ChristoffelParams, i: int) -> int:
    """Column j = i * r_star mod n where rows i-1 and i differ.

    The rows agree outside columns j-1, j, where they carry the 2x2 block
    [[b, a], [a, b]].
    """
    if not 1 <= i <= p.n - 1:
        raise IndexOutOfRangeError(f"row index {i} outside [1, {p.n - 1}]")
    return (i * p.r_star) % p.n


def verify_consecutive_rows(p: ChristoffelParams, i: int) -> bool:
    """Check the two-row block structure on the actual matrix."""
    j = consecutive_rows_square(p, i)
    m = christoffel_matrix(p)
    prev, cur = m.row(i - 1), m.row(i)
    for col in range(p.n):
        if col in (j - 1, j):
            continue
        if prev[col] != cur[col]:
            return False
    return (prev[j - 1], prev[j]) == (p.b, p.a) and (cur[j - 1], cur[j]) == (p.a, p.b)


def column_shift_check(p: ChristoffelParams) -> bool:
    """First column reads b^r a^(n-r); each column is the previous one
    cyclically shifted down by r."""
    m = christoffel_matrix(p)
    n, r = p.n, p.r
    first = m.column(0)
    if any(first[i] != (p.b if i < r else p.a) for i in range(n)):
        return False
    for j in range(1, n):
        for i in range(n):
            if m.entry(i, j) != m.entry((i - r) % n, j - 1):
                return False
    return True


def row_pair_prefix_check(p: ChristoffelParams) -> bool:
    """For every j in [1, n-1] and h = jq mod n, rows h-1 and h agree on
    columns 1..n-j-2 and carry b, a at column n-j-1."""
    m = christoffel_matrix(p)
    n, q = p.n, p.q
    for j in range(1, n):
        h = (j * q) % n
        prev, cur = m.row(h - 1), m.row(h)
        col = n - j - 1
        if prev[col] != p.b or cur[col] != p.a:
            return False
        if any(prev[x] != cur[x] for x in range(1, col)):
            return False
    return True
