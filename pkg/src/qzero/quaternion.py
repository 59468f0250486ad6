"""Arithmetic in a definite quaternion algebra ``D = (alpha, beta / Q)``.

Elements are written over the fixed basis ``1, i, j, k`` with
``i^2 = alpha``, ``j^2 = beta``, ``ij = -ji = k``. Vectors over ``D`` are
tuples of :class:`Quat`; matrices are lists of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import AlgebraMismatch, DimensionMismatch, InvalidInput, NotHermitian


@dataclass(frozen=True)
class Algebra:
    """Structure constants of ``(alpha, beta / Q)``; both must be negative integers."""

    alpha: int
    beta: int

    def __post_init__(self):
        if int(self.alpha) != self.alpha or int(self.beta) != self.beta:
            raise InvalidInput("alpha and beta must be integers")
        if self.alpha >= 0 or self.beta >= 0:
            raise InvalidInput(
                f"alpha={self.alpha}, beta={self.beta}: both must be negative "
                "for a definite algebra"
            )
        object.__setattr__(self, "alpha", int(self.alpha))
        object.__setattr__(self, "beta", int(self.beta))

    def quat(self, c0=0, c1=0, c2=0, c3=0) -> "Quat":
        return Quat((Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3)), self)

    def scalar(self, a) -> "Quat":
        return self.quat(a)

    @property
    def zero(self) -> "Quat":
        return self.quat()

    @property
    def one(self) -> "Quat":
        return self.quat(1)

    @property
    def i(self) -> "Quat":
        return self.quat(0, 1)

    @property
    def j(self) -> "Quat":
        return self.quat(0, 0, 1)

    @property
    def k(self) -> "Quat":
        return self.quat(0, 0, 0, 1)

    def basis(self) -> tuple["Quat", "Quat", "Quat", "Quat"]:
        return (self.one, self.i, self.j, self.k)

    def vector(self, *entries) -> tuple["Quat", ...]:
        """Build a D-vector; entries may be Quats, rationals or 4-sequences."""
        return tuple(self.coerce(e) for e in entries)

    def coerce(self, x) -> "Quat":
        if isinstance(x, Quat):
            if x.algebra != self:
                raise AlgebraMismatch(f"{x} belongs to {x.algebra}, not {self}")
            return x
        if isinstance(x, (int, Fraction)):
            return self.scalar(x)
        coords = list(x)
        if len(coords) != 4:
            raise InvalidInput(f"quaternion needs 4 coordinates, got {coords}")
        return self.quat(*coords)


@dataclass(frozen=True)
class Quat:
    coords: tuple[Fraction, Fraction, Fraction, Fraction]
    algebra: Algebra

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, m: int) -> Fraction:
        return self.coords[m]

    def _same(self, other: "Quat"):
        if other.algebra != self.algebra:
            raise AlgebraMismatch("operands live in different algebras")

    def __add__(self, other):
        if not isinstance(other, Quat):
            other = self.algebra.scalar(other)
        self._same(other)
        return Quat(tuple(a + b for a, b in zip(self.coords, other.coords)), self.algebra)

    __radd__ = __add__

    def __neg__(self):
        return Quat(tuple(-a for a in self.coords), self.algebra)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Quat):
            s = Fraction(other)
            return Quat(tuple(a * s for a in self.coords), self.algebra)
        self._same(other)
        al, be = self.algebra.alpha, self.algebra.beta
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        return Quat(
            (
                a0 * b0 + al * a1 * b1 + be * a2 * b2 - al * be * a3 * b3,
                a0 * b1 + a1 * b0 - be * a2 * b3 + be * a3 * b2,
                a0 * b2 + a2 * b0 + al * a1 * b3 - al * a3 * b1,
                a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
            ),
            self.algebra,
        )

    def __rmul__(self, other):
        # scalars are central
        return self * other

    def __truediv__(self, other):
        if isinstance(other, Quat):
            return self * other.inverse()
        s = Fraction(other)
        return Quat(tuple(a / s for a in self.coords), self.algebra)

    def conj(self) -> "Quat":
        c0, c1, c2, c3 = self.coords
        return Quat((c0, -c1, -c2, -c3), self.algebra)

    def trace(self) -> Fraction:
        return 2 * self.coords[0]

    def norm(self) -> Fraction:
        al, be = self.algebra.alpha, self.algebra.beta
        c0, c1, c2, c3 = self.coords
        return c0 * c0 - al * c1 * c1 - be * c2 * c2 + al * be * c3 * c3

    def inverse(self) -> "Quat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj() / n

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_scalar(self) -> bool:
        return not any(self.coords[1:])

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        parts = []
        for c, name in zip(self.coords, ("", "i", "j", "k")):
            if c:
                parts.append(f"{c}{name}" if name else f"{c}")
        return "Quat(" + (" + ".join(parts) if parts else "0") + ")"


# free-function spellings used across the package


def quat_mul(x: Quat, y: Quat) -> Quat:
    return x * y


def conj(x: Quat) -> Quat:
    return x.conj()


def q_trace(x: Quat) -> Fraction:
    return x.trace()


def q_norm(x: Quat) -> Fraction:
    return x.norm()


# ----------------------------------------------------------------------------
# coordinates


def coord_map(x) -> list[Fraction]:
    """``[x]``: a quaternion or D-vector flattened to its rational coordinates."""
    if isinstance(x, Quat):
        return list(x.coords)
    out: list[Fraction] = []
    for q in x:
        out.extend(q.coords)
    return out


def coord_unmap(v: Sequence, algebra: Algebra):
    """Inverse of :func:`coord_map` on D-vectors: ``4N`` rationals to ``N`` Quats."""
    v = [Fraction(x) for x in v]
    if len(v) % 4:
        raise DimensionMismatch(f"length {len(v)} is not a multiple of 4")
    quats = tuple(algebra.quat(*v[4 * t : 4 * t + 4]) for t in range(len(v) // 4))
    return quats


def left_mult_matrix(a: Quat) -> list[list[Fraction]]:
    """4x4 rational matrix of ``x -> a x`` in the basis 1, i, j, k."""
    cols = [coord_map(a * e) for e in a.algebra.basis()]
    return linalg.columns_to_matrix(cols, 4)


def right_mult_matrix(a: Quat) -> list[list[Fraction]]:
    """4x4 rational matrix of ``x -> x a``."""
    cols = [coord_map(e * a) for e in a.algebra.basis()]
    return linalg.columns_to_matrix(cols, 4)


def vec_right_mul(v: Sequence[Quat], t: Quat) -> tuple[Quat, ...]:
    return tuple(x * t for x in v)


def vec_left_mul(t: Quat, v: Sequence[Quat]) -> tuple[Quat, ...]:
    return tuple(t * x for x in v)


def vec_add(u: Sequence[Quat], v: Sequence[Quat]) -> tuple[Quat, ...]:
    return tuple(a + b for a, b in zip(u, v))


def d_rank(vectors: Iterable[Sequence[Quat]]) -> int:
    """Dimension of the right D-span of the given D-vectors."""
    rows = []
    for v in vectors:
        for eta in _basis_of(v):
            rows.append(coord_map(vec_right_mul(v, eta)))
    if not rows:
        return 0
    r = linalg.rank(rows)
    assert r % 4 == 0, "right D-span must have rational dimension divisible by 4"
    return r // 4


def _basis_of(v: Sequence[Quat]):
    return v[0].algebra.basis()


# ----------------------------------------------------------------------------
# matrices over D


def qmatmul(A: Sequence[Sequence[Quat]], B: Sequence[Sequence[Quat]]) -> list[list[Quat]]:
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0])}")
    out = []
    for row in A:
        out_row = []
        for c in range(len(B[0])):
            acc = row[0] * B[0][c]
            for t in range(1, len(B)):
                acc = acc + row[t] * B[t][c]
            out_row.append(acc)
        out.append(out_row)
    return out


def conj_transpose(A: Sequence[Sequence[Quat]]) -> list[list[Quat]]:
    if not A:
        return []
    return [[A[r][c].conj() for r in range(len(A))] for c in range(len(A[0]))]


def columns_to_qmatrix(cols: Sequence[Sequence[Quat]]) -> list[list[Quat]]:
    n = len(cols[0])
    return [[col[i] for col in cols] for i in range(n)]


# ----------------------------------------------------------------------------
# splitting field E = Q(sqrt(alpha))


@dataclass(frozen=True)
class QuadExt:
    """``a + b sqrt(alpha)`` in ``Q(sqrt(alpha))``."""

    a: Fraction
    b: Fraction
    alpha: int

    def __add__(self, o):
        return QuadExt(self.a + o.a, self.b + o.b, self.alpha)

    def __sub__(self, o):
        return QuadExt(self.a - o.a, self.b - o.b, self.alpha)

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.alpha)

    def __mul__(self, o):
        if not isinstance(o, QuadExt):
            o = Fraction(o)
            return QuadExt(self.a * o, self.b * o, self.alpha)
        return QuadExt(
            self.a * o.a + self.alpha * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.alpha,
        )

    __rmul__ = __mul__

    def field_norm(self) -> Fraction:
        return self.a * self.a - self.alpha * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("zero in Q(sqrt(alpha))")
        return QuadExt(self.a / n, -self.b / n, self.alpha)

    def __truediv__(self, o):
        return self * o.inverse()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0


def rho(x: Quat) -> list[list[QuadExt]]:
    """The splitting map ``D -> Mat_2(Q(sqrt(alpha)))``."""
    al, be = x.algebra.alpha, x.algebra.beta
    x0, x1, x2, x3 = x.coords
    return [
        [QuadExt(x0, x1, al), QuadExt(x2, x3, al)],
        [QuadExt(be * x2, -be * x3, al), QuadExt(x0, -x1, al)],
    ]


def rho_matrix(A: Sequence[Sequence[Quat]]) -> list[list[QuadExt]]:
    """Blockwise extension of :func:`rho` to an ``m x n`` matrix over D."""
    m, n = len(A), len(A[0])
    out = [[None] * (2 * n) for _ in range(2 * m)]
    for r in range(m):
        for c in range(n):
            blk = rho(A[r][c])
            for u in range(2):
                for w in range(2):
                    out[2 * r + u][2 * c + w] = blk[u][w]
    return out


def det_E(M: Sequence[Sequence[QuadExt]]) -> QuadExt:
    """Determinant over ``Q(sqrt(alpha))`` by Gaussian elimination."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    alpha = M[0][0].alpha
    A = [list(row) for row in M]
    result = QuadExt(Fraction(1), Fraction(0), alpha)
    for c in range(n):
        p = next((r for r in range(c, n) if not A[r][c].is_zero()), None)
        if p is None:
            return QuadExt(Fraction(0), Fraction(0), alpha)
        if p != c:
            A[c], A[p] = A[p], A[c]
            result = -result
        piv = A[c][c]
        result = result * piv
        inv = piv.inverse()
        for r in range(c + 1, n):
            if A[r][c].is_zero():
                continue
            f = A[r][c] * inv
            A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return result


def det_rho(A: Sequence[Sequence[Quat]]) -> QuadExt:
    return det_E(rho_matrix(A))


# ----------------------------------------------------------------------------
# hermitian forms


@dataclass(frozen=True)
class HermitianForm:
    """Coefficient matrix ``(f_ml)`` of a hermitian form, ``f_ml = conj(f_lm)``."""

    matrix: tuple[tuple[Quat, ...], ...]
    algebra: Algebra

    def __post_init__(self):
        rows = tuple(tuple(self.algebra.coerce(x) for x in row) for row in self.matrix)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("hermitian form needs a nonempty square matrix")
        for m in range(n):
            for l in range(n):
                if rows[m][l] != rows[l][m].conj():
                    raise NotHermitian(f"f[{m}][{l}] != conj(f[{l}][{m}])")
        object.__setattr__(self, "matrix", rows)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def entries(self) -> list[Quat]:
        """Row-major flattening, i.e. the form as a vector in D^(N^2)."""
        return [x for row in self.matrix for x in row]

    def __call__(self, x, y=None) -> Quat:
        return eval_hermitian(self, x, x if y is None else y)

    def scaled(self, a) -> "HermitianForm":
        return HermitianForm(tuple(tuple(q * a for q in row) for row in self.matrix), self.algebra)


def eval_hermitian(F: HermitianForm, x: Sequence[Quat], y: Sequence[Quat]) -> Quat:
    """``F(x, y) = sum_{m,l} conj(x_m) f_ml y_l``."""
    if len(x) != F.n or len(y) != F.n:
        raise DimensionMismatch(f"form has {F.n} variables, got {len(x)} and {len(y)}")
    acc = F.algebra.zero
    for m in range(F.n):
        if x[m].is_zero():
            continue
        cx = x[m].conj()
        for l in range(F.n):
            f = F.matrix[m][l]
            if f.is_zero() or y[l].is_zero():
                continue
            acc = acc + cx * f * y[l]
    return acc
