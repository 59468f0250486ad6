"""Exact integer and rational linear algebra.

Matrices are plain lists of rows; vectors are lists. Entries are ``int`` or
``fractions.Fraction`` and nothing here ever touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    NonSquareMatrix,
    NotSquare,
    NotSublattice,
    RankDeficient,
    RankMismatch,
)

Matrix = list  # list of rows


def to_fractions(M: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in M]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def columns_to_matrix(cols: Sequence[Sequence], nrows: int) -> list[list]:
    """Stack column vectors side by side (an ``nrows x 0`` matrix if empty)."""
    return [[c[i] for c in cols] for i in range(nrows)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def denominator_lcm(values) -> int:
    return math.lcm(1, *(Fraction(v).denominator for v in values))


def primitive(v: Sequence) -> tuple[Fraction, list[int]]:
    """Split a nonzero rational vector as ``content * y`` with ``y`` primitive.

    The sign of ``y`` follows ``v``; ``content`` is positive.
    """
    fr = [Fraction(x) for x in v]
    den = denominator_lcm(fr)
    ints = [int(x * den) for x in fr]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return Fraction(g, den), [x // g for x in ints]


def normalize_sign(v: Sequence[int]) -> list[int]:
    """Flip ``v`` so that its first nonzero entry is positive."""
    for x in v:
        if x:
            return list(v) if x > 0 else [-y for y in v]
    return list(v)


# ----------------------------------------------------------------------------
# Row reduction over Q


def rref(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the list of pivot columns."""
    R = to_fractions(M)
    if not R:
        return R, []
    nrows, ncols = len(R), len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M: Sequence[Sequence]) -> int:
    return len(rref(M)[1])


def kernel_basis(M: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel ``{k : M k = 0}`` as a list of vectors.

    ``ncols`` is only needed when ``M`` has no rows.
    """
    if not M:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    n = len(M[0])
    R, pivots = rref(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        k = [Fraction(0)] * n
        k[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            k[pc] = -row[f]
        basis.append(k)
    return basis


def solve(M: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of ``M x = b`` over Q, or ``None`` if inconsistent."""
    n = len(M[0]) if M else 0
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x


def inverse(M: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(M)
    if any(len(row) != n for row in M):
        raise NonSquareMatrix("inverse needs a square matrix")
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise RankDeficient("matrix is singular")
    return [row[n:] for row in R]


def det(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rational rows are scaled to integers first and the scale divided out.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise NonSquareMatrix(f"determinant of a non-square {n}x{len(M[0])} matrix")
    if n == 0:
        return Fraction(1)
    scale = 1
    A = []
    for row in M:
        d = denominator_lcm(row)
        scale *= d
        A.append([int(Fraction(x) * d) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            A[k], A[p] = A[p], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            rowi, rowk = A[i], A[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return Fraction(sign * A[n - 1][n - 1], scale)


def integer_sqrt_exact(n: int) -> int:
    """Exact square root of a perfect square; raises :class:`NotSquare` otherwise."""
    if n < 0:
        raise NotSquare(f"{n} is negative")
    r = math.isqrt(n)
    if r * r != n:
        raise NotSquare(f"{n} is not a perfect square")
    return r


def rational_root_exact(q: Fraction, k: int) -> Fraction | None:
    """The nonnegative rational k-th root of ``q >= 0``, or None if irrational."""
    q = Fraction(q)
    num = _int_root(q.numerator, k)
    den = _int_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_root(n: int, k: int) -> int | None:
    if n < 0:
        return None
    if n < 2:
        return n
    # integer Newton iteration for floor(n ** (1/k))
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x**k == n else None


# ----------------------------------------------------------------------------
# Hermite normal form and lattices


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(M: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Column Hermite normal form.

    Returns ``(H, U)`` with ``H = M U``, ``U`` unimodular. ``H`` is lower
    echelon: each pivot is positive, entries left of a pivot lie in
    ``[0, pivot)``, and zero columns are collected on the right.
    """
    H = [[int(x) for x in row] for row in M]
    if not H:
        return H, []
    nrows, ncols = len(H), len(H[0])
    U = identity(ncols)

    def colop(mat, i, j, a, b, c, d):
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
        for row in mat:
            ci, cj = row[i], row[j]
            row[i] = a * ci + b * cj
            row[j] = c * ci + d * cj

    p = 0
    for r in range(nrows):
        if p == ncols:
            break
        for j in range(p + 1, ncols):
            b = H[r][j]
            if b == 0:
                continue
            a = H[r][p]
            g, x, y = _xgcd(a, b)
            colop(H, p, j, x, y, -b // g, a // g)
            colop(U, p, j, x, y, -b // g, a // g)
        piv = H[r][p]
        if piv == 0:
            continue
        if piv < 0:
            for mat in (H, U):
                for row in mat:
                    row[p] = -row[p]
            piv = -piv
        for j in range(p):
            q = H[r][j] // piv
            if q:
                for mat in (H, U):
                    for row in mat:
                        row[j] -= q * row[p]
        p += 1
    return H, U


def hnf_pivots(H: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """(row, column) positions of the pivots of a column HNF."""
    out = []
    c = 0
    ncols = len(H[0]) if H else 0
    for r, row in enumerate(H):
        if c < ncols and row[c] != 0:
            out.append((r, c))
            c += 1
    return out


def integer_kernel(M: Sequence[Sequence]) -> list[list[int]]:
    """Z-basis of ``{k in Z^n : M k = 0}`` for a rational matrix ``M``."""
    if not M:
        raise ValueError("integer_kernel needs at least one row; use identity")
    A = [[int(Fraction(x) * denominator_lcm(row)) for x in row] for row in M]
    H, U = hnf(A)
    r = len(hnf_pivots(H))
    n = len(A[0])
    return [[U[i][j] for i in range(n)] for j in range(r, n)]


@dataclass(frozen=True)
class IntLattice:
    """A full-column-rank integer lattice; ``basis`` holds column vectors."""

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def matrix(self) -> list[list[int]]:
        return columns_to_matrix(self.basis, self.ambient_dim)

    @classmethod
    def from_generators(cls, gens: Sequence[Sequence[int]], ambient_dim: int) -> "IntLattice":
        """Z-span of arbitrary integer generators, reduced to an HNF basis."""
        if not gens:
            return cls(ambient_dim, ())
        H, _ = hnf(columns_to_matrix(gens, ambient_dim))
        r = len(hnf_pivots(H))
        return cls(ambient_dim, tuple(tuple(H[i][j] for i in range(ambient_dim)) for j in range(r)))

    def __contains__(self, v) -> bool:
        if not self.basis:
            return all(x == 0 for x in v)
        t = solve(self.matrix(), list(v))
        return t is not None and all(x.denominator == 1 for x in t)


def lattice_index(A: IntLattice, B: IntLattice) -> int:
    """The index ``[A : B]`` of a sublattice of equal rank."""
    if A.ambient_dim != B.ambient_dim or A.rank != B.rank:
        raise RankMismatch(f"ranks differ: {A.rank} vs {B.rank}")
    if rank(A.matrix()) != A.rank or rank(B.matrix()) != B.rank:
        raise RankDeficient("lattice basis is not linearly independent")
    coeffs = []
    Am = A.matrix()
    for col in B.basis:
        t = solve(Am, list(col))
        if t is None:
            raise RankMismatch("B does not lie in the rational span of A")
        if any(x.denominator != 1 for x in t):
            raise NotSublattice(f"generator {col} is not an integer combination of A")
        coeffs.append(t)
    return abs(int(det(coeffs)))


def index_in_standard(gens: Sequence[Sequence[int]], dim: int) -> int:
    """Index of the Z-span of ``gens`` inside ``Z^dim``.

    Raises :class:`RankDeficient` if the span has rank below ``dim``.
    """
    if dim == 0:
        return 1
    if not gens:
        raise RankDeficient("no generators")
    H, _ = hnf(columns_to_matrix(gens, dim))
    piv = hnf_pivots(H)
    if len(piv) < dim:
        raise RankDeficient(f"generators span rank {len(piv)} < {dim}")
    return math.prod(H[r][c] for r, c in piv)


def saturate(vectors: Sequence[Sequence], ambient_dim: int | None = None) -> IntLattice:
    """Basis of ``span_Q(vectors) ∩ Z^n`` in column HNF."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return IntLattice(ambient_dim or 0, ())
    n = len(vectors[0])
    if rank(vectors) != len(vectors):
        raise RankDeficient("saturate needs linearly independent vectors")
    orth = kernel_basis(vectors)  # rational normals to the span
    if not orth:
        gens = identity(n)
    else:
        gens = integer_kernel(orth)
    return IntLattice.from_generators(gens, n)
