"""Height functions over Q and over the quaternion algebra.

Rational side: ``H``, ``h``, the L2 height, Grassmann coordinates and the
height of a subspace of Q^N. Quaternion side: archimedean absolute value,
``H_inf``/``h`` on D^N, the order-relative finite height and ``H^O`` for
vectors, constraint matrices and right D-subspaces.

All values are :class:`~qzero.exact.ExactHeight`; nothing is rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .errors import (
    CoordinateNotInOrder,
    DimensionMismatch,
    NonRationalDeterminant,
    RankDeficient,
    ZeroVector,
)
from .exact import ONE, ExactHeight
from .orders import Order
from .quaternion import (
    Algebra,
    Quat,
    columns_to_qmatrix,
    conj_transpose,
    coord_map,
    coord_unmap,
    d_rank,
    det_rho,
    left_mult_matrix,
    qmatmul,
)

# ----------------------------------------------------------------------------
# places of Q


def abs_p(a, p: int) -> Fraction:
    """The p-adic absolute value ``|a|_p = p^(-ord_p(a))``."""
    a = Fraction(a)
    if a == 0:
        return Fraction(0)
    e = 0
    n, d = a.numerator, a.denominator
    while n % p == 0:
        n //= p
        e += 1
    while d % p == 0:
        d //= p
        e -= 1
    return Fraction(1, p**e) if e >= 0 else Fraction(p ** (-e))


def relevant_primes(*values) -> list[int]:
    """Primes dividing any numerator or denominator among ``values``."""
    out = set()
    for v in values:
        v = Fraction(v)
        for n in (abs(v.numerator), v.denominator):
            p = 2
            while p * p <= n:
                while n % p == 0:
                    out.add(p)
                    n //= p
                p += 1
            if n > 1:
                out.add(n)
    return sorted(out)


def product_formula(a) -> Fraction:
    """``prod_v |a|_v`` over all places of Q; equals 1 for every nonzero ``a``."""
    a = Fraction(a)
    result = abs(a)
    for p in relevant_primes(a):
        result *= abs_p(a, p)
    return result


# ----------------------------------------------------------------------------
# heights on Q^N


def _nonzero(x: Sequence) -> list[Fraction]:
    v = [Fraction(t) for t in x]
    if not any(v):
        raise ZeroVector("height of the zero vector is undefined")
    return v


def height_H(x: Sequence) -> ExactHeight:
    """Projective height: ``max |y_i|`` for the primitive integer multiple ``y``."""
    _, y = linalg.primitive(_nonzero(x))
    return ExactHeight(Fraction(max(abs(t) for t in y)))


def height_h(x: Sequence) -> ExactHeight:
    """Inhomogeneous height ``H(1, x)``."""
    return height_H([1, *x])


def height_L2(x: Sequence) -> ExactHeight:
    """``sqrt(sum y_i^2)`` for the primitive integer multiple ``y``."""
    _, y = linalg.primitive(_nonzero(x))
    return ExactHeight(Fraction(sum(t * t for t in y)), 2)


def height_fin(x: Sequence) -> ExactHeight:
    """Product of the p-adic sup norms, ``1 / content(x)``."""
    content, _ = linalg.primitive(_nonzero(x))
    return ExactHeight(1 / content)


def height_inf(x: Sequence) -> ExactHeight:
    return ExactHeight(max(abs(Fraction(t)) for t in x))


def grassmann(X: Sequence[Sequence]) -> list[Fraction]:
    """Maximal minors of an ``N x L`` matrix over row subsets in lexicographic order."""
    N = len(X)
    L = len(X[0]) if X else 0
    coords = [linalg.det([X[i] for i in rows]) for rows in combinations(range(N), L)]
    if not any(coords):
        raise RankDeficient("matrix does not have full column rank")
    return coords


def height_subspace_K(basis: Sequence[Sequence]) -> ExactHeight:
    """Height of the span of the given vectors in Q^N (basis independent)."""
    basis = [list(v) for v in basis]
    if not basis:
        return ONE
    X = linalg.columns_to_matrix(basis, len(basis[0]))
    return height_L2(grassmann(X))


def height_subspace_K_gram(basis: Sequence[Sequence]) -> ExactHeight:
    """Same value via the covolume of the saturated lattice (independent route)."""
    basis = [list(v) for v in basis]
    if not basis:
        return ONE
    lat = linalg.saturate(basis)
    cols = [list(c) for c in lat.basis]
    gram = [[linalg.dot(u, v) for v in cols] for u in cols]
    return ExactHeight(linalg.det(gram), 2)


# ----------------------------------------------------------------------------
# heights on D^N


def abs_v(x: Quat) -> ExactHeight:
    """Archimedean absolute value ``sqrt(N(x))``."""
    return ExactHeight(x.norm(), 2)


def Hinf_D(x: Sequence[Quat]) -> ExactHeight:
    """``max_l |x_l|``."""
    return ExactHeight(max(q.norm() for q in x), 2)


def h_D(x: Sequence[Quat]) -> ExactHeight:
    """Inhomogeneous height ``H_inf(1, x)``; the finite part of ``(1, x)`` is trivial."""
    return ExactHeight(max([Fraction(1)] + [q.norm() for q in x]), 2)


def left_ideal_index(O: Order, x: Sequence[Quat]) -> int:
    """``[O : O x_1 + ... + O x_N]`` for entries of ``x`` in ``O``."""
    gens = [[w * q] for q in x if not q.is_zero() for w in O.basis]
    for q in x:
        if not O.contains(q):
            raise CoordinateNotInOrder(f"{q} is not in the order")
    if not gens:
        raise ZeroVector("zero vector")
    return O.module_index(gens, 1)


def Hfin_O(O: Order, x: Sequence[Quat]) -> ExactHeight:
    """``[O : O x_1 + ... + O x_N] ** (-1/4)``; entries must lie in ``O``."""
    return ExactHeight(Fraction(1, left_ideal_index(O, x)), 4)


def H_O_vector(O: Order, x: Sequence[Quat], clearing: int | None = None) -> ExactHeight:
    """Homogeneous height ``H_inf(a x) H_fin(a x)`` for any integer ``a`` clearing ``x`` into ``O``."""
    if all(q.is_zero() for q in x):
        raise ZeroVector("height of the zero vector is undefined")
    a = clearing if clearing is not None else O.clearing_integer(x)
    y = [q * a for q in x]
    return Hinf_D(y) * Hfin_O(O, y)


# ----------------------------------------------------------------------------
# constraint matrices


def _rational_det_rho(A) -> Fraction:
    d = det_rho(A)
    if not d.is_rational():
        raise NonRationalDeterminant(f"det rho has irrational part {d.b}")
    return d.a


def Hinf_matrix_C(C: Sequence[Sequence[Quat]]) -> ExactHeight:
    """``|det rho(C C*)| ** (1/4)``."""
    d = abs(_rational_det_rho(qmatmul(C, conj_transpose(C))))
    if d == 0:
        raise RankDeficient("C does not have full left row rank")
    return ExactHeight(d, 4)


def Hinf_matrix_C_minors(C: Sequence[Sequence[Quat]]) -> ExactHeight:
    """Cauchy-Binet evaluation ``(sum over maximal minors C0 of |det rho(C0)|) ** (1/2)``.

    ``det rho(C0)`` is a reduced norm (a square of an absolute value), so the
    sum enters to the first power.
    """
    m, n = len(C), len(C[0])
    total = Fraction(0)
    for cols in combinations(range(n), m):
        C0 = [[row[c] for c in cols] for row in C]
        total += abs(_rational_det_rho(C0))
    if total == 0:
        raise RankDeficient("C does not have full left row rank")
    return ExactHeight(total, 2)


def _clear_matrix(O: Order, C):
    a = O.clearing_integer([q for row in C for q in row])
    return [[q * a for q in row] for row in C]


def image_index(O: Order, C: Sequence[Sequence[Quat]]) -> int:
    """``[O^m : C(O^N)]`` for an ``m x N`` matrix with entries in ``O``."""
    m, n = len(C), len(C[0])
    gens = []
    for l in range(n):
        for w in O.basis:
            gens.append([C[r][l] * w for r in range(m)])
    return O.module_index(gens, m)


def Hfin_matrix_C(O: Order, C: Sequence[Sequence[Quat]]) -> ExactHeight:
    return ExactHeight(Fraction(1, image_index(O, C)), 4)


def H_O_matrix_C(O: Order, C: Sequence[Sequence[Quat]]) -> ExactHeight:
    """``H_inf(C) H_fin(C)`` after clearing ``C`` into ``O`` (scale invariant)."""
    C = _clear_matrix(O, C)
    return Hinf_matrix_C(C) * Hfin_matrix_C(O, C)


# ----------------------------------------------------------------------------
# right D-subspaces


def solution_space(C: Sequence[Sequence[Quat]], n: int, algebra: Algebra) -> list[tuple[Quat, ...]]:
    """A right D-basis of ``{x in D^n : C x = 0}``."""
    rows: list[list[Fraction]] = []
    for crow in C:
        blocks = [left_mult_matrix(c) for c in crow]
        for t in range(4):
            rows.append([blocks[l][t][u] for l in range(n) for u in range(4)])
    kern = linalg.kernel_basis(rows, ncols=4 * n)
    return select_D_basis_from([coord_unmap(k, algebra) for k in kern])


def select_D_basis_from(vectors) -> list[tuple[Quat, ...]]:
    """Greedy right D-basis of the D-span of ``vectors``, kept in input order."""
    chosen: list[tuple[Quat, ...]] = []
    for v in vectors:
        if d_rank(chosen + [v]) > len(chosen):
            chosen.append(tuple(v))
    return chosen


@dataclass(frozen=True)
class SubspaceD:
    """A right D-subspace of D^N.

    ``basis`` always holds a right D-basis (columns of ``X``); ``constraints``
    holds the rows of a matrix ``C`` with ``Z = {x : C x = 0}`` when the space
    was built from one.
    """

    algebra: Algebra
    n: int
    basis: tuple[tuple[Quat, ...], ...]
    constraints: tuple[tuple[Quat, ...], ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_basis(cls, algebra: Algebra, vectors) -> "SubspaceD":
        vectors = [algebra.vector(*v) for v in vectors]
        if not vectors:
            raise RankDeficient("use SubspaceD.zero for the zero space")
        n = len(vectors[0])
        if any(len(v) != n for v in vectors):
            raise DimensionMismatch("basis vectors have different lengths")
        if d_rank(vectors) != len(vectors):
            raise RankDeficient("basis vectors are not right D-independent")
        return cls(algebra, n, tuple(vectors))

    @classmethod
    def from_constraints(cls, algebra: Algebra, C, n: int) -> "SubspaceD":
        C = tuple(algebra.vector(*row) for row in C)
        if any(len(row) != n for row in C):
            raise DimensionMismatch(f"constraint rows must have length {n}")
        if C and d_rank(conj_transpose_rows(C)) != len(C):
            raise RankDeficient("constraint rows are not left D-independent")
        basis = solution_space(C, n, algebra)
        return cls(algebra, n, tuple(basis), C)

    @classmethod
    def full(cls, algebra: Algebra, n: int) -> "SubspaceD":
        one, zero = algebra.one, algebra.zero
        basis = tuple(tuple(one if i == l else zero for i in range(n)) for l in range(n))
        return cls(algebra, n, basis)

    @classmethod
    def zero(cls, algebra: Algebra, n: int) -> "SubspaceD":
        return cls(algebra, n, ())

    def basis_matrix(self) -> list[list[Quat]]:
        return columns_to_qmatrix(self.basis)

    def constraint_matrix(self) -> list[list[Quat]]:
        """Rows of some ``C`` cutting out the space (``X*`` of the complement)."""
        if self.constraints is not None:
            return [list(r) for r in self.constraints]
        return [[q.conj() for q in v] for v in orthogonal_complement(self).basis]

    def contains(self, v: Sequence[Quat]) -> bool:
        return d_rank(list(self.basis) + [tuple(v)]) == self.dim


def conj_transpose_rows(rows):
    """Rows of ``C`` -> columns of ``C*`` as D-vectors."""
    return [tuple(q.conj() for q in r) for r in rows]


def orthogonal_complement(Z: SubspaceD) -> SubspaceD:
    """``{y : x* y = 0 for all x in Z}``."""
    if Z.dim == 0:
        return SubspaceD.full(Z.algebra, Z.n)
    C = [tuple(q.conj() for q in v) for v in Z.basis]
    basis = solution_space(C, Z.n, Z.algebra)
    return SubspaceD(Z.algebra, Z.n, tuple(basis))


def height_subspace_D(O: Order, Z: SubspaceD, method: str = "basis") -> ExactHeight:
    """``H^O(Z)``.

    ``method="basis"`` uses a basis matrix ``X`` through ``X*`` (the
    constraint matrix of the complement); ``method="constraints"`` uses a
    matrix ``C`` with ``Z = ker C``. The two agree by duality.
    """
    if Z.dim == 0 or Z.dim == Z.n:
        return ONE
    if method == "basis":
        Xstar = [[q.conj() for q in v] for v in Z.basis]
        return H_O_matrix_C(O, Xstar)
    if method == "constraints":
        return H_O_matrix_C(O, Z.constraint_matrix())
    raise ValueError(f"unknown method {method!r}")
