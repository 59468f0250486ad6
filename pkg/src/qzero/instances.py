"""Builders for standard and random problem instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .heights import SubspaceD
from .orders import Order, standard_order
from .quaternion import Algebra, HermitianForm, Quat, d_rank, eval_hermitian


@dataclass(frozen=True)
class Instance:
    F: HermitianForm
    Z: SubspaceD
    O: Order
    name: str = ""
    vector: tuple[Quat, ...] | None = None

    @property
    def algebra(self) -> Algebra:
        return self.F.algebra


def hyperbolic_form(algebra: Algebra, n: int) -> HermitianForm:
    """Orthogonal sum of hyperbolic planes, padded with ``<1>`` when ``n`` is odd."""
    z, one = algebra.zero, algebra.one
    M = [[z] * n for _ in range(n)]
    for p in range(0, n - 1, 2):
        M[p][p + 1] = M[p + 1][p] = one
    if n % 2:
        M[n - 1][n - 1] = one
    return HermitianForm(M, algebra)


def twisted_pair_form(n: int, algebra: Algebra | None = None) -> HermitianForm:
    """The 2 x 2 form with off-diagonal entries ``i + n j`` and its conjugate."""
    algebra = algebra or Algebra(-1, -1)
    f = algebra.quat(0, 1, n, 0)
    return HermitianForm([[algebra.zero, f], [f.conj(), algebra.zero]], algebra)


def random_quat(rng: random.Random, algebra: Algebra, bound: int = 5, den: int = 1) -> Quat:
    return algebra.quat(*(Fraction(rng.randint(-bound, bound), rng.randint(1, den)) for _ in range(4)))


def random_hermitian(rng: random.Random, algebra: Algebra, n: int, bound: int = 3) -> HermitianForm:
    M = [[algebra.zero] * n for _ in range(n)]
    for m in range(n):
        M[m][m] = algebra.scalar(rng.randint(-bound, bound))
        for l in range(m + 1, n):
            M[m][l] = random_quat(rng, algebra, bound)
            M[l][m] = M[m][l].conj()
    return HermitianForm(M, algebra)


def random_vector(rng: random.Random, algebra: Algebra, n: int, bound: int = 5, den: int = 1) -> tuple[Quat, ...]:
    while True:
        v = tuple(random_quat(rng, algebra, bound, den) for _ in range(n))
        if any(not q.is_zero() for q in v):
            return v


def random_subspace(rng: random.Random, algebra: Algebra, n: int, L: int, bound: int = 5, den: int = 1) -> SubspaceD:
    while True:
        vs = [random_vector(rng, algebra, n, bound, den) for _ in range(L)]
        if d_rank(vs) == L:
            return SubspaceD.from_basis(algebra, vs)


def planted_zero_instance(
    rng: random.Random, algebra: Algebra, n: int, L: int, bound: int = 2, O: Order | None = None
) -> Instance:
    """Integral hermitian form with a short planted zero ``z`` in a random ``L``-dimensional ``Z``.

    ``z`` has integer coordinates in ``[-1, 1]``; ``Z`` is spanned by
    ``z`` and ``L - 1`` random vectors.  A random form ``G`` with ``G(z) = g``
    is corrected on one diagonal entry: ``N(z_m) G - g E_mm`` vanishes at ``z``.
    """
    while True:
        z = random_vector(rng, algebra, n, bound=1)
        others = [random_vector(rng, algebra, n, bound) for _ in range(L - 1)]
        if d_rank([z] + others) != L:
            continue
        G = random_hermitian(rng, algebra, n, bound)
        g = eval_hermitian(G, z, z).coords[0]
        m = next(r for r in range(n) if not z[r].is_zero())
        nz = z[m].norm()
        M = [[q * nz for q in row] for row in G.matrix]
        M[m][m] = M[m][m] - algebra.scalar(g)
        F = HermitianForm(M, algebra)
        if all(q.is_zero() for q in F.entries()):
            continue
        Z = SubspaceD.from_basis(algebra, [z] + others)
        return Instance(F, Z, O or standard_order(algebra), f"planted N={n} L={L}", vector=z)


def hyperbolic_instance(algebra: Algebra, n: int, O: Order | None = None) -> Instance:
    return Instance(hyperbolic_form(algebra, n), SubspaceD.full(algebra, n), O or standard_order(algebra), f"hyperbolic N={n}")


def twisted_pair_instance(n: int, O: Order | None = None) -> Instance:
    F = twisted_pair_form(n)
    return Instance(F, SubspaceD.full(F.algebra, 2), O or standard_order(F.algebra), f"twisted pair n={n}")
