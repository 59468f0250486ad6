"""Orders in a definite quaternion algebra and the constants attached to them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg
from .errors import (
    AlgebraMismatch,
    CoordinateNotInOrder,
    Degenerate,
    InvalidInput,
    MissingUnit,
    NotClosed,
    NotSquare,
)
from .exact import ExactHeight
from .quaternion import Algebra, Quat, coord_map


class Order:
    """A Z-lattice of rank 4 in D that contains 1 and is closed under products.

    Construct through :func:`make_order` (or the helpers below) so that the
    order axioms are checked.
    """

    def __init__(self, algebra: Algebra, basis: Sequence[Quat], _checked: bool = False):
        if not _checked:
            raise TypeError("use make_order() to construct an Order")
        self.algebra = algebra
        self.basis = tuple(basis)
        self.coord_matrix = linalg.columns_to_matrix([coord_map(w) for w in self.basis], 4)
        self._inv = linalg.inverse(self.coord_matrix)
        den = linalg.denominator_lcm(x for row in self.coord_matrix for x in row)
        H, _ = linalg.hnf([[int(x * den) for x in row] for row in self.coord_matrix])
        # normal form of the lattice; two bases give equal orders iff keys agree
        self.hnf_cache = (den, tuple(tuple(row) for row in H))

    def __eq__(self, other):
        if not isinstance(other, Order):
            return NotImplemented
        return self.algebra == other.algebra and self.hnf_cache == other.hnf_cache

    def __hash__(self):
        return hash((self.algebra, self.hnf_cache))

    def __repr__(self):
        return f"Order({self.algebra}, basis={list(self.basis)})"

    # -- membership ---------------------------------------------------------

    def coordinates(self, x: Quat) -> list[Fraction]:
        """Coefficients of ``x`` in the order basis."""
        return linalg.matvec(self._inv, coord_map(x))

    def contains(self, x: Quat) -> bool:
        return all(t.denominator == 1 for t in self.coordinates(x))

    __contains__ = contains

    def integer_coordinates(self, x: Quat) -> list[int]:
        t = self.coordinates(x)
        if any(c.denominator != 1 for c in t):
            raise CoordinateNotInOrder(f"{x} is not in the order")
        return [int(c) for c in t]

    def vector_coordinates(self, v: Sequence[Quat]) -> list[int]:
        out: list[int] = []
        for x in v:
            out.extend(self.integer_coordinates(x))
        return out

    def clearing_integer(self, xs: Sequence[Quat]) -> int:
        """Smallest positive integer ``a`` with ``a x`` in the order for every ``x``."""
        return linalg.denominator_lcm(t for x in xs for t in self.coordinates(x))

    # -- invariants ---------------------------------------------------------

    @cached_property
    def discriminant(self) -> int:
        return discriminant(self)

    def module_index(self, gens: Sequence[Sequence[Quat]], m: int) -> int:
        """Index in ``O^m`` of the Z-span of the given D-vectors of length ``m``."""
        int_gens = [self.vector_coordinates(g) for g in gens]
        return linalg.index_in_standard(int_gens, 4 * m)


def make_order(algebra: Algebra, basis: Sequence) -> Order:
    """Validate four elements as a Z-basis of an order."""
    basis = [algebra.coerce(b) for b in basis]
    if len(basis) != 4:
        raise InvalidInput(f"an order basis has 4 elements, got {len(basis)}")
    if linalg.rank([coord_map(b) for b in basis]) < 4:
        raise Degenerate("basis elements are linearly dependent")
    O = Order(algebra, basis, _checked=True)
    if not O.contains(algebra.one):
        raise MissingUnit("1 is not in the Z-span of the basis")
    for a in basis:
        for b in basis:
            if not O.contains(a * b):
                raise NotClosed(f"product {a} * {b} = {a * b} leaves the lattice")
    return O


def standard_order(algebra: Algebra) -> Order:
    """``O_D = Z + Z i + Z j + Z k``."""
    return make_order(algebra, algebra.basis())


def hurwitz_order(algebra: Algebra | None = None) -> Order:
    """The Hurwitz order of ``(-1, -1 / Q)``."""
    algebra = algebra or Algebra(-1, -1)
    if (algebra.alpha, algebra.beta) != (-1, -1):
        raise InvalidInput("the Hurwitz order lives in (-1, -1 / Q)")
    h = Fraction(1, 2)
    return make_order(algebra, [algebra.quat(h, h, h, h), algebra.i, algebra.j, algebra.k])


def discriminant(O: Order) -> int:
    """``det(Tr(w_h w_n))`` over the order basis (signed)."""
    gram = [[(a * b).trace() for b in O.basis] for a in O.basis]
    d = linalg.det(gram)
    if d.denominator != 1:
        raise InvalidInput(f"non-integral discriminant {d}; basis is not integral")
    return int(d)


def sqrt_abs_discriminant(O: Order) -> ExactHeight:
    """``sqrt|disc|``, kept as a radical when it is not a perfect square."""
    return ExactHeight(Fraction(abs(O.discriminant)), 2)


def disc_is_square(O: Order) -> bool:
    try:
        linalg.integer_sqrt_exact(abs(O.discriminant))
    except NotSquare:
        return False
    return True


def frakM(O: Order) -> ExactHeight:
    """``max(sqrt|disc| / |4 alpha beta|, its reciprocal)``; 1 for ``O_D``."""
    ab4 = abs(4 * O.algebra.alpha * O.algebra.beta)
    r = Fraction(abs(O.discriminant), ab4 * ab4)
    return ExactHeight(max(r, 1 / r), 2)


def frakN(O: Order) -> int:
    """Least positive integer ``g`` with ``g i, g j, g k`` all in the order."""
    A = O.algebra
    return linalg.denominator_lcm(t for x in (A.i, A.j, A.k) for t in O.coordinates(x))


@dataclass(frozen=True)
class OrderComparison:
    U1_norm: ExactHeight
    U2_norm: ExactHeight
    M_value: ExactHeight


def compare_orders(O1: Order, O2: Order) -> OrderComparison:
    """Norms of the two order ideals of the pair and their maximum."""
    if O1.algebra != O2.algebra:
        raise AlgebraMismatch("orders live in different algebras")
    d1, d2 = abs(O1.discriminant), abs(O2.discriminant)
    u1 = ExactHeight(Fraction(d2, d1), 2)
    u2 = ExactHeight(Fraction(d1, d2), 2)
    return OrderComparison(u1, u2, max(u1, u2))


def contains(O: Order, x: Quat) -> bool:
    return O.contains(x)


def rescale_to_order(vs: Sequence[Sequence[Quat]], O: Order) -> Fraction:
    """Least positive rational ``b`` such that ``b v`` lies in ``O^N`` for all ``v``."""
    coords = [t for v in vs for x in v for t in O.coordinates(x)]
    if not any(coords):
        raise InvalidInput("cannot rescale zero vectors")
    content, _ = linalg.primitive(coords)
    return 1 / content


def lattice_of(O: Order) -> linalg.IntLattice:
    """The order as an integer lattice, after scaling by its coordinate denominator."""
    den, _ = O.hnf_cache
    cols = [[int(x * den) for x in coord_map(w)] for w in O.basis]
    return linalg.IntLattice(4, tuple(tuple(c) for c in cols))
