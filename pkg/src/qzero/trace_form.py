"""The rational quadratic form ``Q([x]) = Tr F(x, x) = 2 F(x)`` attached to a hermitian form."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, RankDeficient
from .exact import ExactHeight
from .heights import H_O_vector, Hfin_O, Hinf_D, SubspaceD, height_fin, height_H
from .orders import Order
from .quaternion import HermitianForm, Quat, coord_map


def trace_block(f: Quat) -> list[list[Fraction]]:
    """4x4 block of the trace matrix belonging to one coefficient ``f``."""
    a, b = f.algebra.alpha, f.algebra.beta
    f0, f1, f2, f3 = f.coords
    ab = a * b
    return [
        [2 * f0, 2 * a * f1, 2 * b * f2, -2 * ab * f3],
        [-2 * a * f1, -2 * a * f0, -2 * ab * f3, 2 * ab * f2],
        [-2 * b * f2, 2 * ab * f3, -2 * b * f0, -2 * ab * f1],
        [2 * ab * f3, -2 * ab * f2, 2 * ab * f1, 2 * ab * f0],
    ]


@dataclass(frozen=True)
class TraceFormQ:
    """Symmetric ``4N x 4N`` rational matrix of the trace form."""

    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, z: Sequence) -> Fraction:
        return eval_Q(self, z)

    def bilinear(self, z: Sequence, w: Sequence) -> Fraction:
        return bilinear_B(self, z, w)

    def entries(self) -> list[Fraction]:
        return [x for row in self.matrix for x in row]

    def gram(self, V: Sequence[Sequence]) -> list[list[Fraction]]:
        """Gram matrix ``V^T B V`` of the form restricted to the given vectors."""
        BV = [linalg.matvec(self.matrix, v) for v in V]
        return [[linalg.dot(u, bv) for bv in BV] for u in V]


def build_trace_matrix(F: HermitianForm) -> TraceFormQ:
    n = F.n
    M = [[Fraction(0)] * (4 * n) for _ in range(4 * n)]
    for m in range(n):
        for l in range(n):
            blk = trace_block(F.matrix[m][l])
            for u in range(4):
                for w in range(4):
                    M[4 * m + u][4 * l + w] = blk[u][w]
    return TraceFormQ(tuple(tuple(r) for r in M))


def bilinear_B(Qf: TraceFormQ, z: Sequence, w: Sequence) -> Fraction:
    if len(z) != Qf.dim or len(w) != Qf.dim:
        raise DimensionMismatch(f"form has dimension {Qf.dim}")
    return linalg.dot(z, linalg.matvec(Qf.matrix, w))


def eval_Q(Qf: TraceFormQ, z: Sequence) -> Fraction:
    return bilinear_B(Qf, z, z)


def subspace_image(Z: SubspaceD) -> list[list[Fraction]]:
    """Basis of ``V_Z = [Z]``: ``[y_l * eta_h]`` for ``eta = 1, i, j, k``, ordered by l then h."""
    cols = [coord_map(tuple(q * eta for q in y)) for y in Z.basis for eta in Z.algebra.basis()]
    if cols and linalg.rank(cols) != 4 * Z.dim:
        raise RankDeficient("basis of Z is not right D-independent")
    return cols


@dataclass(frozen=True)
class FormHeights:
    H_Q: ExactHeight
    Hinf_F: ExactHeight
    Hfin_O_F: ExactHeight
    H_O_F: ExactHeight
    Hfin_B: ExactHeight


def form_heights(F: HermitianForm, Qf: TraceFormQ, O: Order) -> FormHeights:
    """Heights of the coefficient matrix (as a vector in D^(N^2)) and of its trace matrix.

    The finite part is taken after clearing the coefficients into ``O``; the
    other quantities use the form as given.
    """
    entries = F.entries()
    a = O.clearing_integer(entries)
    return FormHeights(
        H_Q=height_H(Qf.entries()),
        Hinf_F=Hinf_D(entries),
        Hfin_O_F=Hfin_O(O, [q * a for q in entries]),
        H_O_F=H_O_vector(O, entries),
        Hfin_B=height_fin(Qf.entries()),
    )


def integral_scaling(F: HermitianForm, O: Order) -> int:
    """Least positive integer putting every coefficient in ``O`` and every trace entry in Z."""
    a = O.clearing_integer(F.entries())
    b = linalg.denominator_lcm(build_trace_matrix(F).entries())
    return math.lcm(a, b)
