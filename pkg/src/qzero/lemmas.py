"""Exact checks of the height comparison inequalities, one instance at a time."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .constants import s_t_constants
from .exact import ExactHeight
from .heights import (
    H_O_vector,
    Hinf_D,
    Hinf_matrix_C,
    Hinf_matrix_C_minors,
    SubspaceD,
    h_D,
    height_H,
    height_h,
    height_subspace_D,
    height_subspace_K,
    left_ideal_index,
    orthogonal_complement,
)
from .instances import Instance, random_hermitian, random_subspace, random_vector, twisted_pair_form
from .linalg import index_in_standard
from .orders import Order, compare_orders, frakM, frakN, hurwitz_order, make_order, standard_order
from .quaternion import Algebra, HermitianForm, Quat, coord_map
from .trace_form import build_trace_matrix, integral_scaling, subspace_image


def vector_chain(x: Sequence[Quat]) -> dict[str, bool]:
    """``t H([x]) <= H_inf(x) <= h(x) <= 2 s h([x])`` for a vector with coordinates in an order."""
    s, t = s_t_constants(x[0].algebra)
    flat = coord_map(x)
    H, hi, hd = height_H(flat), Hinf_D(x), h_D(x)
    return {
        "t*H([x]) <= Hinf(x)": t * H <= hi,
        "Hinf(x) <= h(x)": hi <= hd,
        "h(x) <= 2s*h([x])": hd <= 2 * s * height_h(flat),
    }


def form_comparison(F: HermitianForm, O: Order) -> dict[str, bool]:
    """Trace-form height comparison, after scaling ``F`` so that it is integral."""
    A = F.algebra
    s, t = s_t_constants(A)
    a = integral_scaling(F, O)
    Fa = F.scaled(a)
    HQ = height_H(build_trace_matrix(Fa).entries())
    upper = ExactHeight(Fraction(4 * abs(A.alpha * A.beta) * frakN(O))) * s * HQ
    return {
        "t/(2s^2)*H(Q) <= Hinf(F)": t / (2 * s * s) * HQ <= Hinf_D(Fa.entries()),
        "H_O(F) <= 4s|ab|N(O)*H(Q)": H_O_vector(O, Fa.entries()) <= upper,
    }


def order_sandwich(Z: SubspaceD, O1: Order, O2: Order) -> bool:
    M = compare_orders(O1, O2).M_value
    e = Z.n - Z.dim
    h1, h2 = height_subspace_D(O1, Z), height_subspace_D(O2, Z)
    return M ** (-e) * h1 <= h2 <= M**e * h1


def standard_order_sandwich(Z: SubspaceD, O: Order) -> bool:
    M = frakM(O)
    e = Z.n - Z.dim
    h, hD = height_subspace_D(O, Z), height_subspace_D(standard_order(Z.algebra), Z)
    return M ** (-e) * h <= hD <= M**e * h


def image_height(Z: SubspaceD) -> tuple[ExactHeight, ExactHeight]:
    """``(H(V_Z), H^{O_D}(Z)^4)``; equal when ``alpha = beta = -1``."""
    return height_subspace_K(subspace_image(Z)), height_subspace_D(standard_order(Z.algebra), Z) ** 4


def duality(Z: SubspaceD, O: Order) -> bool:
    return height_subspace_D(O, Z) == height_subspace_D(O, orthogonal_complement(Z))


def cauchy_binet(C: Sequence[Sequence[Quat]]) -> bool:
    return Hinf_matrix_C(C) == Hinf_matrix_C_minors(C)


@dataclass(frozen=True)
class TwistedPairReport:
    n: int
    Hfin_O_F: ExactHeight
    Hfin_B: ExactHeight
    ideal_index: int

    @property
    def matches_closed_forms(self) -> bool:
        return self.Hfin_O_F == ExactHeight(Fraction(1, 1 + self.n**2), 2) and self.Hfin_B == ExactHeight(Fraction(1, 2))


def twisted_pair(n: int) -> TwistedPairReport:
    """Finite heights of the twisted pair form over the Hurwitz order, from module indices."""
    F = twisted_pair_form(n)
    O = hurwitz_order(F.algebra)
    entries = [q for q in F.entries() if not q.is_zero()]
    idx = left_ideal_index(O, entries)
    B = build_trace_matrix(F).entries()
    ints = [int(b) for b in B if b]
    b_index = index_in_standard([[b] for b in ints], 1)
    return TwistedPairReport(n, ExactHeight(Fraction(1, idx), 4), ExactHeight(Fraction(1, b_index)), idx)


def extra_orders(algebra: Algebra) -> list[Order]:
    """Orders used for comparisons: O_D, ``Z + Z i + 2Z j + 2Z k``, ``Z + 2 O_D``, and Hurwitz when available."""
    A = algebra
    out = [
        standard_order(A),
        make_order(A, [A.one, A.i, A.j * 2, A.k * 2]),
        make_order(A, [A.one, A.i * 2, A.j * 2, A.k * 2]),
    ]
    if (A.alpha, A.beta) == (-1, -1):
        out.append(hurwitz_order(A))
    return out


def is_scaled_standard(O: Order) -> bool:
    """True for ``Z + 2 O_D``.

    This order is not Gorenstein, and the height of a subspace and of its
    orthogonal complement can differ there, so duality checks skip it.
    """
    A = O.algebra
    return O == make_order(A, [A.one, A.i * 2, A.j * 2, A.k * 2])


def check_lemmas(inst: Instance) -> dict[str, bool | None]:
    """Run every comparison that applies to an instance; ``None`` marks a check that does not apply."""
    F, Z, O = inst.F, inst.Z, inst.O
    A = F.algebra
    OD = standard_order(A)
    out: dict[str, bool | None] = {}
    vecs = list(Z.basis) + ([inst.vector] if inst.vector else [])
    for k, v in enumerate(vecs):
        if all(OD.contains(q) for q in v):
            for name, ok in vector_chain(v).items():
                out[f"vector[{k}]: {name}"] = ok
    for name, ok in form_comparison(F, O).items():
        out[f"form: {name}"] = ok
    proper = 0 < Z.dim < Z.n
    for O2 in extra_orders(A):
        out[f"order sandwich vs disc {O2.discriminant}"] = order_sandwich(Z, O, O2) if proper else None
    out["O_D sandwich"] = standard_order_sandwich(Z, O) if proper else None
    out["duality"] = duality(Z, O) if proper and not is_scaled_standard(O) else None
    if (A.alpha, A.beta) == (-1, -1):
        lhs, rhs = image_height(Z)
        out["H(V_Z) = H_OD(Z)^4"] = lhs == rhs
    else:
        out["H(V_Z) = H_OD(Z)^4"] = None
    out["cauchy-binet"] = cauchy_binet(Z.constraint_matrix()) if proper else None
    return out


@dataclass
class SelftestReport:
    seed: int
    iters: int
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.counts[name] = self.counts.get(name, 0) + 1
        if not ok:
            self.failures.append(f"{name}: {detail}")


_ALGEBRAS = [(-1, -1), (-1, -3), (-2, -3), (-2, -5)]


def selftest(seed: int = 0, iters: int = 100) -> SelftestReport:
    """Randomised exact checks of the comparison lemmas."""
    rng = random.Random(seed)
    rep = SelftestReport(seed, iters)
    for it in range(iters):
        A = Algebra(*_ALGEBRAS[it % len(_ALGEBRAS)])
        orders = extra_orders(A)
        O = orders[it % len(orders)]
        n = rng.randint(2, 3)
        L = rng.randint(1, n - 1)
        x = random_vector(rng, A, n, bound=4)
        for name, ok in vector_chain(x).items():
            rep.record(name, ok, f"x={x}")
        F = random_hermitian(rng, A, n, bound=3)
        if any(not q.is_zero() for q in F.entries()):
            for name, ok in form_comparison(F, O).items():
                rep.record(name, ok, f"F={F.matrix}")
        Z = random_subspace(rng, A, n, L, bound=3, den=2)
        O2 = orders[(it + 1) % len(orders)]
        rep.record("order sandwich", order_sandwich(Z, O, O2), f"Z={Z.basis}")
        rep.record("O_D sandwich", standard_order_sandwich(Z, O), f"Z={Z.basis}")
        if not is_scaled_standard(O):
            rep.record("duality", duality(Z, O), f"Z={Z.basis}")
        rep.record("cauchy-binet", cauchy_binet(Z.constraint_matrix()), f"Z={Z.basis}")
        if (A.alpha, A.beta) == (-1, -1):
            lhs, rhs = image_height(Z)
            rep.record("H(V_Z) = H_OD(Z)^4", lhs == rhs, f"Z={Z.basis}: {lhs} vs {rhs}")
    for n in range(1, 11):
        rep.record("twisted pair closed forms", twisted_pair(n).matches_closed_forms, f"n={n}")
    return rep
