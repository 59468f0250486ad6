"""Bases of small zeros of a hermitian form on a right D-subspace.

The pipeline works on the rational side: build the trace matrix, take the
image ``V`` of the subspace in ``Q^(4N)``, find one zero of the trace form
on ``V`` by box enumeration, complete it to a basis of zeros through a
hyperbolic partner, and pick ``L`` of those vectors that are right
D-independent once mapped back to ``D^N``.  The result is checked exactly
against the small-zero bounds.
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from . import constants, linalg
from .errors import CapExceeded, DegenerateRestriction, InternalAssertion, InvalidInput, RankDeficient
from .exact import ExactHeight
from .heights import Hinf_D, SubspaceD, h_D, height_H, height_h, height_subspace_D, height_subspace_K
from .orders import Order, standard_order
from .quaternion import HermitianForm, Quat, coord_unmap, d_rank, eval_hermitian
from .trace_form import TraceFormQ, build_trace_matrix, subspace_image

log = logging.getLogger(__name__)

# keep int64 products below this to rule out overflow
_INT64_SAFE = 2**62
# rows of coefficient prefixes handled per vectorised block
_BLOCK_ROWS = 200_000


@dataclass(frozen=True)
class SolverConfig:
    enumeration_cap: int = 64
    prefer_minimal_first_vector: bool = True
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.enumeration_cap < 1:
            raise InvalidInput("enumeration_cap must be at least 1")
        if self.workers < 1:
            raise InvalidInput("workers must be at least 1")


# ----------------------------------------------------------------------------
# rational side


def radical(Qf: TraceFormQ, V: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the radical of the trace form restricted to ``span(V)``."""
    if not V:
        return []
    if linalg.rank(V) != len(V):
        raise RankDeficient("V must have full column rank")
    kern = linalg.kernel_basis(Qf.gram(V), ncols=len(V))
    return [[sum(k[i] * V[i][r] for i in range(len(V))) for r in range(len(V[0]))] for k in kern]


def _is_definite(G: Sequence[Sequence]) -> bool:
    """Sylvester's criterion on the exact leading minors."""
    minors = [linalg.det([row[:m] for row in G[:m]]) for m in range(1, len(G) + 1)]
    if all(d > 0 for d in minors):
        return True
    return all((d < 0) if m % 2 == 0 else (d > 0) for m, d in enumerate(minors))


def _reduced_lattice_basis(V: Sequence[Sequence]) -> list[list[int]]:
    """LLL-reduced basis of ``span(V) ∩ Z^n``."""
    lat = linalg.saturate(V)
    rows = [list(b) for b in lat.basis]
    dm = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), lat.ambient_dim), ZZ)
    red = dm.lll().to_Matrix()
    return [[int(red[i, j]) for j in range(red.cols)] for i in range(red.rows)]


def _key(z: Sequence[int]) -> tuple:
    """Total order on candidate zeros: height, then squared length, then lexicographically largest."""
    s = linalg.normalize_sign(z)
    return (max(abs(x) for x in s), sum(x * x for x in s), tuple(-x for x in s))


def _isqrt_vec(D):
    root = np.sqrt(np.maximum(D, 0).astype(np.float64)).astype(np.int64)
    # float sqrt can be off by one near large values
    for _ in range(2):
        root = np.where(root * root > D, root - 1, root)
        root = np.where((root + 1) * (root + 1) <= D, root + 1, root)
    return root


def _search_block(args) -> tuple | None:
    """Best zero among coefficient vectors starting with the fixed ``head``."""
    G, S, r, head = args
    m = len(G)
    rng = range(-r, r + 1)
    best = None
    tail_dims = m - 1 - len(head)
    a = G[m - 1][m - 1]
    bound = max(abs(x) for row in G for x in row) * (m * r) ** 2
    use_np = 16 * bound * bound < _INT64_SAFE
    Gnp = np.array(G, dtype=np.int64 if use_np else object)
    tails = list(itertools.product(rng, repeat=tail_dims))
    P = np.array([head + t for t in tails], dtype=Gnp.dtype).reshape(len(tails), m - 1)
    Gp = Gnp[: m - 1, : m - 1]
    c = np.einsum("ij,jk,ik->i", P, Gp, P)
    b = 2 * (P @ Gnp[: m - 1, m - 1])
    sols: list[tuple[np.ndarray, int]] = []
    if a != 0:
        D = b * b - 4 * a * c
        if use_np:
            root = _isqrt_vec(D)
            ok = (D >= 0) & (root * root == D)
            idx = np.nonzero(ok)[0]
            roots = root[idx]
        else:
            idx, roots = [], []
            for t, d in enumerate(D):
                if d >= 0:
                    s = math.isqrt(int(d))
                    if s * s == d:
                        idx.append(t)
                        roots.append(s)
        for t, s in zip(idx, roots):
            bt = int(b[t])
            for num in {-bt + int(s), -bt - int(s)}:
                if num % (2 * a) == 0:
                    sols.append((P[t], num // (2 * a)))
    else:
        for t in range(len(P)):
            bt, ct = int(b[t]), int(c[t])
            if bt != 0:
                if ct % bt == 0:
                    sols.append((P[t], -ct // bt))
            elif ct == 0:
                sols.extend((P[t], x) for x in rng)
    Snp = np.array(S, dtype=object)
    for pref, last in sols:
        if abs(last) > r:
            continue
        coeffs = [int(x) for x in pref] + [last]
        if max(abs(x) for x in coeffs) != r:
            continue
        z = [int(x) for x in np.array(coeffs, dtype=object) @ Snp]
        if not any(z):
            continue
        _, z = linalg.primitive(z)
        k = _key(z)
        if best is None or k < best[0]:
            best = (k, linalg.normalize_sign(z))
    return best


def _search_radius(G, S, r, workers: int):
    m = len(G)
    if m == 1:
        # a one-dimensional lattice has a zero only if its generator is isotropic
        return (_key(S[0]), linalg.normalize_sign(S[0])) if G[0][0] == 0 else None
    # fix enough leading coordinates that each job stays small
    k = 0
    while k < m - 1 and (2 * r + 1) ** (m - 1 - k) > _BLOCK_ROWS:
        k += 1
    jobs = [(G, S, r, head) for head in itertools.product(range(-r, r + 1), repeat=k)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_search_block, jobs))
    else:
        results = [_search_block(j) for j in jobs]
    found = [x for x in results if x is not None]
    return min(found) if found else None


def find_isotropic_vector(Qf: TraceFormQ, V: Sequence[Sequence], cfg: SolverConfig = SolverConfig()) -> list[int]:
    """Smallest-key primitive integer zero of the form on ``span(V)``.

    Coefficient vectors over an LLL-reduced basis of the saturated lattice
    are enumerated in shells of sup-radius ``1, 2, ...``.  At the first
    radius with a zero, the zero minimising :func:`_key` is
    returned, so the result does not depend on scheduling.
    """
    S = _reduced_lattice_basis(V)
    Gq = Qf.gram(S)
    den = linalg.denominator_lcm(x for row in Gq for x in row)
    G = [[int(x * den) for x in row] for row in Gq]
    if _is_definite(G):
        raise CapExceeded("the form is definite on this space and has no nonzero zero")
    for r in range(1, cfg.enumeration_cap + 1):
        res = _search_radius(G, S, r, cfg.workers)
        log.debug("radius %d: %s", r, "hit" if res else "none")
        if res is not None:
            return res[1]
    raise CapExceeded(f"no zero with coefficients up to {cfg.enumeration_cap}")


def isotropic_basis(Qf: TraceFormQ, V: Sequence[Sequence], z1: Sequence) -> list[list[int]]:
    """Basis ``z1, y, x_3, ...`` of ``span(V)`` made entirely of zeros of the form."""
    rad = radical(Qf, V)
    if rad:
        raise DegenerateRestriction("the trace form is degenerate on the subspace", rad)
    z1 = [Fraction(x) for x in z1]
    if not any(z1) or Qf(z1) != 0:
        raise InvalidInput("z1 must be a nonzero zero of the form")
    B = Qf.bilinear
    u = next((v for v in V if B(z1, v) != 0), None)
    if u is None:
        raise InternalAssertion("no hyperbolic partner on a nondegenerate space")
    b = B(z1, u)
    qu = Qf(u)
    y = [ui / b - qu / (2 * b * b) * zi for ui, zi in zip(u, z1)]
    out = [z1, y]
    span = [z1, y]
    for v in V:
        w = [vi - B(v, y) * zi - B(v, z1) * yi for vi, zi, yi in zip(v, z1, y)]
        if linalg.rank(span + [w]) == len(span):
            continue
        span.append(w)
        qw = Qf(w)
        out.append([wi + zi - qw / 2 * yi for wi, zi, yi in zip(w, z1, y)])
    if len(out) != len(V):
        raise InternalAssertion("completion did not reach a full basis")
    return [linalg.normalize_sign(linalg.primitive(x)[1]) for x in out]


def select_D_basis(xs: Sequence[Sequence], algebra, L: int) -> list[int]:
    """Indices ``0 = l_1 < ... < l_L`` of right D-independent vectors among ``xs``."""
    order = [0] + sorted(range(1, len(xs)), key=lambda i: (height_h(xs[i]), i))
    chosen: list[int] = []
    vecs: list[tuple[Quat, ...]] = []
    for i in order:
        y = coord_unmap(xs[i], algebra)
        if d_rank(vecs + [y]) > len(vecs):
            chosen.append(i)
            vecs.append(y)
        if len(chosen) == L:
            return sorted(chosen)
    raise InternalAssertion(f"only {len(chosen)} of {L} independent vectors found")


# ----------------------------------------------------------------------------
# certificate


@dataclass
class ZeroBasisCertificate:
    F: HermitianForm
    Z: SubspaceD
    O: Order
    trace_matrix: TraceFormQ
    V: list[list[Fraction]]
    xs: list[list[int]]
    selected: list[int]
    ys: list[tuple[Quat, ...]]
    h_y: list[ExactHeight]
    H_O_Z: ExactHeight
    Hinf_F: ExactHeight
    H_Q: ExactHeight
    H_VZ: ExactHeight
    A: constants.BoundValue
    rhs_single: constants.BoundValue
    rhs_product: constants.BoundValue
    verdicts: dict[str, str]
    exact_checks: dict[str, bool]
    vaaler: dict[str, str] = field(default_factory=dict)

    @property
    def N(self) -> int:
        return self.F.n

    @property
    def L(self) -> int:
        return self.Z.dim

    @property
    def ok(self) -> bool:
        return all(self.exact_checks.values()) and all(v != constants.VIOLATED for v in self.verdicts.values())


def _worst(verdicts) -> str:
    rank = {constants.CERTIFIED: 0, constants.LIKELY: 1, constants.VIOLATED: 2}
    return max(verdicts, key=rank.__getitem__, default=constants.CERTIFIED)


def evaluate_certificate(
    F: HermitianForm, Z: SubspaceD, O: Order, ys: Sequence[Sequence[Quat]]
) -> tuple[dict[str, bool], dict[str, str], dict]:
    """Exact checks and bound verdicts for a proposed basis ``ys`` of zeros."""
    A = F.algebra
    OD = standard_order(A)
    checks = {
        "zeros": all(eval_hermitian(F, y, y).is_zero() for y in ys),
        "d_rank": d_rank(list(ys)) == Z.dim and all(Z.contains(y) for y in ys),
        "in_O_D": all(OD.contains(q) for y in ys for q in y),
    }
    h_y = [h_D(y) for y in ys]
    H_O_Z = height_subspace_D(O, Z)
    Hinf_F = Hinf_D(F.entries())
    A_val = constants.A_K(F.n, Z.dim, A, O)
    rhs1, rhs2 = constants.theorem_rhs(F.n, Z.dim, A, O, Hinf_F, H_O_Z)
    verdicts = {
        "single": constants.verdict(h_y[0], rhs1),
        "product": _worst(constants.verdict(h_y[0] * h, rhs2) for h in h_y),
    }
    extra = {"h_y": h_y, "H_O_Z": H_O_Z, "Hinf_F": Hinf_F, "A": A_val, "rhs_single": rhs1, "rhs_product": rhs2}
    return checks, verdicts, extra


def solve(F: HermitianForm, Z: SubspaceD | None = None, O: Order | None = None, cfg: SolverConfig = SolverConfig()) -> ZeroBasisCertificate:
    """Basis of zeros of ``F`` on ``Z`` with its certificate."""
    A = F.algebra
    Z = Z if Z is not None else SubspaceD.full(A, F.n)
    O = O if O is not None else standard_order(A)
    if Z.algebra != A or O.algebra != A:
        raise InvalidInput("form, subspace and order must share the algebra")
    if Z.n != F.n:
        raise InvalidInput(f"subspace lives in D^{Z.n}, form has {F.n} variables")
    if Z.dim == 0:
        raise InvalidInput("the subspace must be nonzero")
    Qf = build_trace_matrix(F)
    V = subspace_image(Z)
    rad = radical(Qf, V)
    if rad:
        raise DegenerateRestriction("the trace form is degenerate on the subspace", rad)
    z1 = find_isotropic_vector(Qf, V, cfg)
    xs = isotropic_basis(Qf, V, z1)
    sel = select_D_basis(xs, A, Z.dim)
    ys = [coord_unmap(xs[i], A) for i in sel]
    checks, verdicts, extra = evaluate_certificate(F, Z, O, ys)
    H_Q = height_H(Qf.entries())
    H_VZ = height_subspace_K(V)
    b1, b2 = constants.vaaler_bounds(Z.dim, F.n, H_Q, H_VZ)
    hx = [height_h(x) for x in xs]
    vaaler = {
        "single": constants.verdict(hx[0], b1),
        "product": _worst(constants.verdict(hx[0] * hx[i], b2) for i in sel),
    }
    cert = ZeroBasisCertificate(
        F=F, Z=Z, O=O, trace_matrix=Qf, V=V, xs=xs, selected=sel, ys=ys,
        h_y=extra["h_y"], H_O_Z=extra["H_O_Z"], Hinf_F=extra["Hinf_F"], H_Q=H_Q, H_VZ=H_VZ,
        A=extra["A"], rhs_single=extra["rhs_single"], rhs_product=extra["rhs_product"],
        verdicts=verdicts, exact_checks=checks, vaaler=vaaler,
    )
    if not all(checks.values()):
        raise InternalAssertion(f"exact checks failed: {checks}")
    return cert
