import itertools
import random
from fractions import Fraction

import pytest

from qzero import linalg
from qzero.errors import CapExceeded, DegenerateRestriction, InvalidInput
from qzero.heights import SubspaceD
from qzero.instances import hyperbolic_form, hyperbolic_instance, planted_zero_instance, twisted_pair_form
from qzero.quaternion import Algebra, HermitianForm, coord_map, d_rank, eval_hermitian
from qzero.solver import (
    SolverConfig,
    find_isotropic_vector,
    isotropic_basis,
    radical,
    select_D_basis,
    solve,
)
from qzero.trace_form import TraceFormQ, build_trace_matrix, eval_Q, subspace_image

I2 = [[1, 0], [0, 1]]
I3 = [[1 if r == c else 0 for c in range(3)] for r in range(3)]


def brute_force_first_radius(M, r):
    """All isotropic integer vectors of sup-norm exactly ``r``, by exhaustion."""
    n = len(M)
    out = []
    for v in itertools.product(range(-r, r + 1), repeat=n):
        if max(map(abs, v)) == r and sum(v[a] * M[a][b] * v[b] for a in range(n) for b in range(n)) == 0:
            out.append(list(v))
    return out


def test_radical_examples():
    assert radical(TraceFormQ([[1, 0], [0, -1]]), I2) == []
    rad = radical(TraceFormQ([[1, 0], [0, 0]]), I2)
    assert len(rad) == 1 and rad[0][0] == 0 and rad[0][1] != 0
    A = Algebra(-1, -1)
    Qf = build_trace_matrix(hyperbolic_form(A, 2))
    assert radical(Qf, subspace_image(SubspaceD.full(A, 2))) == []


def test_find_isotropic_examples():
    q = TraceFormQ([[1, 0], [0, -1]])
    assert find_isotropic_vector(q, I2) == [1, 1]
    assert brute_force_first_radius(q.matrix, 1) == [[-1, -1], [-1, 1], [1, -1], [1, 1]]
    assert find_isotropic_vector(TraceFormQ([[0, 1], [1, 0]]), I2) == [1, 0]
    q3 = TraceFormQ([[1, 0, 0], [0, 1, 0], [0, 0, -2]])
    assert find_isotropic_vector(q3, I3) == [1, 1, 1]
    assert [1, 1, 1] in brute_force_first_radius(q3.matrix, 1)


def test_find_isotropic_cap():
    with pytest.raises(CapExceeded):
        find_isotropic_vector(TraceFormQ([[1, 0], [0, 1]]), I2, SolverConfig(enumeration_cap=5))
    with pytest.raises(CapExceeded):
        # x^2 - 3y^2 is anisotropic over Q but indefinite, so it reaches the cap
        find_isotropic_vector(TraceFormQ([[1, 0], [0, -3]]), I2, SolverConfig(enumeration_cap=8))
    with pytest.raises(InvalidInput):
        SolverConfig(enumeration_cap=0)


def test_isotropic_basis_examples():
    q = TraceFormQ([[1, 0], [0, -1]])
    assert isotropic_basis(q, I2, [1, 1]) == [[1, 1], [1, -1]]
    A = Algebra(-1, -1)
    Qf = build_trace_matrix(hyperbolic_form(A, 2))
    V = subspace_image(SubspaceD.full(A, 2))
    z1 = find_isotropic_vector(Qf, V)
    xs = isotropic_basis(Qf, V, z1)
    assert len(xs) == 8 and xs[0] == z1
    assert all(eval_Q(Qf, x) == 0 for x in xs)
    assert linalg.det(xs) != 0


def test_isotropic_basis_rejects_degenerate():
    with pytest.raises(DegenerateRestriction):
        isotropic_basis(TraceFormQ([[0, 0], [0, 1]]), I2, [1, 0])


def test_select_D_basis_examples():
    A = Algebra(-1, -1)
    xs = [coord_map(b) for b in A.basis()]
    assert select_D_basis(xs, A, 1) == [0]
    F = hyperbolic_form(A, 2)
    cert = solve(F)
    assert cert.selected[0] == 0 and len(cert.selected) == 2
    assert d_rank(cert.ys) == 2


def test_solve_hyperbolic_plane():
    A = Algebra(-1, -1)
    cert = solve(hyperbolic_form(A, 2))
    one, zero = A.one, A.zero
    assert cert.ys == [(one, zero), (zero, one)]
    assert [str(h) for h in cert.h_y] == ["1", "1"]
    assert cert.verdicts == {"single": "certified", "product": "certified"}
    assert all(cert.exact_checks.values()) and cert.ok


def test_solve_twisted_pair():
    for n in (1, 3):
        F = twisted_pair_form(n)
        cert = solve(F)
        A = F.algebra
        assert cert.ys[0] == (A.one, A.zero)
        assert eval_hermitian(F, cert.ys[0], cert.ys[0]).is_zero()
        assert cert.ok


def test_solve_anisotropic():
    A = Algebra(-1, -1)
    with pytest.raises(CapExceeded):
        solve(HermitianForm([[A.one]], A), cfg=SolverConfig(enumeration_cap=64))


def test_solve_degenerate_line():
    A = Algebra(-1, -1)
    Z = SubspaceD.from_basis(A, [(A.one, A.i)])
    with pytest.raises(DegenerateRestriction) as err:
        solve(hyperbolic_form(A, 2), Z)
    assert len(err.value.radical) == 4


def test_solve_input_checks():
    A, B = Algebra(-1, -1), Algebra(-1, -3)
    with pytest.raises(InvalidInput):
        solve(hyperbolic_form(A, 2), SubspaceD.full(B, 2))
    with pytest.raises(InvalidInput):
        solve(hyperbolic_form(A, 2), SubspaceD.full(A, 3))


def test_solve_planted_instances():
    rng = random.Random(31)
    for t in range(4):
        A = Algebra(*[(-1, -1), (-1, -3), (-2, -3), (-2, -5)][t])
        inst = planted_zero_instance(rng, A, 3, 2)
        assert eval_hermitian(inst.F, inst.vector, inst.vector).is_zero()
        cert = solve(inst.F, inst.Z, inst.O)
        assert cert.ok and cert.verdicts["single"] == "certified"
        assert all(inst.Z.contains(y) for y in cert.ys)


def test_parallel_matches_serial():
    A = Algebra(-1, -1)
    inst = hyperbolic_instance(A, 3)
    a = solve(inst.F, inst.Z, inst.O, SolverConfig(workers=1))
    b = solve(inst.F, inst.Z, inst.O, SolverConfig(workers=3))
    assert a.xs == b.xs and a.ys == b.ys and a.verdicts == b.verdicts


def test_line_in_larger_space_certifies():
    A = Algebra(-1, -1)
    Z = SubspaceD.from_basis(A, [(A.one, A.zero, A.zero), (A.zero, A.one, A.zero)])
    cert = solve(hyperbolic_form(A, 3), Z)
    assert cert.L == 2 and cert.N == 3 and cert.ok
    assert Fraction(cert.H_O_Z.base) == 1
