import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qzero import linalg
from qzero.errors import NotSquare, NotSublattice, RankDeficient, RankMismatch
from qzero.linalg import IntLattice


def int_matrix(rows, cols, lo=-6, hi=6):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_hnf_identity():
    H, U = linalg.hnf(linalg.identity(3))
    assert H == linalg.identity(3)
    assert U == linalg.identity(3)


def test_hnf_small_example_keeps_det():
    M = [[2, 1], [0, 1]]
    H, U = linalg.hnf(M)
    assert H == linalg.matmul(M, U)
    assert abs(linalg.det(H)) == 2
    assert H[0][1] == 0 and H[0][0] > 0 and H[1][1] > 0
    assert 0 <= H[1][0] < H[1][1]


def test_hnf_zero_column_drops_rank():
    H, _ = linalg.hnf([[1, 0, 2], [3, 0, 6]])
    assert len(linalg.hnf_pivots(H)) == 1
    assert all(H[r][c] == 0 for r in range(2) for c in (1, 2))


@given(int_matrix(3, 3))
def test_hnf_preserves_abs_det(M):
    H, U = linalg.hnf(M)
    assert H == linalg.matmul(M, U)
    assert abs(linalg.det(U)) == 1
    assert abs(linalg.det(H)) == abs(linalg.det(M))


@given(int_matrix(4, 4, -20, 20))
def test_det_matches_sympy(M):
    assert linalg.det(M) == sympy.Matrix(M).det()


@given(int_matrix(3, 5))
def test_rank_matches_sympy(M):
    assert linalg.rank(M) == sympy.Matrix(M).rank()


def test_lattice_index_examples():
    Z4 = IntLattice.from_generators(linalg.identity(4), 4)
    two = IntLattice(4, tuple(tuple(2 * x for x in row) for row in linalg.identity(4)))
    assert linalg.lattice_index(Z4, two) == 16
    Z2 = IntLattice(2, ((1, 0), (0, 1)))
    assert linalg.lattice_index(Z2, IntLattice(2, ((2, 0), (0, 3)))) == 6


def test_lattice_index_errors():
    Z2 = IntLattice(2, ((1, 0), (0, 1)))
    with pytest.raises(NotSublattice):
        linalg.lattice_index(IntLattice(2, ((2, 0), (0, 1))), Z2)
    with pytest.raises(RankMismatch):
        linalg.lattice_index(Z2, IntLattice(2, ((1, 0),)))
    with pytest.raises(RankMismatch):
        linalg.lattice_index(IntLattice(3, ((1, 0, 0),)), IntLattice(3, ((0, 1, 0),)))


def test_lattice_index_chain_multiplies():
    rng = random.Random(3)
    for _ in range(30):
        A = IntLattice(3, tuple(tuple(c) for c in linalg.identity(3)))
        T1 = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        T2 = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        if linalg.det(T1) == 0 or linalg.det(T2) == 0:
            continue
        B = IntLattice(3, tuple(tuple(r) for r in linalg.transpose(T1)))
        Cm = linalg.matmul(T1, T2)
        C = IntLattice(3, tuple(tuple(r) for r in linalg.transpose(Cm)))
        assert linalg.lattice_index(A, B) * linalg.lattice_index(B, C) == linalg.lattice_index(A, C)


def test_kernel_examples():
    k = linalg.kernel_basis([[1, 1]])
    assert len(k) == 1 and k[0][0] == -k[0][1] != 0
    assert linalg.kernel_basis(linalg.identity(3)) == []


@given(int_matrix(2, 4))
def test_kernel_multiplies_to_zero(M):
    ks = linalg.kernel_basis(M)
    assert len(ks) == 4 - linalg.rank(M)
    for k in ks:
        assert all(x == 0 for x in linalg.matvec(M, k))


def test_saturate_examples():
    assert linalg.saturate([[2, 4]]).basis == ((1, 2),)
    sat = linalg.saturate([[1, 0, 1], [0, 2, 0]])
    assert IntLattice.from_generators([[1, 0, 1], [0, 1, 0]], 3) == sat
    ident = linalg.saturate(linalg.identity(3))
    assert linalg.lattice_index(IntLattice.from_generators(linalg.identity(3), 3), ident) == 1
    with pytest.raises(RankDeficient):
        linalg.saturate([[1, 2], [2, 4]])


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=2, max_size=2))
def test_saturate_idempotent(vs):
    if linalg.rank(vs) < 2:
        return
    s1 = linalg.saturate(vs)
    s2 = linalg.saturate([list(b) for b in s1.basis])
    assert s1 == s2
    for v in vs:
        assert v in s1


def test_integer_sqrt():
    assert linalg.integer_sqrt_exact(16) == 4
    with pytest.raises(NotSquare):
        linalg.integer_sqrt_exact(5)
    assert linalg.rational_root_exact(Fraction(8, 27), 3) == Fraction(2, 3)
    assert linalg.rational_root_exact(Fraction(2), 2) is None


def test_index_in_standard_matches_abs_det():
    rng = random.Random(9)
    for _ in range(40):
        M = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        d = abs(linalg.det(M))
        if d == 0:
            with pytest.raises(RankDeficient):
                linalg.index_in_standard(M, 3)
        else:
            assert linalg.index_in_standard(M, 3) == d


def test_solve_and_inverse():
    M = [[2, 1], [1, 1]]
    assert linalg.matmul(M, linalg.inverse(M)) == linalg.identity(2)
    assert linalg.solve(M, [3, 2]) == [1, 1]
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None


def test_primitive_keeps_sign():
    c, v = linalg.primitive([Fraction(-2, 3), Fraction(4, 3)])
    assert c == Fraction(2, 3) and v == [-1, 2]
    assert linalg.normalize_sign([0, -1, 2]) == [0, 1, -2]
