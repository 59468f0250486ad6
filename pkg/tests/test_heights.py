import itertools
import random
from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qzero.errors import ZeroVector
from qzero.exact import ONE, ExactHeight
from qzero.heights import (
    H_O_vector,
    Hfin_O,
    Hinf_D,
    Hinf_matrix_C,
    Hinf_matrix_C_minors,
    SubspaceD,
    abs_v,
    conj_transpose_rows,
    grassmann,
    h_D,
    height_H,
    height_h,
    height_subspace_D,
    height_subspace_K,
    height_subspace_K_gram,
    orthogonal_complement,
    product_formula,
)
from qzero.instances import random_quat, random_subspace, random_vector
from qzero.lemmas import duality, extra_orders, image_height, is_scaled_standard, vector_chain
from qzero.orders import hurwitz_order, make_order, standard_order
from qzero.quaternion import Algebra, d_rank, vec_right_mul

from .conftest import ALGEBRA_GRID

nonzero_fracs = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000).filter(bool)


def plucker_height_oracle(cols):
    """Subspace height from sympy minors: L2 norm of the primitive Plücker vector."""
    X = sympy.Matrix(cols).T
    n, L = X.shape
    minors = [X.extract(list(rows), list(range(L))).det() for rows in itertools.combinations(range(n), L)]
    den = sympy.ilcm(*[sympy.Rational(m).q for m in minors])
    ints = [int(m * den) for m in minors]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return ExactHeight(Fraction(sum((v // g) ** 2 for v in ints)), 2)


def test_K_heights_examples():
    assert height_H([2, 4]) == height_H([1, 2]) == 2
    assert height_h([Fraction(1, 2)]) == 2
    assert ExactHeight(2, 2) == height_subspace_K([[1, 0, 1]])
    with pytest.raises(ZeroVector):
        height_H([0, 0])


@given(nonzero_fracs)
def test_product_formula(a):
    assert product_formula(a) == 1


@given(st.lists(nonzero_fracs, min_size=1, max_size=4))
def test_h_dominates_H(x):
    assert height_h(x) >= height_H(x)


def test_grassmann_examples():
    X = [[1, 0], [0, 1], [1, 1]]
    assert grassmann(X) == [1, 1, -1]
    assert grassmann([[1, 0], [0, 1], [0, 0]]) == [1, 0, 0]
    assert sum(g * g for g in grassmann(X)) == (sympy.Matrix(X).T * sympy.Matrix(X)).det() == 3


def test_subspace_K_examples():
    ident = [[1 if r == c else 0 for r in range(3)] for c in range(3)]
    assert height_subspace_K(ident) == ONE
    assert height_subspace_K([[1, 0, 1], [0, 1, 1]]) == ExactHeight(3, 2)


def test_subspace_K_against_sympy_and_basis_change():
    rng = random.Random(7)
    for _ in range(60):
        n, L = rng.randint(2, 5), rng.randint(1, 3)
        L = min(L, n - 1)
        cols = [[Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(n)] for _ in range(L)]
        if sympy.Matrix(cols).rank() < L:
            continue
        h = height_subspace_K(cols)
        assert h == plucker_height_oracle(cols)
        assert h == height_subspace_K_gram(cols)
        # unimodular change of basis: add a multiple of one column to another
        if L >= 2:
            moved = [cols[0], [a + 3 * b for a, b in zip(cols[1], cols[0])]] + cols[2:]
            assert height_subspace_K(moved) == h


def test_D_vector_examples(A, OD, hurwitz):
    assert Hinf_D((A.one, A.i)) == 1
    assert abs_v(A.quat(1, 1, 1, 1)) == 2
    assert h_D((A.scalar(2),)) == 2
    assert H_O_vector(OD, (A.scalar(2),)) == H_O_vector(OD, (A.one,)) == 1
    assert Hfin_O(OD, (A.one,)) == 1
    assert Hfin_O(OD, (A.scalar(2),)) == Fraction(1, 2)
    for n in range(1, 6):
        assert Hfin_O(hurwitz, (A.quat(0, 1, n),)) == ExactHeight(Fraction(1, 1 + n * n), 2)
    assert H_O_vector(OD, (A.one, A.i)) == 1


def test_H_O_scaling_invariance():
    rng = random.Random(8)
    for t in range(100):
        A = Algebra(*ALGEBRA_GRID[t % len(ALGEBRA_GRID)])
        O = extra_orders(A)[t % len(extra_orders(A))]
        x = random_vector(rng, A, 3, 4, 3)
        s = random_quat(rng, A, 3, 2)
        if s.is_zero():
            continue
        h = H_O_vector(O, x)
        assert H_O_vector(O, vec_right_mul(x, s)) == h
        c = O.clearing_integer(x)
        assert H_O_vector(O, x, clearing=6 * c) == h
        assert h_D(x) >= h or not all(O.contains(q) for q in x)


def test_matrix_heights_examples(A):
    assert Hinf_matrix_C([[A.one, A.zero]]) == 1
    assert Hinf_matrix_C([[A.one, A.i]]) == ExactHeight(2, 2)
    assert Hinf_matrix_C_minors([[A.one, A.i]]) == ExactHeight(2, 2)


def test_cauchy_binet_random():
    rng = random.Random(9)
    done = 0
    while done < 100:
        A = Algebra(*ALGEBRA_GRID[done % len(ALGEBRA_GRID)])
        rows, cols = (1, 2) if done % 2 else (2, 3)
        C = [list(random_vector(rng, A, cols, 4, 2)) for _ in range(rows)]
        if d_rank(conj_transpose_rows(C)) < rows:
            continue
        assert Hinf_matrix_C(C) == Hinf_matrix_C_minors(C)
        done += 1


def test_subspace_D_examples(A, OD):
    assert height_subspace_D(OD, SubspaceD.full(A, 3)) == 1
    Z = SubspaceD.from_basis(A, [(A.one, A.i)])
    assert height_subspace_D(OD, Z) == ExactHeight(2, 2)
    assert height_subspace_D(OD, orthogonal_complement(Z)) == ExactHeight(2, 2)
    assert height_subspace_D(OD, Z, method="constraints") == ExactHeight(2, 2)


def test_orthogonal_complement_examples(A):
    e1 = SubspaceD.from_basis(A, [(A.one, A.zero)])
    perp = orthogonal_complement(e1)
    assert perp.dim == 1 and perp.contains((A.zero, A.one))
    assert orthogonal_complement(SubspaceD.full(A, 2)).dim == 0
    perp = orthogonal_complement(SubspaceD.from_basis(A, [(A.one, A.i)]))
    assert perp.dim == 1 and perp.contains((A.i, A.one))


def test_subspace_D_basis_independence():
    rng = random.Random(10)
    for t in range(40):
        A = Algebra(*ALGEBRA_GRID[t % len(ALGEBRA_GRID)])
        Z = random_subspace(rng, A, 3, 2, 3, 2)
        s = random_quat(rng, A, 3)
        if s.is_zero():
            continue
        v0, v1 = Z.basis
        mixed = [vec_right_mul(v0, s), tuple(a + b * s for a, b in zip(v1, v0))]
        Z2 = SubspaceD.from_basis(A, mixed)
        for O in extra_orders(A):
            assert height_subspace_D(O, Z) == height_subspace_D(O, Z2)


def test_duality_random():
    rng = random.Random(11)
    for t in range(100):
        A = Algebra(*ALGEBRA_GRID[t % len(ALGEBRA_GRID)])
        n = 2 + t % 2
        Z = random_subspace(rng, A, n, 1 + t % (n - 1), 5, 5)
        for O in extra_orders(A):
            if not is_scaled_standard(O):
                assert duality(Z, O)


def test_vector_chain_on_standard_order():
    rng = random.Random(12)
    for t in range(200):
        A = Algebra(*ALGEBRA_GRID[t % len(ALGEBRA_GRID)])
        x = random_vector(rng, A, rng.randint(1, 3), 6)
        assert all(vector_chain(x).values())


def test_image_height_equality_at_minus_one():
    A = Algebra(-1, -1)
    Z = SubspaceD.from_basis(A, [(A.one, A.i)])
    assert image_height(Z) == (ExactHeight(4), ExactHeight(4))
    rng = random.Random(13)
    for _ in range(50):
        Z = random_subspace(rng, A, 3, rng.randint(1, 2), 5, 5)
        lhs, rhs = image_height(Z)
        assert lhs == rhs


# Pinned deviations: each records a concrete input where a stated identity
# does not hold as written, so a change in behaviour is noticed.


def test_pinned_chain_fails_for_hurwitz_vector():
    A = Algebra(-1, -1)
    h = Fraction(1, 2)
    x = (A.quat(h, h, h, h), A.one)
    assert hurwitz_order(A).contains(x[0])
    res = vector_chain(x)
    assert res == {"t*H([x]) <= Hinf(x)": False, "Hinf(x) <= h(x)": True, "h(x) <= 2s*h([x])": True}


@pytest.mark.parametrize("ab,expected", [((-1, -3), (4, 4)), ((-2, -1), (10, 9)), ((-2, -3), (10, 9))])
def test_pinned_image_height_off_minus_one(ab, expected):
    A = Algebra(*ab)
    Z = SubspaceD.from_basis(A, [(A.one, A.i)])
    lhs, rhs = image_height(Z)
    assert (lhs, rhs) == tuple(ExactHeight(e) for e in expected)


def test_pinned_duality_fails_on_scaled_standard_order():
    A = Algebra(-1, -1)
    O = make_order(A, [A.one, A.i * 2, A.j * 2, A.k * 2])
    assert is_scaled_standard(O)
    Z = SubspaceD.from_basis(A, [(A.quat(1, -2, -1), A.quat(0, 1, -2, 1), A.quat(0, 1, 1, -2))])
    assert height_subspace_D(O, Z) == ExactHeight(72, 4)
    assert height_subspace_D(O, orthogonal_complement(Z)) == ExactHeight(6, 2)
    assert duality(Z, standard_order(A))
