import math
from fractions import Fraction

import pytest

from qzero import constants
from qzero.constants import (
    CERTIFIED,
    LIKELY,
    VIOLATED,
    A_K,
    B_K,
    BoundValue,
    C_K,
    certify_leq,
    r_complex,
    r_real,
    s_t_constants,
    vaaler_bounds,
    verdict,
)
from qzero.exact import ExactHeight
from qzero.lemmas import extra_orders
from qzero.orders import frakM, hurwitz_order, standard_order
from qzero.quaternion import Algebra

from . import oracles
from .conftest import ALGEBRA_GRID


def test_closed_forms():
    r = r_real(1)
    assert r.contains(Fraction(1, 2)) and r.hi - r.lo <= 1e-12
    c = C_K(1)
    assert c.contains(1) and c.hi - c.lo <= 1e-12
    assert B_K(2).contains(8)


def test_complex_branch():
    # (2 pi)^(-1/2) Gamma(L+1)^(1/(2L)) at L = 1
    assert r_complex(1).lo <= 1 / math.sqrt(2 * math.pi) <= r_complex(1).hi


@pytest.mark.parametrize("L", range(1, 9))
def test_C_and_B_against_lgamma(L):
    assert C_K(L).mid == pytest.approx(oracles.C(L), rel=1e-12)
    if L >= 2:
        assert B_K(L).mid == pytest.approx(oracles.B(L), rel=1e-10)


def test_s_t():
    assert s_t_constants(Algebra(-1, -1)) == (ExactHeight(1), ExactHeight(1))
    assert s_t_constants(Algebra(-2, -3)) == (ExactHeight(6, 2), ExactHeight(1))
    for ab in ALGEBRA_GRID:
        s, t = s_t_constants(Algebra(*ab))
        assert s >= 1 >= t


def test_A_reference_value(A, OD, hurwitz):
    a = A_K(2, 1, A, OD)
    assert a.mid == pytest.approx(oracles.A(2, 1), rel=0.01)
    assert 3.12e4 < a.lo <= a.hi < 3.14e4
    assert A_K(2, 1, A, hurwitz).mid == pytest.approx(16 * a.mid, rel=1e-12)


def test_A_against_oracle_on_grid():
    for ab in ALGEBRA_GRID:
        alg = Algebra(*ab)
        s, t = s_t_constants(alg)
        for O in extra_orders(alg):
            M = float(frakM(O))
            for N in range(1, 5):
                for L in range(1, N + 1):
                    got = A_K(N, L, alg, O)
                    want = oracles.A(N, L, float(s) ** 2, float(t) ** 2, M)
                    assert got.mid == pytest.approx(want, rel=1e-9)
                    assert got.relative_width() < 2**-30


def test_A_monotone():
    alg = Algebra(-1, -1)
    OD, H = standard_order(alg), hurwitz_order(alg)
    for L in range(1, 4):
        vals = [A_K(N, L, alg, OD).lo for N in range(L, 5)]
        assert vals == sorted(vals)
        for N in range(L + 1, 5):
            assert A_K(N, L, alg, OD).hi < A_K(N, L, alg, H).lo


def test_vaaler_examples():
    b1, b2 = vaaler_bounds(1, 2, ExactHeight(1), ExactHeight(1))
    sqrtB = math.sqrt(oracles.B(4))
    assert b1.mid == pytest.approx(512 * sqrtB, rel=1e-12)
    assert b2.mid == pytest.approx(b1.mid**2, rel=1e-12)
    c1, _ = vaaler_bounds(1, 2, ExactHeight(2), ExactHeight(1))
    assert c1.lo > b1.hi


def test_certification_states():
    big = A_K(2, 1, Algebra(-1, -1), standard_order(Algebra(-1, -1)))
    assert verdict(ExactHeight(1), big) == CERTIFIED
    exact = BoundValue(2.0, 2.0)
    assert certify_leq(ExactHeight(4, 2), exact)
    assert verdict(ExactHeight(4, 2), exact) == CERTIFIED
    assert verdict(ExactHeight(3), exact) == VIOLATED
    wide = BoundValue(1.0, 3.0)
    assert verdict(ExactHeight(2), wide) == LIKELY
    assert not certify_leq(ExactHeight(5, 2), BoundValue(1.0, 2.0))


def test_bound_json_round_trip():
    b = A_K(3, 2, Algebra(-2, -3), standard_order(Algebra(-2, -3)))
    assert BoundValue.from_json(b.to_json()) == b
    with pytest.raises(ValueError):
        BoundValue(2.0, 1.0)


def test_theorem_rhs_scaling(A, OD):
    r1, r2 = constants.theorem_rhs(2, 1, A, OD, ExactHeight(1), ExactHeight(1))
    a = A_K(2, 1, A, OD)
    assert r1.mid == pytest.approx(a.mid, rel=1e-12)
    assert r2.mid == pytest.approx(a.mid**2, rel=1e-12)
    r1b, _ = constants.theorem_rhs(2, 1, A, OD, ExactHeight(4), ExactHeight(2, 2))
    # Hinf^(3/2) * H^4 = 8 * 4
    assert r1b.mid == pytest.approx(32 * a.mid, rel=1e-12)
