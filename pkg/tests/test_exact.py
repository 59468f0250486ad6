from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qzero.exact import ONE, ExactHeight, hmax, hmin

mpmath.mp.prec = 200

positive = st.fractions(min_value=Fraction(1, 30), max_value=50, max_denominator=30)
roots = st.integers(1, 8)


def as_mp(h):
    return mpmath.mpf(h.base.numerator) / h.base.denominator ** 1 if h.root == 1 else mpmath.root(mpmath.mpf(h.base.numerator) / h.base.denominator, h.root)


def test_normal_form():
    assert ExactHeight(4, 2) == ExactHeight(2)
    assert ExactHeight(Fraction(1, 16), 4).root == 1
    assert ExactHeight(8, 6) == ExactHeight(2, 2)
    assert ExactHeight(1, 7) == ONE
    assert ExactHeight(2, 2) != ExactHeight(2)


def test_rejects_bad_values():
    with pytest.raises(ValueError):
        ExactHeight(-1)
    with pytest.raises(ValueError):
        ExactHeight(2, 0)


def test_arithmetic_examples():
    r2 = ExactHeight.sqrt(2)
    assert r2 * r2 == 2
    assert (r2**4) == 4
    assert r2 / r2 == ONE
    assert r2.inverse() == ExactHeight(Fraction(1, 2), 2)
    assert ExactHeight(5, 2) ** Fraction(-1, 2) == ExactHeight(Fraction(1, 5), 4)
    assert hmax(ExactHeight.sqrt(3), 2) == 2
    assert hmin(ExactHeight.sqrt(3), 2) == ExactHeight.sqrt(3)


def test_power_root():
    assert ExactHeight(2, 2).power_root(4) == 4
    with pytest.raises(ValueError):
        ExactHeight(2, 2).power_root(3)


@given(positive, roots, positive, roots)
def test_ordering_matches_high_precision(a, e, b, f):
    x, y = ExactHeight(a, e), ExactHeight(b, f)
    mx, my = as_mp(x), as_mp(y)
    if x == y:
        assert abs(mx - my) < mpmath.mpf(10) ** -50
    else:
        assert (x < y) == (mx < my)


@given(positive, roots, positive, roots)
def test_product_matches_high_precision(a, e, b, f):
    x, y = ExactHeight(a, e), ExactHeight(b, f)
    assert abs(as_mp(x * y) - as_mp(x) * as_mp(y)) < mpmath.mpf(10) ** -40
    assert abs(float(x / y) - float(as_mp(x) / as_mp(y))) <= 1e-12 * float(as_mp(x) / as_mp(y))


def test_json_round_trip():
    h = ExactHeight(Fraction(3, 7), 4)
    assert ExactHeight.from_json(h.to_json()) == h
    assert h.to_json()["base"] == "3/7"


def test_float_of_huge_value():
    h = ExactHeight(Fraction(10**400), 2)
    assert float(h) == pytest.approx(1e200, rel=1e-12)
