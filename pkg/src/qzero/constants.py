"""Explicit constants of the small-zero bounds, as rigorous floating-point enclosures.

Transcendental pieces (powers of pi and Gamma values) are evaluated in
mpmath interval arithmetic at 128 bits and rounded outward to doubles, so
every :class:`BoundValue` provably contains the true constant.  Exact
factors stay :class:`ExactHeight` values until the final product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from .errors import InvalidInput
from .exact import ExactHeight
from .orders import Order, frakM
from .quaternion import Algebra

_PREC = 128

CERTIFIED = "certified"
LIKELY = "likely"
VIOLATED = "violated"


@dataclass(frozen=True)
class BoundValue:
    """Closed interval ``[lo, hi]`` of doubles known to contain the value named by ``tag``."""

    lo: float
    hi: float
    tag: str = ""

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    def contains(self, x) -> bool:
        return Fraction(self.lo) <= Fraction(x) <= Fraction(self.hi)

    @property
    def mid(self) -> float:
        return (self.lo + self.hi) / 2

    def relative_width(self) -> float:
        return (self.hi - self.lo) / abs(self.mid) if self.mid else self.hi - self.lo

    def to_json(self) -> dict:
        return {"lo": self.lo.hex(), "hi": self.hi.hex(), "approx": f"{self.mid:.12g}", "tag": self.tag}

    @classmethod
    def from_json(cls, d: dict) -> "BoundValue":
        return cls(float.fromhex(d["lo"]), float.fromhex(d["hi"]), d.get("tag", ""))


def _ctx():
    iv.prec = _PREC
    return iv


def _iv_exact(h: ExactHeight):
    ctx = _ctx()
    base = ctx.mpf(f"{h.base.numerator}/{h.base.denominator}")
    return base if h.root == 1 else base ** (ctx.mpf(1) / h.root)


def _to_bound(x, tag: str) -> BoundValue:
    # float() of an mpf endpoint rounds to nearest; one ulp outward restores containment
    return BoundValue(math.nextafter(float(x.a), -math.inf), math.nextafter(float(x.b), math.inf), tag)


def _iv_of(b: BoundValue):
    return _ctx().mpf([b.lo, b.hi])


# -- field constants for K = Q ----------------------------------------------


def _r_real_iv(L: int):
    ctx = _ctx()
    return ctx.gamma(ctx.mpf(L) / 2 + 1) ** (ctx.mpf(1) / L) / ctx.sqrt(ctx.pi)


def _r_complex_iv(L: int):
    ctx = _ctx()
    return ctx.gamma(ctx.mpf(L + 1)) ** (ctx.mpf(1) / (2 * L)) / ctx.sqrt(2 * ctx.pi)


def _check_L(L: int) -> None:
    if L < 1:
        raise InvalidInput(f"L must be at least 1, got {L}")


def r_real(L: int) -> BoundValue:
    _check_L(L)
    return _to_bound(_r_real_iv(L), f"r_real({L})")


def r_complex(L: int) -> BoundValue:
    """Complex-place factor; never reached over Q but kept for completeness."""
    _check_L(L)
    return _to_bound(_r_complex_iv(L), f"r_complex({L})")


def _C_iv(L: int):
    # Delta_Q = 1 and Q has a single real place
    return 2 * _r_real_iv(L)


def C_K(L: int) -> BoundValue:
    _check_L(L)
    return _to_bound(_C_iv(L), f"C_Q({L})")


def _B_iv(L: int):
    ctx = _ctx()
    out = ctx.mpf(2) ** (L + 1) * _C_iv(1) ** 2
    if L > 1:
        out *= _C_iv(L - 1) ** (2 * (L - 1))
    return out


def B_K(L: int) -> BoundValue:
    _check_L(L)
    return _to_bound(_B_iv(L), f"B_Q({L})")


def s_t_constants(algebra: Algebra) -> tuple[ExactHeight, ExactHeight]:
    a, b = abs(algebra.alpha), abs(algebra.beta)
    vals = (1, a, b, a * b)
    return ExactHeight(Fraction(max(vals)), 2), ExactHeight(Fraction(min(vals)), 2)


def A_K_exact_part(N: int, L: int, algebra: Algebra, O: Order) -> ExactHeight:
    """Every factor of the main constant except ``sqrt(B_Q(4L))``."""
    if not 1 <= L <= N:
        raise InvalidInput(f"need 1 <= L <= N, got L={L}, N={N}")
    s, t = s_t_constants(algebra)
    return (
        ExactHeight(Fraction(2), 1) ** Fraction(20 * L - 3, 2)
        * ExactHeight(Fraction(N) ** (4 * L - 1))
        * frakM(O) ** (4 * (N - L))
        * s ** (4 * L)
        / t ** Fraction(4 * L - 1, 2)
    )


def _A_iv(N: int, L: int, algebra: Algebra, O: Order):
    return _iv_exact(A_K_exact_part(N, L, algebra, O)) * _ctx().sqrt(_B_iv(4 * L))


def A_K(N: int, L: int, algebra: Algebra, O: Order) -> BoundValue:
    """Main constant of the small-zero theorem.

    The order enters through its discriminant, so it is an explicit argument
    here even though the usual notation suppresses it.
    """
    return _to_bound(_A_iv(N, L, algebra, O), f"A_Q(N={N}, L={L}, alpha={algebra.alpha}, beta={algebra.beta})")


def scaled(bound: BoundValue, factor: ExactHeight, tag: str = "") -> BoundValue:
    """Enclosure of ``factor * bound``."""
    return _to_bound(_iv_of(bound) * _iv_exact(factor), tag or bound.tag)


def theorem_rhs(N: int, L: int, algebra: Algebra, O: Order, Hinf_F: ExactHeight, H_O_Z: ExactHeight):
    """Right-hand sides of the single-vector and product bounds."""
    A = _A_iv(N, L, algebra, O)
    f1 = Hinf_F ** Fraction(4 * L - 1, 2) * H_O_Z**4
    f2 = Hinf_F ** (4 * L - 1) * H_O_Z**8
    return (
        _to_bound(A * _iv_exact(f1), "A * Hinf(F)^((4L-1)/2) * H_O(Z)^4"),
        _to_bound(A * A * _iv_exact(f2), "A^2 * Hinf(F)^(4L-1) * H_O(Z)^8"),
    )


def vaaler_bounds(L: int, N: int, H_Q: ExactHeight, H_VZ: ExactHeight) -> tuple[BoundValue, BoundValue]:
    """Quadratic-side bounds for a ``4L``-dimensional space in ``4N`` variables."""
    _check_L(L)
    B = _B_iv(4 * L)
    base = ExactHeight(Fraction(16 * N * N)) * H_Q
    b1 = _ctx().sqrt(B) * _iv_exact(base ** Fraction(4 * L - 1, 2) * H_VZ)
    b2 = B * _iv_exact(base ** (4 * L - 1) * H_VZ**2)
    return _to_bound(b1, "vaaler single"), _to_bound(b2, "vaaler product")


# -- certification ----------------------------------------------------------


def _leq_float(lhs: ExactHeight, x: float) -> bool:
    if x < 0:
        return False
    return lhs.base <= Fraction(x) ** lhs.root


def certify_leq(lhs: ExactHeight, rhs: BoundValue) -> bool:
    """True when ``lhs <= rhs.hi`` holds exactly."""
    return _leq_float(lhs, rhs.hi)


def verdict(lhs: ExactHeight, rhs: BoundValue) -> str:
    """``certified`` if ``lhs`` is below the whole enclosure, ``likely`` if inside it, else ``violated``."""
    if _leq_float(lhs, rhs.lo):
        return CERTIFIED
    if _leq_float(lhs, rhs.hi):
        return LIKELY
    return VIOLATED
