"""Exact radicals ``q ** (1/e)`` with ``q`` a nonnegative rational.

Every height in this package is a number of this shape, so equalities such
as ``H(V_Z) == H(Z) ** 4`` can be checked bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .linalg import rational_root_exact


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@total_ordering
@dataclass(frozen=True)
class ExactHeight:
    """The real number ``base ** (1 / root)``.

    Stored in normal form (smallest possible root), so dataclass equality is
    numeric equality.
    """

    base: Fraction
    root: int = 1

    def __post_init__(self):
        base = Fraction(self.base)
        root = int(self.root)
        if base < 0:
            raise ValueError(f"negative base {base}")
        if root < 1:
            raise ValueError(f"root must be positive, got {root}")
        if base in (0, 1):
            root = 1
        for p in _prime_factors(root):
            while root % p == 0:
                r = rational_root_exact(base, p)
                if r is None:
                    break
                base, root = r, root // p
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "root", root)

    @classmethod
    def of(cls, x) -> "ExactHeight":
        if isinstance(x, ExactHeight):
            return x
        return cls(Fraction(x), 1)

    @classmethod
    def sqrt(cls, q) -> "ExactHeight":
        return cls(Fraction(q), 2)

    def _common(self, other: "ExactHeight") -> tuple[Fraction, Fraction, int]:
        e = math.lcm(self.root, other.root)
        return self.base ** (e // self.root), other.base ** (e // other.root), e

    def __mul__(self, other):
        other = ExactHeight.of(other)
        a, b, e = self._common(other)
        return ExactHeight(a * b, e)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ExactHeight.of(other)
        a, b, e = self._common(other)
        return ExactHeight(a / b, e)

    def __rtruediv__(self, other):
        return ExactHeight.of(other) / self

    def __pow__(self, exponent):
        """Raise to an integer or rational power."""
        exponent = Fraction(exponent)
        p, q = exponent.numerator, exponent.denominator
        if p < 0:
            if self.base == 0:
                raise ZeroDivisionError("0 to a negative power")
            return ExactHeight(1 / self.base ** (-p), self.root * q)
        return ExactHeight(self.base**p, self.root * q)

    def inverse(self) -> "ExactHeight":
        return self ** -1

    def __eq__(self, other):
        if not isinstance(other, ExactHeight):
            try:
                other = ExactHeight.of(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.base == other.base and self.root == other.root

    def __hash__(self):
        return hash((self.base, self.root))

    def __lt__(self, other):
        other = ExactHeight.of(other)
        a, b, _ = self._common(other)
        return a < b

    def __float__(self):
        if self.base == 0:
            return 0.0
        # log-domain avoids overflow for huge numerators
        lg = (math.log(self.base.numerator) - math.log(self.base.denominator)) / self.root
        return math.exp(lg)

    def is_rational(self) -> bool:
        return self.root == 1

    def power_root(self, e: int) -> Fraction:
        """``self ** e`` as an exact rational; ``e`` must be a multiple of the root."""
        if e % self.root:
            raise ValueError(f"{self} to the power {e} is not rational")
        return self.base ** (e // self.root)

    def __str__(self):
        if self.root == 1:
            return str(self.base)
        return f"({self.base})^(1/{self.root})"

    def to_json(self) -> dict:
        return {"base": str(self.base), "root": self.root, "approx": f"{float(self):.12g}"}

    @classmethod
    def from_json(cls, d: dict) -> "ExactHeight":
        return cls(Fraction(d["base"]), int(d["root"]))


ONE = ExactHeight(Fraction(1), 1)


def hmax(*values: ExactHeight) -> ExactHeight:
    return max(ExactHeight.of(v) for v in values)


def hmin(*values: ExactHeight) -> ExactHeight:
    return min(ExactHeight.of(v) for v in values)
