"""Exact rationals, quadratic numbers, the bracket function and the Christol order.

Rationals are ``fractions.Fraction`` throughout. Nothing in the package uses
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from sympy import factorint

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def frac_bracket(x) -> Fraction:
    """Representative of x mod 1 in (0, 1]; in particular <0> = 1."""
    x = as_rational(x)
    return x - (math.ceil(x) - 1)


def christol_leq(x, y) -> bool:
    """x precedes-or-equals y: <x> < <y>, or <x> = <y> and x >= y."""
    bx, by = frac_bracket(x), frac_bracket(y)
    if bx != by:
        return bx < by
    return as_rational(x) >= as_rational(y)


def christol_key(x) -> tuple[Fraction, Fraction]:
    """Sort key realising the Christol order: x precedes y iff key(x) <= key(y)."""
    x = as_rational(x)
    return (frac_bracket(x), -x)


def lcm_denominators(xs: Iterable) -> int:
    xs = [as_rational(x) for x in xs]
    if not xs:
        raise ValueError("lcm_denominators needs at least one value")
    return math.lcm(*(x.denominator for x in xs))


def is_nonpositive_integer(x) -> bool:
    x = as_rational(x)
    return x.denominator == 1 and x <= 0


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


def check_discriminant(D: int) -> int:
    if not isinstance(D, int):
        raise TypeError("D must be an integer")
    if D == 1 or not is_squarefree(D):
        raise ValueError(f"D={D} must be square-free and different from 1")
    return D


@dataclass(frozen=True)
class QuadraticNumber:
    """The number r1 + r2*sqrt(D). ``D`` may be None only for a rational value."""

    r1: Fraction
    r2: Fraction = Fraction(0)
    D: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "r1", as_rational(self.r1))
        object.__setattr__(self, "r2", as_rational(self.r2))
        if self.D is None:
            if self.r2 != 0:
                raise ValueError("an irrational quadratic number needs D")
        else:
            check_discriminant(self.D)

    @property
    def is_rational(self) -> bool:
        return self.r2 == 0

    def with_D(self, D: int) -> QuadraticNumber:
        if self.D is not None and self.D != D:
            raise ValueError(f"mixed discriminants {self.D} and {D}")
        return QuadraticNumber(self.r1, self.r2, D)

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.r1, -self.r2, self.D)

    def __str__(self) -> str:
        if self.r2 == 0:
            return str(self.r1)
        head = "" if self.r1 == 0 else f"{self.r1}"
        sign = "-" if self.r2 < 0 else ("+" if head else "")
        return f"{head}{sign}{abs(self.r2)}*sqrt({self.D})"


def quad_norm(g: QuadraticNumber) -> Fraction:
    if g.r2 == 0:
        return g.r1 * g.r1
    return g.r1 * g.r1 - g.D * g.r2 * g.r2


def common_discriminant(values: Iterable[QuadraticNumber]) -> int | None:
    """The shared D of a collection, None if every value is rational."""
    seen = {g.D for g in values if g.D is not None}
    if len(seen) > 1:
        raise ValueError(f"mixed discriminants {sorted(seen)}")
    return seen.pop() if seen else None


def fmt_rational(x) -> str:
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"
