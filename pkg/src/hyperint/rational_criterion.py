"""The Christol function and the integrality criteria for rational parameters.

Universally quantified checks over x are discharged on the finite set of
shifted beta values: between two consecutive beta values (in the Christol
order) the count of betas below x is constant while the count of alphas can
only grow, so the signed count is smallest exactly at some a*beta_k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sympy import isprime

from hyperint.exact import as_rational, christol_leq, frac_bracket, is_nonpositive_integer, lcm_denominators
from hyperint.padic import PAdicContext, mult_order, pochhammer_vp, t_operator
from hyperint.report import CriterionReport


class PrimeTooSmall(ValueError):
    pass


def signed_count(avals: Sequence[Fraction], bvals: Sequence[Fraction], x: Fraction) -> int:
    """#{y in avals : y precedes x} - #{y in bvals : y precedes x}."""
    return sum(christol_leq(y, x) for y in avals) - sum(christol_leq(y, x) for y in bvals)


def min_signed_count(avals, bvals):
    """Smallest signed count over all real x, with the x attaining it.

    Returns (None, None) when bvals is empty, in which case the count is
    never negative.
    """
    best, best_x = None, None
    for x in bvals:
        val = signed_count(avals, bvals, x)
        if best is None or val < best:
            best, best_x = val, x
    return best, best_x


def delta_tuple(alpha, beta, x, a: int) -> int:
    return signed_count([a * g for g in alpha], [a * g for g in beta], as_rational(x))


@dataclass(frozen=True)
class RationalSystem:
    alpha: tuple
    beta: tuple
    d: int = field(init=False)
    M: Fraction = field(init=False)
    m: Fraction = field(init=False)

    def __post_init__(self):
        alpha = tuple(as_rational(g) for g in self.alpha)
        beta = tuple(as_rational(g) for g in self.beta)
        if not alpha or not beta:
            raise ValueError("alpha and beta must both be nonempty")
        for g in alpha + beta:
            if is_nonpositive_integer(g):
                raise ValueError(f"parameter {g} is a nonpositive integer")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        d, M, m = system_constants(alpha + beta)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "m", m)

    @property
    def r(self) -> int:
        return len(self.alpha)

    @property
    def s(self) -> int:
        return len(self.beta)

    @property
    def prime_bound(self) -> Fraction:
        return max(self.M, Fraction(3 * self.s * self.d))


def system_constants(values) -> tuple[int, Fraction, Fraction]:
    """(d, M, m) for a nonempty parameter list; (1, 0, 0) if it is empty."""
    values = [as_rational(g) for g in values]
    if not values:
        return 1, Fraction(0), Fraction(0)
    d = lcm_denominators(values)
    M = d * (2 + 2 * max(abs(g) for g in values))
    m = min(g - frac_bracket(g) for g in values)
    return d, Fraction(M), Fraction(m)


def christol_delta(x, a: int, sys: RationalSystem) -> int:
    if math.gcd(a, sys.d) != 1:
        raise ValueError(f"a={a} is not coprime to d={sys.d}")
    return delta_tuple(sys.alpha, sys.beta, x, a)


def decide_christol(sys: RationalSystem) -> CriterionReport:
    units = [a for a in range(1, sys.d + 1) if math.gcd(a, sys.d) == 1]
    meta = {"d": sys.d, "a_values": units}
    for a in units:
        val, x = min_signed_count([a * g for g in sys.alpha], [a * g for g in sys.beta])
        if val is not None and val < 0:
            witness = {"statement": "christol", "a": a, "x": x, "value": val}
            return CriterionReport("not-n-integral", "christol-global", witness, meta)
    return CriterionReport("n-integral", "christol-global", None, meta)


def coefficient_vp(alpha, beta, p: int, n: int) -> int:
    return sum(pochhammer_vp(g, n, p) for g in alpha) - sum(pochhammer_vp(g, n, p) for g in beta)


def _r_less_than_s_witness(sys: RationalSystem, p: int, max_power: int = 8):
    for L in range(1, max_power + 1):
        n = p**L
        v = coefficient_vp(sys.alpha, sys.beta, p, n)
        if v < 0:
            return n, v
    return None, None


def decide_thm12(sys: RationalSystem, p: int) -> CriterionReport:
    """Whether the series has p-adic integer coefficients, for p above the bound."""
    if not isprime(p):
        raise ValueError(f"p={p} is not prime")
    if p <= sys.prime_bound:
        raise PrimeTooSmall(f"p={p} must exceed max(M, 3sd) = {sys.prime_bound}")
    d = sys.d
    a = pow(p, -1, d) if d > 1 else 1
    order = mult_order(a, d)
    meta = {"p": p, "a": a, "ord": order, "bound": sys.prime_bound, "d": d}

    if sys.r < sys.s:
        n, v = _r_less_than_s_witness(sys, p)
        witness = {"statement": "r<s", "r": sys.r, "s": sys.s, "p": p}
        if n is not None:
            witness.update({"n": n, "value": v})
        return CriterionReport("not-in-Zp", "prime-r<s", witness, meta)

    if sys.r > sys.s:
        val, x = min_signed_count([a * g for g in sys.alpha], [a * g for g in sys.beta])
        if val is not None and val < 0:
            witness = {"statement": "delta", "a": a, "x": x, "value": val}
            return CriterionReport("not-in-Zp", "prime-r>s", witness, meta)
        return CriterionReport("in-Zp", "prime-r>s", None, meta)

    # a^l only matters modulo d, and using the reduced power keeps numbers small
    powers = [pow(a, l, d) if d > 1 else 1 for l in range(1, order + 1)]
    powers = [b if b else d for b in powers]
    for k, bk in enumerate(sys.beta, start=1):
        total = 0
        for h, b in enumerate(powers, start=1):
            total += delta_tuple(sys.alpha, sys.beta, b * bk, b)
            if total < 0:
                # the coefficient of this index has negative valuation
                n = t_operator(bk, PAdicContext(p, h)) + 1
                witness = {"statement": "partial-sum", "k": k, "h": h, "a": a, "value": total, "n": n}
                return CriterionReport("not-in-Zp", "prime-r=s", witness, meta)
    for l, b in enumerate(powers, start=1):
        for e in range(1, d + 1):
            x = b * (Fraction(e, d) + sys.m)
            val = delta_tuple(sys.alpha, sys.beta, x, b)
            if val < 0:
                witness = {"statement": "shifted-grid", "l": l, "e": e, "a": a, "x": x, "value": val}
                return CriterionReport("not-in-Zp", "prime-r=s", witness, meta)
    return CriterionReport("in-Zp", "prime-r=s", None, meta)


def replay_partial_sum(sys: RationalSystem, a: int, k: int, h: int) -> int:
    d = sys.d
    total = 0
    for l in range(1, h + 1):
        b = pow(a, l, d) if d > 1 else 1
        b = b or d
        total += delta_tuple(sys.alpha, sys.beta, b * sys.beta[k - 1], b)
    return total


def shifted_beta_condition(sys: RationalSystem, p: int, l: int) -> bool:
    """delta(b*beta_k, b) >= 0 for all k, where b = p^(-l) mod d."""
    d = sys.d
    b = pow(p, -l, d) if d > 1 else 1
    b = b or d
    return all(delta_tuple(sys.alpha, sys.beta, b * bk, b) >= 0 for bk in sys.beta)
