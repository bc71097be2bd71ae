"""Integrality criterion for parameters in a quadratic field Q(sqrt(D)).

Each parameter gamma = g1 + g2*sqrt(D) contributes its rational part g1 and
the integer g2*d2, where d2 is the common denominator of the irrational parts.
A unit a mod E with E = lcm(4|D|, d1, d2) lies in H when the primes p with
a*p = 1 mod E split in the field, and in I when they stay inert.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sympy import isprime, primefactors

from hyperint.exact import QuadraticNumber, as_rational, check_discriminant, common_discriminant, is_nonpositive_integer
from hyperint.padic import jacobi_symbol, legendre_euler, mult_order
from hyperint.rational_criterion import delta_tuple, min_signed_count, signed_count, system_constants
from hyperint.report import CriterionReport


def _as_quadratic(g, D: int) -> QuadraticNumber:
    if isinstance(g, QuadraticNumber):
        return g.with_D(D)
    return QuadraticNumber(as_rational(g), Fraction(0), D)


@dataclass(frozen=True)
class QuadraticSystem:
    alpha: tuple
    beta: tuple
    D: int
    u: int = field(init=False)
    v: int = field(init=False)
    alpha1: tuple = field(init=False)
    beta1: tuple = field(init=False)
    alpha2t: tuple = field(init=False)
    beta2t: tuple = field(init=False)
    d1: int = field(init=False)
    d2: int = field(init=False)
    E: int = field(init=False)
    M1: Fraction = field(init=False)
    M2: int = field(init=False)

    def __post_init__(self):
        D = check_discriminant(self.D)
        alpha = [_as_quadratic(g, D) for g in self.alpha]
        beta = [_as_quadratic(g, D) for g in self.beta]
        if not alpha or not beta:
            raise ValueError("alpha and beta must both be nonempty")
        for g in alpha + beta:
            if g.is_rational and is_nonpositive_integer(g.r1):
                raise ValueError(f"parameter {g} is a nonpositive integer")
        # rational entries first, otherwise keeping the given order
        alpha = tuple(sorted(alpha, key=lambda g: not g.is_rational))
        beta = tuple(sorted(beta, key=lambda g: not g.is_rational))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "u", sum(g.is_rational for g in alpha))
        object.__setattr__(self, "v", sum(g.is_rational for g in beta))
        everything = alpha + beta
        d1 = math.lcm(*(g.r1.denominator for g in everything))
        d2 = math.lcm(*(g.r2.denominator for g in everything))
        object.__setattr__(self, "d1", d1)
        object.__setattr__(self, "d2", d2)
        object.__setattr__(self, "E", math.lcm(4 * abs(D), d1, d2))
        object.__setattr__(self, "alpha1", tuple(g.r1 for g in alpha))
        object.__setattr__(self, "beta1", tuple(g.r1 for g in beta))
        object.__setattr__(self, "alpha2t", tuple(int(g.r2 * d2) for g in alpha))
        object.__setattr__(self, "beta2t", tuple(int(g.r2 * d2) for g in beta))
        object.__setattr__(self, "M1", 2 * max(abs(x) for x in self.alpha1 + self.beta1))
        object.__setattr__(self, "M2", 2 * max(abs(x) for x in self.alpha2t + self.beta2t))

    @property
    def r(self) -> int:
        return len(self.alpha)

    @property
    def s(self) -> int:
        return len(self.beta)

    @property
    def mu(self) -> tuple:
        return self.alpha1[: self.u]

    @property
    def nu(self) -> tuple:
        return self.beta1[: self.v]

    @property
    def D_reduced(self) -> Fraction:
        return Fraction(self.D, self.d2 * self.d2)


def decompose(alpha: Sequence, beta: Sequence, D: int | None = None) -> QuadraticSystem:
    """Build a system; D is read off the entries unless every entry is rational."""
    found = common_discriminant([g for g in list(alpha) + list(beta) if isinstance(g, QuadraticNumber)])
    if found is not None and D is not None and found != D:
        raise ValueError(f"mixed discriminants {found} and {D}")
    D = found if found is not None else D
    if D is None:
        raise ValueError("all entries are rational; pass D explicitly")
    return QuadraticSystem(tuple(alpha), tuple(beta), D)


def admissible_threshold(sys: QuadraticSystem) -> int:
    """P0: primes at or below it are not controlled by the criterion."""
    d_munu, M_munu, _ = system_constants(sys.mu + sys.nu)
    d1, d2 = sys.d1, sys.d2
    split_bound = 4 * d2**2 * d1**2 * (d2**2 * (sys.M1 + d1) ** 2 + abs(sys.D) * sys.M2**2)
    candidates = [M_munu, Fraction(3 * sys.v * d_munu), Fraction(split_bound), Fraction(max(primefactors(sys.E)))]
    return math.ceil(max(candidates))


# residue groups


@dataclass(frozen=True)
class ResidueGroups:
    E: int
    D: int
    H: tuple
    I: tuple
    class_primes: dict = field(default_factory=dict, compare=False)

    @property
    def G(self) -> tuple:
        return tuple(sorted(self.H + self.I))


def legendre_by_reciprocity(D: int, p: int) -> int:
    """(D/p) from D = (-1)^l1 * 2^l2 * D' and quadratic reciprocity."""
    l1 = 1 if D < 0 else 0
    rest = abs(D)
    l2 = 0
    while rest % 2 == 0:
        rest //= 2
        l2 += 1
    sign = 1
    if l1 and (p - 1) // 2 % 2:
        sign = -sign
    if l2 % 2 and (p * p - 1) // 8 % 2:
        sign = -sign
    if (rest - 1) // 2 % 2 and (p - 1) // 2 % 2:
        sign = -sign
    return sign * jacobi_symbol(p, rest)


def smallest_prime_in_class(residue: int, modulus: int, cap: int) -> int:
    p = residue % modulus or modulus
    while p <= cap:
        if isprime(p):
            return p
        p += modulus
    raise RuntimeError(f"no prime = {residue} mod {modulus} below {cap}")


def compute_groups(E: int, D: int, cap: int | None = None) -> ResidueGroups:
    if E % (4 * abs(D)):
        raise ValueError(f"E={E} is not a multiple of 4|D|")
    cap = cap if cap is not None else 10**6 * E
    H, I, primes = [], [], {}
    for a in range(1, E + 1):
        if math.gcd(a, E) != 1:
            continue
        p = smallest_prime_in_class(pow(a, -1, E), E, cap)
        symbol = legendre_by_reciprocity(D, p)
        if symbol != legendre_euler(D, p):
            raise AssertionError(f"reciprocity and Euler disagree for D={D}, p={p}")
        primes[a] = p
        (H if symbol == 1 else I).append(a)
    return ResidueGroups(E, D, tuple(H), tuple(I), primes)


# breakpoints and the extended function


@dataclass(frozen=True)
class BreakpointSet:
    points: tuple

    def components(self) -> list[Fraction]:
        """One rational midpoint per connected component of (0,1) minus the points."""
        edges = [Fraction(0)] + list(self.points) + [Fraction(1)]
        return [(lo + hi) / 2 for lo, hi in zip(edges, edges[1:])]


def _unit_interval_hits(c: Fraction, q: int) -> list[Fraction]:
    """All (c + n)/q in (0,1) with n an integer."""
    if q == 0:
        return []
    lo, hi = (-c, q - c) if q > 0 else (q - c, -c)
    return [(c + n) / q for n in range(math.floor(lo) + 1, math.ceil(hi))]


def breakpoints(sys: QuadraticSystem, groups: ResidueGroups) -> BreakpointSet:
    a1, b1, a2, b2 = sys.alpha1, sys.beta1, sys.alpha2t, sys.beta2t
    pts = set()
    for a in groups.H:
        for i in range(sys.r):
            for i2 in range(sys.r):
                pts.update(_unit_interval_hits(a * (a1[i] - a1[i2]), a2[i2] - a2[i]))
            for j in range(sys.s):
                pts.update(_unit_interval_hits(a * (a1[i] - b1[j]), b2[j] - a2[i]))
            pts.update(_unit_interval_hits(-a * a1[i], a2[i]))
        for j in range(sys.s):
            for j2 in range(sys.s):
                pts.update(_unit_interval_hits(a * (b1[j] - b1[j2]), b2[j2] - b2[j]))
            pts.update(_unit_interval_hits(-a * b1[j], b2[j]))
    return BreakpointSet(tuple(sorted(pts)))


def shifted_values(sys: QuadraticSystem, a: int, eps) -> tuple[list, list]:
    eps = as_rational(eps)
    avals = [a * g1 + g2 * eps for g1, g2 in zip(sys.alpha1, sys.alpha2t)]
    bvals = [a * g1 + g2 * eps for g1, g2 in zip(sys.beta1, sys.beta2t)]
    return avals, bvals


def delta_extended(x, a: int, eps, sys: QuadraticSystem) -> int:
    avals, bvals = shifted_values(sys, a, eps)
    return signed_count(avals, bvals, as_rational(x))


# statements


def _reduced_powers(a: int, E: int) -> list[int]:
    return [pow(a, l, E) for l in range(1, mult_order(a, E) + 1)]


def _statement_I(sys, groups):
    mu, nu = sys.mu, sys.nu
    for a in groups.I:
        val, x = min_signed_count([a * g for g in mu], [a * g for g in nu])
        if val is not None and val < 0:
            return False, {"statement": "I", "a": a, "x": x, "value": val}
    return True, None


def _statement_II(sys, groups):
    mu, nu = sys.mu, sys.nu
    if not mu and not nu:
        return True, None
    d, _, m = system_constants(mu + nu)
    for a in groups.I:
        for l, b in enumerate(_reduced_powers(a, sys.E), start=1):
            for e in range(1, d + 1):
                x = b * (Fraction(e, d) + m)
                val = delta_tuple(mu, nu, x, b)
                if val < 0:
                    return False, {"statement": "II", "a": a, "l": l, "e": e, "x": x, "value": val}
    return True, None


def _statement_III(sys, groups):
    mu, nu = sys.mu, sys.nu
    for a in groups.I:
        powers = _reduced_powers(a, sys.E)
        for k, nk in enumerate(nu, start=1):
            total = 0
            for h, b in enumerate(powers, start=1):
                total += delta_tuple(mu, nu, b * nk, b)
                if total < 0:
                    return False, {"statement": "III", "a": a, "k": k, "h": h, "value": total}
    return True, None


def _statement_IV(sys, groups, bps=None):
    bps = bps if bps is not None else breakpoints(sys, groups)
    for a in groups.H:
        for eps in bps.components():
            avals, bvals = shifted_values(sys, a, eps)
            val, x = min_signed_count(avals, bvals)
            if val is not None and val < 0:
                return False, {"statement": "IV", "a": a, "eps": eps, "x": x, "value": val}
    return True, None


_STATEMENTS = {"I": _statement_I, "II": _statement_II, "III": _statement_III, "IV": _statement_IV}


def check_statement(sys: QuadraticSystem, groups: ResidueGroups, which: str):
    if which not in _STATEMENTS:
        raise ValueError(f"unknown statement {which!r}")
    return _STATEMENTS[which](sys, groups)


def replay_statement_III(sys: QuadraticSystem, a: int, k: int, h: int) -> int:
    powers = _reduced_powers(a, sys.E)[:h]
    nk = sys.nu[k - 1]
    return sum(delta_tuple(sys.mu, sys.nu, b * nk, b) for b in powers)


def decide_thm14(sys: QuadraticSystem) -> CriterionReport:
    groups = compute_groups(sys.E, sys.D)
    bps = breakpoints(sys, groups)
    meta = {
        "D": sys.D,
        "E": sys.E,
        "u": sys.u,
        "v": sys.v,
        "H": list(groups.H),
        "I": list(groups.I),
        "breakpoints": list(bps.points),
        "P0": admissible_threshold(sys),
    }
    if sys.u < sys.v:
        witness = {"statement": "u<v", "u": sys.u, "v": sys.v}
        return CriterionReport("not-n-integral", "quadratic-u<v", witness, meta)
    if sys.u > sys.v:
        route, needed = "quadratic-u>v", ("I", "IV")
    else:
        route, needed = "quadratic-u=v", ("II", "III", "IV")
    for which in needed:
        if which == "IV":
            ok, witness = _statement_IV(sys, groups, bps)
        else:
            ok, witness = check_statement(sys, groups, which)
        if not ok:
            return CriterionReport("not-n-integral", route, witness, meta)
    return CriterionReport("n-integral", route, None, meta)
