"""Brute-force valuations of series coefficients, independent of the criteria.

The n-th coefficient is prod_i (alpha_i)_n / prod_j (beta_j)_n. For rational
parameters its p-adic valuation is summed factor by factor. For quadratic
parameters each prime p not dividing E is either split, with two embeddings
of the field into Z_p given by the two square roots of D, or inert, where the
valuation at p of x is half the p-adic valuation of its norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import accumulate

from sympy import primerange

from hyperint.exact import QuadraticNumber
from hyperint.padic import PAdicContext, dwork_iterated, hensel_lift_sqrt, legendre_euler, sqrt_mod_prime_power, vp_int
from hyperint.parallel import pmap
from hyperint.quadratic_criterion import QuadraticSystem, admissible_threshold
from hyperint.rational_criterion import RationalSystem, coefficient_vp


@dataclass(frozen=True)
class ValuationScanConfig:
    p_max: int
    n_max: int
    p_min: int = 2
    p0: int | None = None  # None: derive from the system
    threads: int = 1


@dataclass(frozen=True)
class Violation:
    p: int
    embedding: str
    n: int
    valuation: Fraction


@dataclass(frozen=True)
class ScanResult:
    violations: tuple
    scanned: tuple
    skipped: tuple
    p0: int


# rational parameters


def _rational_profile(sys: RationalSystem, p: int, n_max: int) -> list[int]:
    """Valuations of coefficients 0..n_max, one factor at a time."""
    steps = []
    for k in range(n_max):
        v = 0
        for g in sys.alpha:
            v += vp_int(g.numerator + k * g.denominator, p)
        for g in sys.beta:
            v -= vp_int(g.numerator + k * g.denominator, p)
        steps.append(v)
    return [0] + list(accumulate(steps))


def coeff_vp_rational(sys: RationalSystem, p: int, n: int) -> int:
    if sys.d % p == 0:
        raise ValueError(f"p={p} divides d={sys.d}")
    direct = _rational_profile(sys, p, n)[n]
    formula = coefficient_vp(sys.alpha, sys.beta, p, n)
    if direct != formula:
        raise AssertionError(f"valuation routes disagree at p={p}, n={n}: {direct} vs {formula}")
    return direct


def _scan_rational_prime(sys: RationalSystem, n_max: int, p: int) -> list[Violation]:
    profile = _rational_profile(sys, p, n_max)
    out = []
    for n in range(1, n_max + 1):
        if profile[n] != coefficient_vp(sys.alpha, sys.beta, p, n):
            raise AssertionError(f"valuation routes disagree at p={p}, n={n}")
        if profile[n] < 0:
            out.append(Violation(p, "rational", n, Fraction(profile[n])))
    return out


# quadratic parameters


def initial_precision(sys: QuadraticSystem, p: int, n_max: int) -> int:
    size = max(n_max, 1) * sys.d1 * sys.d2 * (sys.M1 + sys.M2 + 1)
    L, pl = 0, 1
    while pl < size:
        pl *= p
        L += 1
    return L + 1


def embed(g: QuadraticNumber, root: int, m: int) -> int:
    """Image of g in Z/m under sqrt(D) -> root."""
    r1 = g.r1.numerator * pow(g.r1.denominator, -1, m)
    r2 = g.r2.numerator * pow(g.r2.denominator, -1, m)
    return (r1 + r2 * root) % m


def split_root(D: int, p: int) -> int:
    """The square root of D mod p chosen as the base of the plus embedding."""
    return sqrt_mod_prime_power(D, PAdicContext(p, 1))


def _split_steps(g: QuadraticNumber, root0: int, D: int, p: int, n_max: int, L: int) -> dict[int, int]:
    """Nonzero valuations of k + sigma(g) for 0 <= k < n_max."""
    while True:
        m = p**L
        sigma = embed(g, hensel_lift_sqrt(root0, D, p, L), m)
        vals = {}
        for k in range((-sigma) % p, n_max, p):
            t = (k + sigma) % m
            if t == 0:
                break
            vals[k] = vp_int(t, p)
        else:
            return vals
        L *= 2


def split_valuation_by_counting(g: QuadraticNumber, root: int, p: int, L: int, n: int) -> int:
    """sum over l <= L of #{0 <= k < n : k = T_l mod p^l}, with T_l = -sigma(g) mod p^l."""
    sigma = embed(g, root, p**L)
    total = 0
    for l in range(1, L + 1):
        pl = p**l
        t = (-sigma) % pl
        total += max(0, -((t - n) // pl))
    return total


def _inert_steps(g: QuadraticNumber, D: int, p: int, n_max: int) -> dict[int, int]:
    """Nonzero p-adic valuations of the norm of k + g for 0 <= k < n_max."""
    a1, b1 = g.r1.numerator, g.r1.denominator
    a2, b2 = g.r2.numerator, g.r2.denominator
    vals = {}
    for k in range(n_max):
        x = (k * b1 + a1) ** 2 * b2 * b2 - D * a2 * a2 * b1 * b1
        if x % p == 0:
            vals[k] = vp_int(x, p)
    return vals


def _profile(sys: QuadraticSystem, steps_of, n_max: int) -> list[int]:
    diff = [0] * n_max
    for g in sys.alpha:
        for k, v in steps_of(g).items():
            diff[k] += v
    for g in sys.beta:
        for k, v in steps_of(g).items():
            diff[k] -= v
    return [0] + list(accumulate(diff))


def quadratic_profiles(sys: QuadraticSystem, p: int, n_max: int) -> dict[str, list[Fraction]]:
    """Per embedding, the valuations of coefficients 0..n_max at the prime p."""
    if p == 2 or sys.E % p == 0:
        raise ValueError(f"p={p} divides E={sys.E}")
    D = sys.D
    if legendre_euler(D, p) == 1:
        root0 = split_root(D, p)
        L = initial_precision(sys, p, n_max)
        plus = _profile(sys, lambda g: _split_steps(g, root0, D, p, n_max, L), n_max)
        minus = _profile(sys, lambda g: _split_steps(g, p - root0, D, p, n_max, L), n_max)
        return {
            "split-plus": [Fraction(v) for v in plus],
            "split-minus": [Fraction(v) for v in minus],
        }
    norms = _profile(sys, lambda g: _inert_steps(g, D, p, n_max), n_max)
    return {"inert": [Fraction(v, 2) for v in norms]}


def coeff_val_quadratic(sys: QuadraticSystem, p: int, n: int) -> list[tuple[str, Fraction]]:
    return [(emb, prof[n]) for emb, prof in quadratic_profiles(sys, p, n).items()]


def _scan_quadratic_prime(sys: QuadraticSystem, n_max: int, p: int) -> list[Violation]:
    out = []
    for emb, prof in quadratic_profiles(sys, p, n_max).items():
        out.extend(Violation(p, emb, n, prof[n]) for n in range(1, n_max + 1) if prof[n] < 0)
    return out


# scanning


def default_threshold(sys) -> int:
    if isinstance(sys, QuadraticSystem):
        return admissible_threshold(sys)
    return 0


def _excluded(sys, p: int) -> bool:
    if isinstance(sys, QuadraticSystem):
        return sys.E % p == 0
    return sys.d % p == 0


def scan_details(sys, cfg: ValuationScanConfig) -> ScanResult:
    p0 = default_threshold(sys) if cfg.p0 is None else cfg.p0
    scanned, skipped = [], []
    for p in primerange(max(cfg.p_min, 2), cfg.p_max + 1):
        (skipped if p <= p0 or _excluded(sys, p) else scanned).append(p)
    worker = _scan_quadratic_prime if isinstance(sys, QuadraticSystem) else _scan_rational_prime
    per_prime = pmap(partial(worker, sys, cfg.n_max), scanned, cfg.threads)
    violations = [v for chunk in per_prime for v in chunk]
    violations.sort(key=lambda v: (v.p, v.n, v.embedding))
    return ScanResult(tuple(violations), tuple(scanned), tuple(skipped), p0)


def scan(sys, cfg: ValuationScanConfig) -> list[Violation]:
    return list(scan_details(sys, cfg).violations)


def inert_norm_valuations_even(sys: QuadraticSystem, p: int, n_max: int) -> bool:
    """Whether every coefficient up to n_max has a norm of even valuation at p."""
    prof = _profile(sys, lambda g: _inert_steps(g, sys.D, p, n_max), n_max)
    return all(v % 2 == 0 for v in prof)


def first_violation(result: ScanResult):
    return result.violations[0] if result.violations else None


def violating_primes(result: ScanResult) -> list[int]:
    return sorted({v.p for v in result.violations})



def dwork_ceiling_condition(sys: RationalSystem, p: int, l: int) -> bool:
    """For every n in 1..p^l, the alpha ceiling sum dominates the beta one.

    The summand for gamma is ceil((n + gamma)/p^l - D^l(gamma)), with D the
    Dwork map; this is the l-th layer of the valuation of the coefficient.
    """
    pl = p**l
    ctx = PAdicContext(p, l)
    da = [(g, dwork_iterated(g, ctx)) for g in sys.alpha]
    db = [(g, dwork_iterated(g, ctx)) for g in sys.beta]
    for n in range(1, pl + 1):
        lhs = sum(math.ceil((n + g) / pl - w) for g, w in da)
        rhs = sum(math.ceil((n + g) / pl - w) for g, w in db)
        if lhs < rhs:
            return False
    return True
