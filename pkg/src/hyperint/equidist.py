"""Roots of quadratic congruences modulo primes in arithmetic progressions.

All statistics are exact rationals. The thresholds used in experiments are
calibration choices for finite ranges and are reported as heuristics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Sequence

from sympy import integer_nthroot, nextprime, primepi, primerange

from hyperint.padic import NonResidue, hensel_lift_sqrt, tonelli_shanks
from hyperint.parallel import pmap


@dataclass(frozen=True)
class QuadraticPoly:
    A: int
    B: int
    C: int

    def __post_init__(self):
        if self.A <= 0:
            raise ValueError("leading coefficient must be positive")
        if math.gcd(self.A, self.B, self.C) != 1:
            raise ValueError("coefficients must be coprime")
        disc = self.discriminant
        if disc >= 0 and math.isqrt(disc) ** 2 == disc:
            raise ValueError(f"discriminant {disc} is a perfect square")

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def __call__(self, z: int) -> int:
        return (self.A * z + self.B) * z + self.C


@dataclass(frozen=True)
class Progression:
    modulus: int
    residues: tuple

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(sorted({r % self.modulus for r in self.residues})))

    def __contains__(self, p: int) -> bool:
        return p % self.modulus in self.residues


@dataclass(frozen=True)
class RootSample:
    p: int
    v: int
    ratio: Fraction


def is_degenerate(f: QuadraticPoly, p: int) -> bool:
    return p == 2 or (2 * f.A * f.discriminant) % p == 0


def roots_mod_p(f: QuadraticPoly, p: int) -> list[int]:
    if is_degenerate(f, p):
        raise ValueError(f"p={p} divides 2*A*disc or is 2")
    try:
        s = tonelli_shanks(f.discriminant, p)
    except NonResidue:
        return []
    inv = pow(2 * f.A, -1, p)
    return sorted({(-f.B + s) * inv % p, (-f.B - s) * inv % p})


def progression_primes(prog: Progression, x_max: int) -> list[int]:
    return [p for p in primerange(2, x_max + 1) if p in prog]


def _samples_at(f: QuadraticPoly, p: int) -> list[RootSample]:
    if is_degenerate(f, p):
        return []
    return [RootSample(p, v, Fraction(v, p)) for v in roots_mod_p(f, p)]


def sample_X(f: QuadraticPoly, prog: Progression, x_max: int, threads: int = 1) -> list[RootSample]:
    primes = progression_primes(prog, x_max)
    per_prime = pmap(partial(_samples_at, f), primes, threads)
    return [s for chunk in per_prime for s in chunk]


def star_discrepancy(samples: Sequence) -> Fraction:
    """Exact star discrepancy of the ratios (RootSample or bare rationals)."""
    ratios = sorted(s.ratio if isinstance(s, RootSample) else Fraction(s) for s in samples)
    if not ratios:
        raise ValueError("no samples")
    N = len(ratios)
    return max(max(abs(Fraction(i, N) - r), abs(Fraction(i - 1, N) - r)) for i, r in enumerate(ratios, start=1))


def histogram(samples: Sequence[RootSample], bins: int) -> list[int]:
    counts = [0] * bins
    for s in samples:
        counts[min(bins - 1, math.floor(s.ratio * bins))] += 1
    return counts


def _has_square_root(f: QuadraticPoly, p: int) -> bool:
    if is_degenerate(f, p):
        return False
    return any(f(v) % (p * p) == 0 for v in roots_mod_p(f, p))


def count_mod_p2_roots(f: QuadraticPoly, prog: Progression, x_max: int, threads: int = 1) -> tuple[int, Fraction]:
    primes = progression_primes(prog, x_max)
    count = sum(pmap(partial(_has_square_root, f), primes, threads))
    total = int(primepi(x_max))
    return count, (Fraction(count, total) if total else Fraction(0))


def gap_bound(f: QuadraticPoly, M: int, N: int) -> int:
    A, B, C = f.A, f.B, f.C
    return 4 * A * N * N * (abs(A) * (M + N) ** 2 + abs(B) * (M + N) + abs(C))


def gap_check(f: QuadraticPoly, rN: Fraction, M: int, p: int, l: int, v: int, N: int | None = None) -> bool:
    """|r/N - v/p^l| > M/p^l for a root v of f mod p^l, under the size bound."""
    rN = Fraction(rN)
    N = rN.denominator if N is None else N
    r = rN * N
    if r.denominator != 1 or not 0 <= r <= N:
        raise ValueError("need r/N with 0 <= r <= N")
    pl = p**l
    if math.gcd(p, 4 * f.A * N * f.discriminant) != 1:
        raise ValueError("p must be prime to 4*A*N*disc")
    if not 0 <= v <= pl or f(v) % pl:
        raise ValueError("v must be a root of f mod p^l in [0, p^l]")
    if pl <= gap_bound(f, M, N):
        raise ValueError("p^l is below the size bound")
    return abs(rN - Fraction(v, pl)) > Fraction(M, pl)


def _square_value_cofactors(f: QuadraticPoly, a: int, x_max: int) -> set[int]:
    """All q <= x_max with f(n) = a*q^2 for some n >= 1."""
    limit = a * x_max * x_max
    vertex = max(1, -f.B // (2 * f.A) + 1)
    found = set()
    n = 1
    while True:
        y = f(n)
        if y > limit and n > vertex:
            break
        if y > 0 and y % a == 0:
            q = math.isqrt(y // a)
            if q * q * a == y and q <= x_max:
                found.add(q)
        n += 1
    return found


def count_prime_square_values(f: QuadraticPoly, prog: Progression, x_max: int, a: int) -> int:
    if not 1 <= a <= f.A:
        raise ValueError("a must lie in 1..A")
    primes = set(progression_primes(prog, x_max))
    return len(primes & _square_value_cofactors(f, a, x_max))


def random_gap_instance(rng) -> tuple:
    """A random instance satisfying every precondition of gap_check."""
    while True:
        A, B, C = rng.randint(1, 3), rng.randint(-5, 5), rng.randint(-9, 9)
        try:
            f = QuadraticPoly(A, B, C)
        except ValueError:
            continue
        N = rng.randint(1, 12)
        M = rng.randint(1, 5)
        r = rng.randint(0, N)
        l = rng.randint(1, 3)
        bound = gap_bound(f, M, N)
        p = int(nextprime(integer_nthroot(bound, l)[0] + rng.randint(1, 500)))
        roots = roots_mod_p(f, p) if (2 * A * f.discriminant) % p else []
        if not roots or (4 * A * N * f.discriminant) % p == 0 or p**l <= bound:
            continue
        v0 = rng.choice(roots)
        # lift via a square root of the discriminant
        m = p**l
        s = hensel_lift_sqrt((2 * A * v0 + B) % p, f.discriminant, p, l)
        v = (s - B) * pow(2 * A, -1, m) % m
        return f, Fraction(r, N), M, p, l, v, N
