"""Seeded generators of small random rational systems for experiments."""

from __future__ import annotations

import random
from fractions import Fraction

from sympy import nextprime, primerange

from hyperint.rational_criterion import RationalSystem

DENOMINATORS = tuple(range(1, 13))


def random_parameter(rng: random.Random, max_den: int, max_abs: Fraction) -> Fraction:
    while True:
        q = rng.choice([d for d in DENOMINATORS if d <= max_den])
        bound = int(max_abs * q)
        x = Fraction(rng.randint(-bound, bound), q)
        if not (x.denominator == 1 and x <= 0):
            return x


def random_system(rng: random.Random, r: int, s: int, max_d: int = 12, max_abs: Fraction = Fraction(2)) -> RationalSystem:
    while True:
        alpha = [random_parameter(rng, max_d, max_abs) for _ in range(r)]
        beta = [random_parameter(rng, max_d, max_abs) for _ in range(s)]
        sys = RationalSystem(tuple(alpha), tuple(beta))
        if sys.d <= max_d:
            return sys


def valid_primes(sys: RationalSystem, p_max: int) -> list[int]:
    """Primes p <= p_max above M (so p does not divide d)."""
    return [p for p in primerange(2, p_max + 1) if p > sys.M]


def smallest_valid_prime(sys: RationalSystem) -> int:
    return int(nextprime(int(sys.prime_bound)))


def layer_systems(seed: int, count: int, p_max: int = 31):
    """Systems with r = s <= 3, d <= 12 and at least one prime in (M, p_max]."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r = rng.randint(1, 3)
        sys = random_system(rng, r, r, max_d=12, max_abs=Fraction(1, 2))
        primes = valid_primes(sys, p_max)
        if primes:
            out.append((sys, primes))
    return out


def criterion_systems(seed: int, count: int, max_d: int = 12):
    """Systems of mixed shape r, s in 1..3 for the per-prime criterion."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        s = rng.randint(1, 3)
        r = s + (i % 3) - 1  # cycle through r < s, r = s, r > s
        out.append(random_system(rng, max(r, 1), s, max_d=max_d, max_abs=Fraction(3, 2)))
    return out
