"""p-adic valuations, the Dwork map, Christol operators and modular square roots."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import isprime

from hyperint.exact import as_rational, frac_bracket, is_nonpositive_integer


class NonResidue(ValueError):
    pass


@dataclass(frozen=True)
class PAdicContext:
    p: int
    l: int = 1
    modulus: int = field(init=False)

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.l < 1:
            raise ValueError("precision exponent l must be at least 1")
        object.__setattr__(self, "modulus", self.p**self.l)


def vp_int(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("v_p(0) is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_rational(q, p: int) -> int:
    q = as_rational(q)
    if q == 0:
        raise ValueError("v_p(0) is infinite")
    return vp_int(q.numerator, p) - vp_int(q.denominator, p)


def _require_unit_denominator(alpha: Fraction, p: int) -> None:
    if alpha.denominator % p == 0:
        raise ValueError(f"{alpha} is not a {p}-adic integer")


def residue_mod(alpha, m: int, p: int) -> int:
    """alpha mod m as an integer in [0, m), for alpha with denominator prime to p."""
    alpha = as_rational(alpha)
    _require_unit_denominator(alpha, p)
    return alpha.numerator * pow(alpha.denominator, -1, m) % m


def t_operator(alpha, ctx: PAdicContext) -> int:
    """The element of {0, ..., p^l - 1} congruent to -alpha mod p^l."""
    return -residue_mod(alpha, ctx.modulus, ctx.p) % ctx.modulus


def r_operator(alpha, ctx: PAdicContext) -> int:
    return ctx.modulus - t_operator(alpha, ctx)


def dwork_step(alpha, p: int) -> Fraction:
    """The unique beta in Z_p with p*beta - alpha in {0, ..., p-1}."""
    alpha = as_rational(alpha)
    _require_unit_denominator(alpha, p)
    t = -alpha.numerator * pow(alpha.denominator, -1, p) % p
    return (alpha + t) / p


def dwork_iterated(alpha, ctx: PAdicContext) -> Fraction:
    x = as_rational(alpha)
    for _ in range(ctx.l):
        x = dwork_step(x, ctx.p)
    return x


def closed_form_applies(alpha, ctx: PAdicContext) -> bool:
    alpha = as_rational(alpha)
    d = alpha.denominator
    return ctx.modulus >= d * (abs(math.floor(1 - alpha)) + frac_bracket(alpha))


def dwork_closed_form(alpha, ctx: PAdicContext) -> Fraction:
    """<omega*alpha> with omega*p^l = 1 mod d(alpha); valid above the size bound."""
    alpha = as_rational(alpha)
    _require_unit_denominator(alpha, ctx.p)
    if not closed_form_applies(alpha, ctx):
        raise ValueError(f"closed form not valid for {alpha} at p^l={ctx.modulus}")
    d = alpha.denominator
    omega = pow(ctx.modulus, -1, d) if d > 1 else 1
    return frac_bracket(omega * alpha)


def dwork_iterate(alpha, ctx: PAdicContext) -> Fraction:
    """l-fold Dwork map; closed form when it is proven, iteration otherwise."""
    alpha = as_rational(alpha)
    _require_unit_denominator(alpha, ctx.p)
    if closed_form_applies(alpha, ctx):
        return dwork_closed_form(alpha, ctx)
    return dwork_iterated(alpha, ctx)


def _levels(alpha: Fraction, n: int, p: int) -> range:
    # Every summand vanishes once p^l > d(alpha)*(n + |alpha|).
    bound = alpha.denominator * (n + abs(alpha))
    top, pl = 0, 1
    while pl <= bound:
        pl *= p
        top += 1
    return range(1, top + 1)


def _check_pochhammer_args(alpha, n: int, p: int) -> Fraction:
    alpha = as_rational(alpha)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if is_nonpositive_integer(alpha):
        raise ValueError(f"{alpha} is a nonpositive integer")
    _require_unit_denominator(alpha, p)
    return alpha


def pochhammer_vp_floor(alpha, n: int, p: int) -> int:
    """sum_l floor((n - 1 + R_{p,l}(alpha)) / p^l)."""
    alpha = _check_pochhammer_args(alpha, n, p)
    if n == 0:
        return 0
    total = 0
    for l in _levels(alpha, n, p):
        ctx = PAdicContext(p, l)
        total += (n - 1 + r_operator(alpha, ctx)) // ctx.modulus
    return total


def pochhammer_vp_ceil(alpha, n: int, p: int) -> int:
    """sum_l ceil((n - T_{p,l}(alpha)) / p^l)."""
    alpha = _check_pochhammer_args(alpha, n, p)
    if n == 0:
        return 0
    total = 0
    for l in _levels(alpha, n, p):
        ctx = PAdicContext(p, l)
        total += -((t_operator(alpha, ctx) - n) // ctx.modulus)
    return total


def pochhammer_vp_dwork(alpha, n: int, p: int) -> int:
    """sum_l ceil((n + alpha)/p^l - D^l(alpha))."""
    alpha = _check_pochhammer_args(alpha, n, p)
    if n == 0:
        return 0
    total = 0
    for l in _levels(alpha, n, p):
        ctx = PAdicContext(p, l)
        total += math.ceil((n + alpha) / ctx.modulus - dwork_iterate(alpha, ctx))
    return total


def pochhammer_vp_direct(alpha, n: int, p: int) -> int:
    """v_p of alpha(alpha+1)...(alpha+n-1), one factor at a time."""
    alpha = _check_pochhammer_args(alpha, n, p)
    a, b = alpha.numerator, alpha.denominator
    return sum(vp_int(a + k * b, p) for k in range(n))


def pochhammer_vp(alpha, n: int, p: int) -> int:
    return pochhammer_vp_ceil(alpha, n, p)


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion, for an odd prime p."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def jacobi_symbol(a: int, n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def mult_order(a: int, m: int) -> int:
    if m < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit mod {m}")
    if m == 1:
        return 1
    a %= m
    h, x = 1, a
    while x != 1:
        x = x * a % m
        h += 1
    return h


def tonelli_shanks(n: int, p: int) -> int:
    """A square root of n modulo the odd prime p."""
    n %= p
    if n == 0:
        return 0
    if legendre_euler(n, p) != 1:
        raise NonResidue(f"{n} is not a square mod {p}")
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_euler(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def hensel_lift_sqrt(root: int, d: int, p: int, l: int) -> int:
    """Lift a square root of d mod p to one mod p^l."""
    x, k = root % p, 1
    while k < l:
        k = min(2 * k, l)
        m = p**k
        x = (x - (x * x - d) * pow(2 * x, -1, m)) % m
    return x


def sqrt_mod_prime_power(d: int, ctx: PAdicContext) -> int:
    """The smaller of the two square roots of d modulo p^l."""
    p = ctx.p
    if p == 2:
        raise ValueError("p must be odd")
    if d % p == 0:
        raise ValueError(f"{d} is not a unit mod {p}")
    x = hensel_lift_sqrt(tonelli_shanks(d, p), d, p, ctx.l)
    return min(x, ctx.modulus - x)
