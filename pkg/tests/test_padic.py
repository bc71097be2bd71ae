import math
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import parameters
from hyperint.padic import (
    NonResidue,
    PAdicContext,
    closed_form_applies,
    dwork_closed_form,
    dwork_iterate,
    dwork_iterated,
    dwork_step,
    hensel_lift_sqrt,
    jacobi_symbol,
    mult_order,
    pochhammer_vp,
    pochhammer_vp_ceil,
    pochhammer_vp_direct,
    pochhammer_vp_dwork,
    pochhammer_vp_floor,
    r_operator,
    sqrt_mod_prime_power,
    t_operator,
    vp_rational,
)

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


def brute_t(alpha, p, l):
    """Search {0..p^l-1} for t with p^l dividing the numerator of t + alpha."""
    return next(t for t in range(p**l) if (t + alpha).numerator % p**l == 0)


def brute_dwork(alpha, p, l):
    """The rational beta with denominator prime to p and p^l*beta - alpha in {0..p^l-1}."""
    hits = [(alpha + t) / p**l for t in range(p**l) if ((alpha + t) / p**l).denominator % p]
    assert len(hits) == 1
    return hits[0]


def product_vp(alpha, n, p):
    prod = F(1)
    for k in range(n):
        prod *= alpha + k
    return vp_rational(prod, p)


def test_context_validation():
    assert PAdicContext(7, 3).modulus == 343
    with pytest.raises(ValueError):
        PAdicContext(4)
    with pytest.raises(ValueError):
        PAdicContext(5, 0)


def test_vp_rational():
    assert vp_rational(F(3, 4), 2) == -2
    assert vp_rational(9, 3) == 2
    assert vp_rational(F(5, 7), 11) == 0
    with pytest.raises(ValueError):
        vp_rational(0, 3)


@pytest.mark.parametrize("alpha, p, l", [(F(1, 3), 5, 1), (F(1, 2), 3, 2), (F(0), 7, 3), (F(-5, 6), 7, 2)])
def test_t_and_r_match_brute_force(alpha, p, l):
    ctx = PAdicContext(p, l)
    assert t_operator(alpha, ctx) == brute_t(alpha, p, l)
    assert r_operator(alpha, ctx) == p**l - brute_t(alpha, p, l)


def test_operator_values():
    # frozen from brute_t
    assert t_operator(F(1, 3), PAdicContext(5)) == 3
    assert t_operator(F(1, 2), PAdicContext(3, 2)) == 4
    assert t_operator(F(0), PAdicContext(7, 3)) == 0
    assert r_operator(F(1, 3), PAdicContext(5)) == 2
    assert r_operator(F(1, 2), PAdicContext(3, 2)) == 5
    assert r_operator(F(0), PAdicContext(7)) == 7
    with pytest.raises(ValueError):
        t_operator(F(1, 5), PAdicContext(5))


def test_dwork_values():
    assert dwork_iterate(F(1, 3), PAdicContext(5)) == F(2, 3) == brute_dwork(F(1, 3), 5, 1)
    assert dwork_iterate(F(1), PAdicContext(5)) == 1 == brute_dwork(F(1), 5, 1)
    assert dwork_iterate(F(1, 2), PAdicContext(3, 2)) == F(1, 2) == brute_dwork(F(1, 2), 3, 2)
    with pytest.raises(ValueError):
        dwork_iterate(F(1, 3), PAdicContext(3))


def test_closed_form_refuses_below_bound():
    alpha = F(-17, 3)
    ctx = PAdicContext(5)
    assert not closed_form_applies(alpha, ctx)
    with pytest.raises(ValueError):
        dwork_closed_form(alpha, ctx)
    assert dwork_iterate(alpha, ctx) == brute_dwork(alpha, 5, 1)


def test_pochhammer_values():
    assert pochhammer_vp(F(1, 2), 2, 3) == 1
    assert pochhammer_vp(F(3, 7), 0, 5) == 0
    assert pochhammer_vp(F(1, 3), 7, 5) == 1
    assert pochhammer_vp(F(1, 31), 2, 2) == 5
    with pytest.raises(ValueError):
        pochhammer_vp(F(-2), 3, 5)
    with pytest.raises(ValueError):
        pochhammer_vp(F(1, 5), 3, 5)


def test_sqrt_values():
    assert sqrt_mod_prime_power(2, PAdicContext(7)) in (3, 4)
    assert sqrt_mod_prime_power(2, PAdicContext(7, 2)) in (10, 39)
    with pytest.raises(NonResidue):
        sqrt_mod_prime_power(2, PAdicContext(5))
    with pytest.raises(ValueError):
        sqrt_mod_prime_power(3, PAdicContext(3))
    with pytest.raises(ValueError):
        sqrt_mod_prime_power(1, PAdicContext(2))


def test_jacobi_and_order_values():
    assert jacobi_symbol(2, 7) == 1
    assert jacobi_symbol(2, 5) == -1
    assert jacobi_symbol(0, 3) == 0
    assert mult_order(2, 7) == 3
    assert mult_order(1, 12) == 1
    assert mult_order(3, 8) == 2
    with pytest.raises(ValueError):
        mult_order(2, 8)


@st.composite
def padic_cases(draw, max_l=4):
    p = draw(st.sampled_from(SMALL_PRIMES))
    alpha = draw(parameters(max_den=40, bound=30))
    assume(alpha.denominator % p)
    return alpha, p, draw(st.integers(1, max_l))


@given(padic_cases())
def test_t_is_monotone_in_level(case):
    alpha, p, l = case
    t = t_operator(alpha, PAdicContext(p, l))
    assert 0 <= t < p**l
    assert (t + alpha).numerator % p**l == 0
    assert t <= t_operator(alpha, PAdicContext(p, l + 1))


@given(padic_cases())
def test_dwork_composition_and_sandwich(case):
    alpha, p, l = case
    ctx = PAdicContext(p, l)
    w = dwork_iterate(alpha, ctx)
    assert w == dwork_iterated(alpha, ctx)
    assert dwork_iterate(alpha, PAdicContext(p, l + 1)) == dwork_step(w, p)
    assert 0 <= w - alpha / p**l <= 1 - F(1, p**l)
    shift = p**l * w - alpha
    assert shift.denominator == 1 and 0 <= shift < p**l
    if closed_form_applies(alpha, ctx):
        assert dwork_closed_form(alpha, ctx) == w


@settings(max_examples=300)
@given(padic_cases(max_l=1), st.integers(0, 600))
def test_pochhammer_formulas_agree(case, n):
    alpha, p, _ = case
    v = pochhammer_vp_direct(alpha, n, p)
    assert pochhammer_vp_floor(alpha, n, p) == v
    assert pochhammer_vp_ceil(alpha, n, p) == v
    assert pochhammer_vp_dwork(alpha, n, p) == v


@given(padic_cases(max_l=1), st.integers(0, 40))
def test_direct_valuation_matches_exact_product(case, n):
    alpha, p, _ = case
    assert pochhammer_vp_direct(alpha, n, p) == product_vp(alpha, n, p)


ODD_PRIMES = [p for p in sympy.primerange(3, 200)]


@given(st.sampled_from(ODD_PRIMES), st.integers(1, 10**6), st.integers(1, 6))
def test_sqrt_mod_prime_power_property(p, d, l):
    assume(d % p and sympy.jacobi_symbol(d, p) == 1)
    m = p**l
    x = sqrt_mod_prime_power(d, PAdicContext(p, l))
    assert 0 <= x < m and x * x % m == d % m
    assert x <= m - x
    root_p = x % p
    assert hensel_lift_sqrt(root_p, d, p, l + 2) % m == x
    assert x in {y % m for y in sympy.sqrt_mod(d, m, all_roots=True)}


@given(st.integers(-10**6, 10**6), st.integers(0, 5000))
def test_jacobi_matches_sympy(a, k):
    n = 2 * k + 1
    assert jacobi_symbol(a, n) == sympy.jacobi_symbol(a % n, n)


@given(st.integers(1, 500), st.integers(2, 500))
def test_mult_order_matches_sympy(a, m):
    assume(math.gcd(a, m) == 1)
    assert mult_order(a, m) == sympy.n_order(a, m)
