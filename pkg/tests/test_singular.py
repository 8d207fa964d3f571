import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartprimes.arith import primes_up_to
from quartprimes.densities import rho_mult
from quartprimes.errors import PreconditionError
from quartprimes.sequence import congruence_sum, tally
from quartprimes.singular import (
    G_vanishes,
    big_G,
    big_G_mobius,
    big_G_product,
    big_H,
    big_H_rational,
    g_closed,
    g_sum,
    h,
    kappa,
    kappa_gamma,
    local_sieve_factor,
    main_term_coefficient,
    sieve_constant_partial,
)
from quartprimes.verify import KNOWN_G_UPPER_EXCEPTIONS, KNOWN_H_LAW_EXCEPTIONS


@pytest.mark.parametrize(
    "d, value",
    [(1, 1), (2, Fraction(1, 2)), (3, Fraction(1, 9)), (5, Fraction(9, 25)), (15, Fraction(1, 25)),
     (16, Fraction(1, 8)), (25, Fraction(13, 125)), (27, Fraction(1, 27))],
)
def test_g_values(d, value):
    assert g_sum(d) == g_closed(d) == value


@pytest.mark.parametrize("d, value", [(2, Fraction(1, 2)), (4, Fraction(1, 2)), (3, Fraction(1, 3)),
                                      (5, 1), (25, Fraction(9, 25))])
def test_h_values(d, value):
    assert h(d) == value


@settings(max_examples=200)
@given(st.integers(1, 20000))
def test_g_sum_equals_closed(d):
    assert g_sum(d) == g_closed(d)


@given(st.integers(1, 400), st.integers(1, 400))
def test_g_h_multiplicative(m, n):
    if math.gcd(m, n) == 1:
        assert g_closed(m * n) == g_closed(m) * g_closed(n)
        assert h(m * n) == h(m) * h(n)


def test_g_matches_empirical_density():
    # A_d(x) / A(x) -> g(d); at x = 10^6 the agreement is within 1%
    t = tally(1, 10**6)
    A = t.total()
    for d in (2, 3, 4, 5, 9, 13, 25, 45, 65):
        assert congruence_sum(t, d) / A == pytest.approx(float(g_closed(d)), rel=0.01)


def test_h_prime_laws_odd_primes_and_known_exception():
    ps = [int(p) for p in primes_up_to(1000)]
    fail1 = {p for p in ps if h(p) * p != 1 + 2 * rho_mult(p)}
    fail2 = {p for p in ps if h(p * p) * p * p != p + 2 * rho_mult(p)}
    assert fail1 == fail2 == KNOWN_H_LAW_EXCEPTIONS
    # at 2 the defining sum gives h(2) = h(4) = 1/2, which reproduces H(2) = sqrt 2
    assert big_H(2) == pytest.approx(math.sqrt(2), abs=1e-12)


def test_G_examples():
    assert big_G(5) == Fraction(32, 125)
    assert big_G(2) == Fraction(1, 4)
    assert big_G(3) == big_G(8) == 0
    assert big_H(5) == pytest.approx(3.04105, abs=1e-5)
    assert big_H_rational(5) == Fraction(34, 25)
    with pytest.raises(PreconditionError):
        big_G(0)


@given(st.integers(1, 5000))
def test_G_forms_and_zero_locus(c):
    G = big_G_product(c)
    assert G == big_G_mobius(c)
    assert G >= 0
    assert (G == 0) == G_vanishes(c)


def test_G_upper_bound_violations_are_exactly_known():
    over = {c for c in range(1, 20001) if (G := big_G_product(c)) and G**4 * c**3 > 1}
    assert over == set(KNOWN_G_UPPER_EXCEPTIONS)
    assert big_G(3125) == Fraction(192, 78125)


def test_G_relaxed_lower_bound_minimum():
    low = min((c * big_G_product(c), c) for c in range(1, 10**4 + 1) if big_G_product(c))
    assert low == (Fraction(2, 7), 882)


def test_kappa():
    assert kappa() == pytest.approx(kappa_gamma(), abs=1e-10)
    assert kappa_gamma() == pytest.approx(0.874019184764, abs=1e-12)
    with pytest.raises(PreconditionError):
        kappa(1e-13)


def test_sieve_constant_partial_monotone_approach():
    vals = [sieve_constant_partial(y) for y in (10**2, 10**4, 10**6)]
    assert all(abs(v - 4 / math.pi) < 0.02 for v in vals)
    assert abs(vals[-1] - 4 / math.pi) < abs(vals[0] - 4 / math.pi)
    with pytest.raises(PreconditionError):
        sieve_constant_partial(1)


def test_main_term_coefficient():
    assert main_term_coefficient(1).coefficient == pytest.approx(1.112836, abs=1e-6)
    m5 = main_term_coefficient(5)
    assert m5.coefficient == pytest.approx(0.952574, abs=1e-6)
    assert m5.local_factor == local_sieve_factor(5) == Fraction(25, 16)
    assert main_term_coefficient(3).coefficient == 0.0
