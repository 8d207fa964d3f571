import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quartprimes.densities import rho_mult, rho_oracle_table, rho_pair, rho_pair_oracle
from quartprimes.errors import PreconditionError


def test_rho_mult_oracle():
    for m in range(1, 600):
        assert rho_mult(m) == sum(1 for a in range(m) if (a * a + 1) % m == 0)


def test_oracle_table_agrees_with_scalar_oracle():
    for d in (1, 2, 9, 25, 36, 65, 128):
        tab = rho_oracle_table(40, d)
        assert [rho_pair_oracle(b, d) for b in range(41)] == tab.tolist()


def test_rho_pair_small_cases():
    assert rho_pair(0, 1) == 1
    assert rho_pair(1, 5) == 2
    assert rho_pair(1, 3) == 0
    assert rho_pair(0, 9) == 3
    assert rho_pair(0, 4) == 2
    assert rho_pair(2, 8) == 2  # alpha = 2, 6


@given(st.integers(0, 500), st.integers(1, 3000))
def test_rho_pair_matches_oracle(b, d):
    assert rho_pair(b, d) == rho_pair_oracle(b, d)


@given(st.integers(0, 500), st.integers(1, 2000), st.integers(-3, 3))
def test_rho_periodic_in_b(b, d, k):
    assert rho_pair(b, d) == rho_pair(b + k * d, d) == rho_pair(-b, d)


@given(st.integers(0, 300), st.integers(1, 300), st.integers(1, 300))
def test_rho_multiplicative_in_d(b, d, e):
    if math.gcd(d, e) == 1:
        assert rho_pair(b, d * e) == rho_pair(b, d) * rho_pair(b, e)


def test_rho_coprime_b_reduces_to_rho_mult():
    for d in range(1, 300):
        for b in (1, 7, 11):
            if math.gcd(b, d) == 1:
                assert rho_pair(b, d) == rho_mult(d)


def test_oracle_bound():
    with pytest.raises(PreconditionError):
        rho_pair_oracle(1, 10**6 + 1)
    with pytest.raises(PreconditionError):
        rho_pair_oracle(1, 0)
