import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartprimes.arith import build_tables, is_prime
from quartprimes.errors import PreconditionError
from quartprimes.sequence import (
    congruence_sum,
    convention_bridge,
    lambda_sum_positive,
    lambda_sum_weighted,
    lattice_points,
    model_count,
    moebius_identity_failures,
    positive_counts,
    remainder_profile,
    sequence_primes,
    tally,
    tally_segments,
)


def brute_counts(c, x):
    """Literal count of (s, t) in Z^2 with s^2 + t^4 = c n, for n coprime to c."""
    out = [0] * (x + 1)
    r = math.isqrt(c * x)
    for s in range(-r, r + 1):
        for t in range(-r, r + 1):
            v = s * s + t**4
            if 0 < v <= c * x and v % c == 0 and math.gcd(v // c, c) == 1:
                out[v // c] += 1
    return out


@pytest.mark.parametrize("c, x", [(1, 10), (1, 200), (2, 150), (5, 100), (3, 100), (10, 60), (13, 40)])
def test_tally_matches_brute_force(c, x):
    assert tally(c, x).counts.tolist() == brute_counts(c, x)


def test_tally_examples():
    assert tally(1, 10).counts.tolist() == [0, 4, 4, 0, 2, 4, 0, 0, 0, 2, 4]
    assert tally(5, 1).counts[1] == 4


def test_tally_precondition_and_readonly():
    with pytest.raises(PreconditionError) as e:
        tally(10, 100, budget=999)
    assert "999" in e.value.bound
    t = tally(1, 10)
    with pytest.raises(ValueError):
        t.counts[1] = 0


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 30), st.integers(1, 20000), st.integers(1, 6))
def test_tally_thread_count_invariant(c, x, threads):
    assert np.array_equal(tally(c, x, threads=threads).counts, tally(c, x).counts)


def test_tally_segments_concatenate_to_dense():
    dense = tally(7, 5000).counts
    parts = list(tally_segments(7, 5000, width=333))
    assert parts[0][0] == 1
    assert np.array_equal(np.concatenate([w for _, w in parts]), dense[1:])


def test_lattice_points_positive_subset():
    n, w = lattice_points(1, 100, positive=True)
    assert np.all(w == 1)
    assert positive_counts(1, 100).sum() == len(n)


def test_anchor_and_model():
    t = tally(1, 10)
    assert congruence_sum(t, 1) == 20 and model_count(10, 1, 1) == 20
    assert congruence_sum(t, 2) == 10 and model_count(10, 1, 2) == 10
    t3 = tally(1, 100)
    assert congruence_sum(t3, 3) == 12
    assert model_count(100, 1, 3) == Fraction(38, 3)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 10**5))
def test_r1_vanishes(x):
    assert congruence_sum(tally(1, x), 1) == model_count(x, 1, 1)


def test_moebius_identity():
    assert moebius_identity_failures(20, 20, 1000) == []


def test_moebius_checker_detects_corruption(monkeypatch):
    import quartprimes.sequence as seq

    real = seq.tally

    def corrupted(c, x, **kw):
        t = real(c, x, **kw)
        if c == 5:
            counts = t.counts.copy()
            counts[1] += 1
            return seq.SequenceTally(c, x, counts)
        return t

    monkeypatch.setattr(seq, "tally", corrupted)
    bad = seq.moebius_identity_failures(6, 3, 50)
    assert bad and all(c == 5 for c, _, _ in bad)


@pytest.mark.parametrize("c", [3, 7, 21, 11, 19])
def test_obstructed_moduli_are_empty(c):
    t = tally(c, 10**4)
    assert t.nonzero().size == 0
    assert sequence_primes(t) == []


def test_sequence_primes_oracle():
    t = tally(1, 2000)
    expected = [n for n in range(2, 2001) if is_prime(n) and t.counts[n] > 0]
    assert sequence_primes(t) == expected
    assert sequence_primes(t, build_tables(2000)) == expected
    assert sequence_primes(tally(1, 10)) == [2, 5]


def test_lambda_sums():
    tables = build_tables(10**4)
    assert lambda_sum_positive(1, 10, tables) == pytest.approx(math.log(10), abs=1e-12)
    t = tally(1, 100)
    direct = math.fsum(int(t.counts[n]) * tables.mangoldt(n) for n in range(1, 101))
    assert lambda_sum_weighted(t, tables) == pytest.approx(direct, abs=1e-9)
    with pytest.raises(PreconditionError):
        lambda_sum_positive(1, 10**5, tables)


@pytest.mark.parametrize("c", [1, 2, 5, 10, 13])
def test_convention_bridge(c):
    tables = build_tables(5000)
    b = convention_bridge(c, 5000, tables)
    assert b.counts_match
    assert b.weighted == pytest.approx(4 * b.positive_coprime + b.boundary, rel=1e-12)
    assert 0 <= b.boundary <= b.boundary_bound


def test_remainder_profile():
    assert remainder_profile(100, 1, 1).total == 0
    prof = remainder_profile(2000, 1, 100)
    ds = [d for d, _, _ in prof.rows]
    assert 8 not in ds and 27 not in ds and 12 in ds
    assert prof.total == sum(abs(A - M) for _, A, M in prof.rows)
    with pytest.raises(PreconditionError):
        remainder_profile(100, 1, 101)
