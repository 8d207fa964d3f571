"""Arithmetic primitives: primality, factorization, sieved tables, quartic splits.

Everything here is exact integer arithmetic except the von Mangoldt values,
which are kept as (prime, exponent) data and only turned into ``log p`` when
a caller sums them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

import numpy as np

from .errors import PreconditionError, TableSizeError

MAX_FACTOR_INPUT = 2**63
DEFAULT_SEGMENT = 2**20
DEFAULT_MAX_TABLE_LIMIT = 10**8
# spf (int32) + mobius (int8) + prime-power base (int32)
TABLE_BYTES_PER_ENTRY = 9

# First 12 primes are a complete Miller-Rabin witness set below 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n, as an int64 array (plain Eratosthenes)."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    for i in range(2, math.isqrt(n) + 1):
        if is_p[i]:
            is_p[i * i :: i] = False
    return np.flatnonzero(is_p).astype(np.int64)


_SMALL_PRIMES = tuple(int(p) for p in primes_up_to(1000))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 2**64 (and well beyond)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    # fixed seeds keep factorization output (and timing) reproducible
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"Pollard-Brent failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    f = _pollard_brent(n)
    _split(f, out)
    _split(n // f, out)


@lru_cache(maxsize=1 << 16)
def _factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    found: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        _split(n, found)
    return tuple(sorted(found.items()))


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def is_cubefree(self) -> bool:
        return all(e <= 2 for _, e in self.factors)

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


def factorize(n: int) -> Factorization:
    """Factor 1 <= n < 2**63 into ascending (prime, exponent) pairs."""
    n = int(n)
    if n < 1:
        raise PreconditionError(f"factorize needs n >= 1, got {n}", bound="n >= 1")
    if n >= MAX_FACTOR_INPUT:
        raise PreconditionError(f"factorize needs n < 2**63, got {n}", bound="n < 2**63")
    return Factorization(n, _factor_pairs(n))


def divisors(n: int) -> list[int]:
    return factorize(n).divisors()


def mobius(n: int) -> int:
    f = factorize(n)
    if not f.is_squarefree():
        return 0
    return -1 if len(f.factors) % 2 else 1


def valuation(n: int, p: int) -> int:
    """Exponent of p in n; n = 0 has no finite valuation and is rejected."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def chi4(n: int) -> int:
    """The nontrivial character mod 4."""
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


class ArithValues(NamedTuple):
    phi: int
    tau: int
    tau5: int
    mu: int


def arith_values(f: Factorization) -> ArithValues:
    """Euler phi, divisor count, 5-fold divisor count and Mobius of f.n."""
    phi = tau = tau5 = 1
    mu = 1
    for p, e in f.factors:
        phi *= (p - 1) * p ** (e - 1)
        tau *= e + 1
        tau5 *= math.comb(e + 4, 4)
        mu = 0 if e > 1 else -mu
    return ArithValues(phi, tau, tau5, mu)


@dataclass(frozen=True)
class QuarticDecomposition:
    """d = d1 * d3**2 * d4**4 with d1, d3 squarefree; d1star = d1 / (d1, 2)."""

    d1: int
    d3: int
    d4: int
    d1star: int

    @property
    def d2(self) -> int:
        return self.d3 * self.d4**2

    @property
    def d(self) -> int:
        return self.d1 * self.d3**2 * self.d4**4


def quartic_decompose(d: int | Factorization) -> QuarticDecomposition:
    f = d if isinstance(d, Factorization) else factorize(d)
    d1 = d3 = d4 = 1
    for p, e in f.factors:
        d4 *= p ** (e // 4)
        r = e % 4
        d3 *= p ** (r // 2)
        d1 *= p ** (r % 2)
    return QuarticDecomposition(d1, d3, d4, d1 // math.gcd(d1, 2))


@dataclass(frozen=True, eq=False)
class ArithTables:
    """Sieved tables for 0 <= n <= limit. Index 0 is a placeholder.

    ``mangoldt_prime[n]`` is p when n = p**k (k >= 1) and 0 otherwise, so
    Lambda(n) = log(mangoldt_prime[n]) exactly where it is nonzero.
    """

    limit: int
    smallest_prime_factor: np.ndarray
    mobius: np.ndarray
    mangoldt_prime: np.ndarray

    def mu(self, n: int) -> int:
        return int(self.mobius[n])

    def mangoldt(self, n: int) -> float:
        p = int(self.mangoldt_prime[n])
        return math.log(p) if p else 0.0

    def mangoldt_array(self) -> np.ndarray:
        out = np.zeros(self.limit + 1)
        nz = self.mangoldt_prime > 0
        out[nz] = np.log(self.mangoldt_prime[nz].astype(np.float64))
        return out

    def psi(self, x: int) -> float:
        """Chebyshev psi(x) = sum of Lambda(n) for n <= x, exactly rounded."""
        return math.fsum(self.mangoldt_array()[1 : x + 1])

    def primes(self, upto: int | None = None) -> np.ndarray:
        upto = self.limit if upto is None else min(upto, self.limit)
        idx = np.arange(upto + 1)
        return np.flatnonzero((self.smallest_prime_factor[: upto + 1] == idx) & (idx >= 2))

    def factorize(self, n: int) -> Factorization:
        if not 1 <= n <= self.limit:
            return factorize(n)
        pairs: list[tuple[int, int]] = []
        while n > 1:
            p = int(self.smallest_prime_factor[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
        return Factorization(math.prod(p**e for p, e in pairs), tuple(pairs))


def _sieve_segment(lo: int, hi: int, base: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Smallest prime factor and Mobius for lo <= n < hi, given all primes <= sqrt(hi)."""
    size = hi - lo
    spf = np.zeros(size, dtype=np.int32)
    mu = np.ones(size, dtype=np.int8)
    rem = np.arange(lo, hi, dtype=np.int64)
    for p in base[::-1]:
        p = int(p)
        if p * p >= hi:
            # cofactors here are < p, so smaller primes overwrite all but n = p
            first = -(-lo // p) * p
        else:
            first = max(p * p, -(-lo // p) * p)
        if first < hi:
            spf[first - lo :: p] = p
    for p in base:
        p = int(p)
        first = -(-lo // p) * p
        if first >= hi:
            continue
        sl = slice(first - lo, None, p)
        mu[sl] *= -1
        rem[sl] //= p
        sq = p * p
        first_sq = -(-lo // sq) * sq
        if first_sq < hi:
            mu[first_sq - lo :: sq] = 0
    mu[rem > 1] *= -1
    n = np.arange(lo, hi, dtype=np.int64)
    unset = spf == 0
    spf[unset] = n[unset]
    return spf, mu


def build_tables(
    limit: int,
    segment_size: int = DEFAULT_SEGMENT,
    max_limit: int = DEFAULT_MAX_TABLE_LIMIT,
) -> ArithTables:
    """Segmented sieve for smallest prime factor, Mobius and prime-power bases."""
    if limit < 1:
        raise PreconditionError(f"limit must be >= 1, got {limit}", bound="limit >= 1")
    if limit > max_limit:
        raise TableSizeError(limit, (limit + 1) * TABLE_BYTES_PER_ENTRY, max_limit)
    base = primes_up_to(math.isqrt(limit) + 1)
    spf_parts, mu_parts = [], []
    for lo in range(0, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)
        spf, mu = _sieve_segment(lo, hi, base)
        spf_parts.append(spf)
        mu_parts.append(mu)
    spf = np.concatenate(spf_parts)
    mu = np.concatenate(mu_parts)
    spf[0] = 0
    spf[1] = 1
    mu[0] = 0
    mu[1] = 1

    idx = np.arange(limit + 1, dtype=np.int64)
    mp = np.zeros(limit + 1, dtype=np.int32)
    is_p = (spf == idx) & (idx >= 2)
    mp[is_p] = idx[is_p]
    for p in base:
        p = int(p)
        q = p * p
        while q <= limit:
            mp[q] = p
            q *= p
    for arr in (spf, mu, mp):
        arr.setflags(write=False)
    return ArithTables(limit, spf, mu, mp)


def iter_prime_powers(x: int) -> Iterator[tuple[int, int, int]]:
    """Yield (p**k, p, k) for every prime power <= x in ascending order of p, k."""
    for p in primes_up_to(x):
        p = int(p)
        q, k = p, 1
        while q <= x:
            yield q, p, k
            q *= p
            k += 1
