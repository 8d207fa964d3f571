"""Local densities rho(b; d) = #{alpha mod d : alpha^2 + b^2 = 0 mod d}."""

from __future__ import annotations

import math

import numpy as np

from .arith import Factorization, chi4, factorize, quartic_decompose
from .errors import PreconditionError

ORACLE_MAX_MODULUS = 10**6


def rho_mult(m: int | Factorization) -> int:
    """Roots of alpha^2 + 1 mod m: prod of 1 + chi4(p), and 0 when 4 | m."""
    f = m if isinstance(m, Factorization) else factorize(m)
    if f.n % 4 == 0:
        return 0
    r = 1
    for p, _ in f.factors:
        r *= 1 + chi4(p)
        if r == 0:
            break
    return r


def rho_pair(b: int, d: int | Factorization) -> int:
    """Closed form of rho(b; d).

    With d = d1 * d2**2, b2 = (b, d2) and b1 = (b / b2, d1*), the count is
    b2 * rho_mult((d1* d2 / (b1 b2))**2). gcd(0, n) = n handles b = 0.
    """
    f = d if isinstance(d, Factorization) else factorize(d)
    b = b % f.n
    q = quartic_decompose(f)
    d2 = q.d2
    b2 = math.gcd(b, d2)
    b1 = math.gcd(b // b2, q.d1star)
    core = q.d1star * d2 // (b1 * b2)
    # rho_mult(core**2) only needs the primes of core and whether 4 | core**2
    if core % 2 == 0:
        return 0
    r = b2
    for p, _ in f.factors:
        if p != 2 and core % p == 0:
            r *= 1 + chi4(p)
            if r == 0:
                return 0
    return r


def rho_pair_oracle(b: int, d: int) -> int:
    """Literal count of alpha in [0, d) with d | alpha^2 + b^2."""
    if d < 1:
        raise PreconditionError(f"modulus must be >= 1, got {d}", bound="d >= 1")
    if d > ORACLE_MAX_MODULUS:
        raise PreconditionError(
            f"oracle loop over d = {d} residues exceeds {ORACLE_MAX_MODULUS}",
            bound=f"d <= {ORACLE_MAX_MODULUS}",
        )
    alpha = np.arange(d, dtype=np.int64)
    return int(np.count_nonzero((alpha * alpha + (b % d) ** 2) % d == 0))


def rho_oracle_table(b_max: int, d: int) -> np.ndarray:
    """Oracle counts for every 0 <= b <= b_max at one modulus, in one pass."""
    if d > ORACLE_MAX_MODULUS:
        raise PreconditionError(f"d = {d} too large for the oracle", bound=f"d <= {ORACLE_MAX_MODULUS}")
    alpha2 = (np.arange(d, dtype=np.int64) ** 2) % d
    b2 = (np.arange(b_max + 1, dtype=np.int64) ** 2) % d
    return np.count_nonzero((alpha2[None, :] + b2[:, None]) % d == 0, axis=1)
