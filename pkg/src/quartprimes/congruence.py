"""Congruence constructions: Goldbach/Chen splits of 2^(l+4), Frey curves,
Q-curves from A^4 + B^2 = 5^l p, traces of Frobenius, and degree bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import factorize, is_prime, valuation
from .errors import PreconditionError, SearchExhausted
from .gaussian import GaussianInt

CHEN_MAX_ELL = 40
TRACE_MAX_P = 10**6
SEMIPRIME_TRIAL_LIMIT = 10**6


def _is_distinct_semiprime(n: int) -> tuple[int, int] | None:
    for p in range(3, min(SEMIPRIME_TRIAL_LIMIT, math.isqrt(n)) + 1, 2):
        if n % p == 0:
            r = n // p
            return (p, r) if r != p and is_prime(r) else None
    f = factorize(n)
    if len(f.factors) == 2 and all(e == 1 for _, e in f.factors):
        return f.primes
    return None


@dataclass(frozen=True)
class ChenDecomposition:
    ell: int
    M: int
    p: int
    cofactor: tuple[int, ...]

    def verify(self) -> bool:
        return (
            self.M == 2 ** (self.ell + 4)
            and self.p % 4 == 3
            and self.p + math.prod(self.cofactor) == self.M
            and len(self.cofactor) in (1, 2)
            and len(set(self.cofactor)) == len(self.cofactor)
            and all(is_prime(v) for v in (self.p, *self.cofactor))
        )


def _check_ell(ell: int) -> None:
    if not 1 <= ell <= CHEN_MAX_ELL:
        raise PreconditionError(f"ell must be in [1, {CHEN_MAX_ELL}], got {ell}", bound=f"1 <= ell <= {CHEN_MAX_ELL}")


def goldbach_pairs(ell: int) -> list[tuple[int, int]]:
    """Every (p, q) with p = 3 mod 4, p and q prime, p + q = 2^(l+4). Exhaustive."""
    _check_ell(ell)
    M = 2 ** (ell + 4)
    return [(p, M - p) for p in range(3, M, 4) if is_prime(p) and is_prime(M - p)]


def chen_search(ell: int, allow_semiprime: bool = False) -> ChenDecomposition:
    """Smallest prime p = 3 mod 4 with 2^(l+4) - p prime (or a product of two distinct primes)."""
    _check_ell(ell)
    M = 2 ** (ell + 4)
    for p in range(3, M, 4):
        if not is_prime(p):
            continue
        q = M - p
        if is_prime(q):
            return ChenDecomposition(ell, M, p, (q,))
        if allow_semiprime:
            qr = _is_distinct_semiprime(q)
            if qr:
                return ChenDecomposition(ell, M, p, tuple(qr))
    raise SearchExhausted(f"no decomposition of 2^{ell + 4} found")


@dataclass(frozen=True)
class CurveQ:
    """y^2 = x^3 + a2 x^2 + a4 x + a6 over the integers."""

    a2: int
    a4: int
    a6: int

    def __post_init__(self):
        if self.discriminant() == 0:
            raise ValueError(f"singular curve {self}")

    def discriminant(self) -> int:
        a2, a4, a6 = self.a2, self.a4, self.a6
        cubic = a2 * a2 * a4 * a4 - 4 * a4**3 - 4 * a2**3 * a6 - 27 * a6 * a6 + 18 * a2 * a4 * a6
        return 16 * cubic


@dataclass(frozen=True)
class FreyRecord:
    p: int
    q: int
    ell: int
    min_discriminant: int
    conductor: int
    v2_disc: int
    curve: CurveQ


def frey_curve(p: int, ell: int) -> CurveQ:
    """The curve with 2-torsion roots 0, p, 2^(l+4).

    Root differences are p, q = 2^(l+4) - p and 2^(l+4), which is what makes the
    minimal discriminant (2^l p q)^2. Placing the third root at -2^(l+4)
    would bring 2^(l+4) + p into the discriminant instead of q.
    """
    M = 2 ** (ell + 4)
    return CurveQ(-(p + M), p * M, 0)


def frey_invariants(p: int, q: int, ell: int) -> FreyRecord:
    M = 2 ** (ell + 4)
    if p + q != M:
        raise PreconditionError(f"{p} + {q} != 2^{ell + 4}", bound="p + q = 2^(ell+4)")
    if p % 4 != 3 or (p * q) % 2 == 0:
        raise PreconditionError(f"need p = 3 mod 4 and p q odd, got p={p}, q={q}", bound="p = 3 mod 4, pq odd")
    if not (is_prime(p) and is_prime(q)):
        raise PreconditionError(f"p={p}, q={q} must both be prime", bound="p, q prime")
    curve = frey_curve(p, ell)
    dmin = (2**ell * p * q) ** 2
    # the minimal model is reached with scaling u = 2, dividing the discriminant by 2^12
    if curve.discriminant() != 2**12 * dmin:
        raise ArithmeticError("model discriminant is not 2^12 times the minimal one")
    v2 = valuation(dmin, 2)
    if v2 % ell:
        raise ArithmeticError(f"v2(disc) = {v2} not divisible by {ell}")
    return FreyRecord(p, q, ell, dmin, 2 * p * q, v2, curve)


def trace_of_frobenius(curve: CurveQ, p: int) -> int:
    """a_p = p + 1 - #E(F_p) by counting points, p an odd prime of good reduction."""
    if p > TRACE_MAX_P:
        raise PreconditionError(f"p = {p} exceeds {TRACE_MAX_P}", bound=f"p <= {TRACE_MAX_P}")
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime", bound="p prime")
    disc = curve.discriminant()
    if disc % p == 0:
        raise PreconditionError(
            f"bad reduction at {p}: v_{p}(disc) = {valuation(disc, p)}", bound="p does not divide disc"
        )
    xs = np.arange(p, dtype=np.int64)
    f = (xs * xs % p) * xs % p
    f = (f + curve.a2 % p * (xs * xs % p) + curve.a4 % p * xs + curve.a6 % p) % p
    roots = np.bincount(xs * xs % p, minlength=p)
    return int(p - roots[f].sum())


def hasse_bound(p: int) -> int:
    return math.isqrt(4 * p)


def degree_lower_bound(ell: int, q: int) -> int:
    """Least degree of a coefficient field allowing ell | Norm(a_q -+ (1 + q)).

    All conjugates of a_q are at most 2 sqrt(q) in absolute value, so the
    norm is at most (1 + sqrt q)^(2 deg); it is nonzero and divisible by ell.
    """
    if ell < 5 or q not in (2, 3, 5, 7):
        raise PreconditionError(f"need ell >= 5 and q in (2, 3, 5, 7), got {ell}, {q}", bound="ell >= 5, q small prime")
    return max(1, math.ceil(math.log(ell) / (2 * math.log(1 + math.sqrt(q)))))


def ogg_numerator(p: int, q: int) -> int:
    """Numerator of (p - 1)(q + 1)/24 in lowest terms."""
    if p == q or p % 2 == 0 or q % 2 == 0 or not (is_prime(p) and is_prime(q)):
        raise PreconditionError(f"need distinct odd primes, got {p}, {q}", bound="p != q odd primes")
    return Fraction((p - 1) * (q + 1), 24).numerator


def eisenstein_level_search(ell: int, t: int) -> int | tuple[int, int]:
    """t = 1: least prime N = 1 mod l. t = 2: (p, q) with q the least prime = -1 mod l
    and p the least odd prime, not 1 mod l, different from q.
    """
    if ell < 5 or not is_prime(ell):
        raise PreconditionError(f"ell must be a prime >= 5, got {ell}", bound="ell >= 5 prime")
    cap = 10**6 * ell
    if t == 1:
        for N in range(ell + 1, cap, ell):
            if is_prime(N):
                return N
    elif t == 2:
        q = next((n for n in range(2 * ell - 1, cap, ell) if is_prime(n)), None)
        if q is None:
            raise SearchExhausted(f"no prime = -1 mod {ell} below {cap}")
        p = next(n for n in range(3, cap, 2) if is_prime(n) and n % ell != 1 and n != q)
        assert ((p - 1) * (q + 1)) % ell == 0 and (p - 1) % ell and (q - 1) % ell
        return p, q
    else:
        raise PreconditionError(f"t must be 1 or 2, got {t}", bound="t in {1, 2}")
    raise SearchExhausted(f"no prime = 1 mod {ell} below {cap}")


def quartic_solution_search(ell: int, bound: int) -> list[tuple[int, int, int]]:
    """All (A, B, p): A, B >= 1, A^4 + B^2 = 5^l p <= 5^l bound, p prime, p not in {2, 5, l}."""
    if ell < 0 or bound < 1:
        raise PreconditionError(f"need ell >= 0, bound >= 1, got {ell}, {bound}", bound="ell >= 0, bound >= 1")
    mod = 5**ell
    top = mod * bound
    if top >= 2**63:
        raise PreconditionError(f"5^{ell} * {bound} overflows 63 bits", bound="5^ell * bound < 2^63")
    out = []
    A = 1
    while A**4 < top:
        a4 = A**4
        B = np.arange(1, math.isqrt(top - a4) + 1, dtype=np.int64)
        v = a4 + B * B
        hit = v % mod == 0
        for b, val in zip(B[hit].tolist(), v[hit].tolist()):
            p = val // mod
            if p in (2, 5) or p == ell or not is_prime(p):
                continue
            out.append((A, b, p))
        A += 1
    out.sort(key=lambda r: (r[2], r[0], r[1]))
    return out


@dataclass(frozen=True)
class QCurveRecord:
    A: int
    B: int
    ell: int
    p: int
    a2: int
    a4: GaussianInt
    discriminant: GaussianInt


def qcurve_construct(A: int, B: int, ell: int, p: int) -> QCurveRecord:
    """y^2 = x^3 + 4A x^2 + 2(A^2 + iB) x, with its discriminant checked two ways."""
    if A < 1 or B < 1 or A**4 + B * B != 5**ell * p:
        raise PreconditionError(f"A^4 + B^2 != 5^{ell} * {p}", bound="A^4 + B^2 = 5^ell p")
    a2 = 4 * A
    w = GaussianInt(A * A, B)
    a4 = 2 * w
    closed = 512 * w * (5**ell * p)
    cubic = 16 * a4 * a4 * (a2 * a2 - 4 * a4)
    if closed != cubic:
        raise ArithmeticError(f"discriminants disagree: {closed} vs {cubic}")
    if w * w.conjugate() != GaussianInt(5**ell * p):
        raise ArithmeticError("norm of A^2 + iB is not 5^ell p")
    return QCurveRecord(A, B, ell, p, a2, a4, closed)
