"""The weighted sequence a(c)_n and the sums built on it.

a(c)_n counts lattice points (s, t) with s^2 + t^4 = c n, for n coprime to c,
and is 0 otherwise. Summing the weight Z(b) over (a, b) with b = t^2 gives the
same numbers, since Z(m^2) = 2 accounts for t = +-m.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

from .arith import ArithTables, factorize, is_prime, mobius
from .densities import rho_pair
from .errors import PreconditionError

DEFAULT_ENUM_BOUND = 10**9
MAX_DENSE_TALLY = 10**8


@dataclass(frozen=True, eq=False)
class SequenceTally:
    c: int
    x: int
    counts: np.ndarray = field(repr=False)

    def total(self, up_to: int | None = None) -> int:
        """A(up_to; c), the sum of a(c)_n for n <= up_to."""
        up_to = self.x if up_to is None else up_to
        return int(self.counts[1 : up_to + 1].sum(dtype=np.int64))

    def nonzero(self) -> np.ndarray:
        return np.flatnonzero(self.counts)


def _check_enum(c: int, x: int, budget: int) -> None:
    if c < 1 or x < 1:
        raise PreconditionError(f"need c >= 1 and x >= 1, got c={c}, x={x}", bound="c, x >= 1")
    if c * x > budget:
        raise PreconditionError(
            f"c*x = {c * x} exceeds the enumeration budget {budget}", bound=f"c*x <= {budget}"
        )


def _strip(c: int, x: int, t_lo: int, t_hi: int, positive: bool) -> tuple[np.ndarray, np.ndarray]:
    """Points with t in [t_lo, t_hi), s >= 0, t >= 0 (both >= 1 if positive).

    Returns n = (s^2 + t^4) / c and the number of signed points each (s, t) stands for.
    """
    cx = c * x
    ns, ws = [], []
    for t in range(t_lo, t_hi):
        t4 = t**4
        if t4 > cx:
            break
        s = np.arange(1 if positive else 0, math.isqrt(cx - t4) + 1, dtype=np.int64)
        v = s * s + t4
        keep = (v % c == 0) & (v > 0)
        s, n = s[keep], v[keep] // c
        if not positive:
            coprime = np.gcd(n, c) == 1
            s, n = s[coprime], n[coprime]
            w = np.where(s == 0, 1, 2) * (1 if t == 0 else 2)
        else:
            w = np.ones_like(n)
        ns.append(n)
        ws.append(w.astype(np.int64))
    if not ns:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(ns), np.concatenate(ws)


def lattice_points(
    c: int, x: int, *, positive: bool = False, threads: int = 1
) -> tuple[np.ndarray, np.ndarray]:
    """All representations s^2 + t^4 = c n with n <= x, as (n, weight) arrays.

    ``positive=False``: quadrant points with signed-point weights, n coprime to c.
    ``positive=True``: pairs with s, t >= 1, weight 1, no coprimality filter.
    Strips of t are independent; results are concatenated in t order, so
    the output does not depend on ``threads``.
    """
    t_max = math.isqrt(math.isqrt(c * x))
    t0 = 1 if positive else 0
    if threads <= 1 or t_max < 8:
        return _strip(c, x, t0, t_max + 1, positive)
    bounds = np.linspace(t0, t_max + 1, threads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda ab: _strip(c, x, ab[0], ab[1], positive), zip(bounds[:-1], bounds[1:])))
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


def tally(c: int, x: int, *, budget: int = DEFAULT_ENUM_BOUND, threads: int = 1) -> SequenceTally:
    """Dense counts a(c)_n for 0 <= n <= x (index 0 unused)."""
    _check_enum(c, x, budget)
    if x > MAX_DENSE_TALLY:
        raise PreconditionError(
            f"dense tally of length {x} exceeds {MAX_DENSE_TALLY}; use tally_segments",
            bound=f"x <= {MAX_DENSE_TALLY}",
        )
    n, w = lattice_points(c, x, threads=threads)
    counts = np.bincount(n, weights=w, minlength=x + 1).astype(np.int32)
    counts.setflags(write=False)
    return SequenceTally(c, x, counts)


def tally_segments(
    c: int, x: int, width: int = 2**20, *, budget: int = DEFAULT_ENUM_BOUND
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (lo, counts) windows covering 1 <= n <= x, counts[i] = a(c)_{lo+i}.

    Only the lattice points are held in memory, never a length-x array.
    """
    _check_enum(c, x, budget)
    n, w = lattice_points(c, x)
    order = np.argsort(n, kind="stable")
    n, w = n[order], w[order]
    for lo in range(1, x + 1, width):
        hi = min(lo + width, x + 1)
        a, b = np.searchsorted(n, [lo, hi])
        window = np.bincount(n[a:b] - lo, weights=w[a:b], minlength=hi - lo).astype(np.int32)
        yield lo, window


def congruence_sum(t: SequenceTally, d: int, up_to: int | None = None) -> int:
    """A_d(up_to; c): sum of a(c)_n over n <= up_to with d | n."""
    up_to = t.x if up_to is None else up_to
    if up_to > t.x:
        raise PreconditionError(f"up_to = {up_to} beyond tally range {t.x}", bound="up_to <= x")
    if math.gcd(d, t.c) > 1:
        return 0
    return int(t.counts[d : up_to + 1 : d].sum(dtype=np.int64))


def _a_counts(cx: int, b: int) -> int:
    """#{a in Z : 0 < a^2 + b^2 <= cx}."""
    if b == 0:
        return 2 * math.isqrt(cx)
    if b * b > cx:
        return 0
    return 2 * math.isqrt(cx - b * b) + 1


def model_count(x: int, c: int, d: int) -> Fraction:
    """M_d(x; c), the local-density model of A_d(x; c), as an exact rational.

    Sum over k | c of mu(k)/(ckd) times the Z-weighted local densities rho(b; ckd)
    over lattice points 0 < a^2 + b^2 <= cx; zero when (d, c) > 1.
    """
    if math.gcd(d, c) > 1:
        return Fraction(0)
    cx = c * x
    bs = [0] + [m * m for m in range(1, math.isqrt(math.isqrt(cx)) + 1)]
    weights = [(1 if b == 0 else 2) * _a_counts(cx, b) for b in bs]
    total = Fraction(0)
    for k in factorize(c).divisors():
        mu = mobius(k)
        if mu == 0:
            continue
        mod = factorize(c * k * d)
        inner = sum(w * rho_pair(b, mod) for b, w in zip(bs, weights))
        total += Fraction(mu * inner, c * k * d)
    return total


@dataclass(frozen=True)
class RemainderProfile:
    x: int
    c: int
    D: int
    total: Fraction
    scale: float
    rows: tuple[tuple[int, int, Fraction], ...]

    @property
    def ratio(self) -> float:
        """total / (D^(1/4) x^(9/16))."""
        return float(self.total) / self.scale


def remainder_profile(x: int, c: int, D: int, t: SequenceTally | None = None) -> RemainderProfile:
    """Sum over cubefree d <= D of |A_d(x; c) - M_d(x; c)|, with the per-d rows."""
    if not 1 <= D <= x:
        raise PreconditionError(f"need 1 <= D <= x, got D={D}, x={x}", bound="D <= x")
    t = tally(c, x) if t is None else t
    rows = []
    total = Fraction(0)
    for d in range(1, D + 1):
        if not factorize(d).is_cubefree():
            continue
        A = congruence_sum(t, d)
        M = model_count(x, c, d)
        rows.append((d, A, M))
        total += abs(A - M)
    return RemainderProfile(x, c, D, total, D**0.25 * x ** (9 / 16), tuple(rows))


def _lambda_dot(counts: np.ndarray, tables: ArithTables, x: int) -> float:
    mp = tables.mangoldt_prime[: x + 1]
    sel = np.flatnonzero((counts[: x + 1] > 0) & (mp > 0))
    terms = counts[sel].astype(np.float64) * np.log(mp[sel].astype(np.float64))
    return math.fsum(terms.tolist())


def lambda_sum_weighted(t: SequenceTally, tables: ArithTables) -> float:
    """Sum of a(c)_n Lambda(n) over n <= x."""
    if tables.limit < t.x:
        raise PreconditionError(f"tables up to {tables.limit} do not cover x = {t.x}", bound="tables.limit >= x")
    return _lambda_dot(t.counts, tables, t.x)


def positive_counts(c: int, x: int, *, budget: int = DEFAULT_ENUM_BOUND) -> np.ndarray:
    """r[n] = #{a, b >= 1 : a^2 + b^4 = c n}, n <= x, no coprimality filter."""
    _check_enum(c, x, budget)
    n, w = lattice_points(c, x, positive=True)
    return np.bincount(n, weights=w, minlength=x + 1).astype(np.int64)


def lambda_sum_positive(c: int, x: int, tables: ArithTables, *, budget: int = DEFAULT_ENUM_BOUND) -> float:
    """Sum of Lambda((a^2 + b^4)/c) over a, b >= 1 with c | a^2 + b^4 and quotient <= x."""
    if tables.limit < x:
        raise PreconditionError(f"tables up to {tables.limit} do not cover x = {x}", bound="tables.limit >= x")
    return _lambda_dot(positive_counts(c, x, budget=budget), tables, x)


@dataclass(frozen=True)
class ConventionBridge:
    """weighted = 4 * positive_coprime + boundary, both as counts and Lambda sums."""

    c: int
    x: int
    weighted: float
    positive: float
    positive_coprime: float
    boundary: float
    boundary_bound: float
    counts_match: bool

    @property
    def gap(self) -> float:
        return self.weighted - 4 * self.positive


def convention_bridge(c: int, x: int, tables: ArithTables) -> ConventionBridge:
    """Tie the signed Z-weighted sum to the positive-(a, b) sum.

    Every positive pair gives four signed points; the rest are boundary points
    with s = 0 or t = 0 (two signed points each). The count identity is
    checked exactly per n; the Lambda sums inherit it.
    """
    t = tally(c, x)
    pos = positive_counts(c, x)
    n = np.arange(x + 1, dtype=np.int64)
    coprime = np.gcd(n, c) == 1
    coprime[0] = False
    pos_cop = np.where(coprime, pos, 0)

    boundary = np.zeros(x + 1, dtype=np.int64)
    cx = c * x
    # t = 0: s^2 = c n, points (+-s, 0)
    s = np.arange(1, math.isqrt(cx) + 1, dtype=np.int64)
    v = s * s
    v = v[v % c == 0] // c
    np.add.at(boundary, v[coprime[v]], 2)
    # s = 0: t^4 = c n, points (0, +-t)
    tt = np.arange(1, math.isqrt(math.isqrt(cx)) + 1, dtype=np.int64)
    v = tt**4
    v = v[v % c == 0] // c
    np.add.at(boundary, v[coprime[v]], 2)

    counts_match = bool(np.array_equal(t.counts.astype(np.int64), 4 * pos_cop + boundary))
    # each unsigned boundary representation carries two signed points
    boundary_reps = boundary // 2
    return ConventionBridge(
        c,
        x,
        weighted=lambda_sum_weighted(t, tables),
        positive=_lambda_dot(pos, tables, x),
        positive_coprime=_lambda_dot(pos_cop, tables, x),
        boundary=_lambda_dot(boundary, tables, x),
        boundary_bound=4 * _lambda_dot(boundary_reps, tables, x),
        counts_match=counts_match,
    )


def sequence_primes(t: SequenceTally, tables: ArithTables | None = None) -> list[int]:
    """Primes n <= x with a(c)_n > 0, ascending."""
    out = []
    for n in t.nonzero():
        n = int(n)
        if tables is not None and n <= tables.limit:
            if n >= 2 and tables.smallest_prime_factor[n] == n:
                out.append(n)
        elif is_prime(n):
            out.append(n)
    return out


def moebius_identity_failures(c_max: int, d_max: int, x_max: int) -> list[tuple[int, int, int]]:
    """(c, d, x) where A_d(x; c) != sum_{k | c} mu(k) A_{ckd}(cx; 1), (d, c) = 1.

    Every x <= x_max is checked through cumulative sums.
    """
    base = tally(1, c_max * x_max).counts.astype(np.int64)
    xs = np.arange(1, x_max + 1)
    bad = []
    for c in range(1, c_max + 1):
        own = tally(c, x_max).counts.astype(np.int64)
        ks = [(k, mobius(k)) for k in factorize(c).divisors() if mobius(k)]
        for d in range(1, d_max + 1):
            if math.gcd(c, d) > 1:
                continue
            lhs = np.cumsum(np.where(np.arange(x_max + 1) % d == 0, own, 0))[xs]
            rhs = np.zeros(x_max, dtype=np.int64)
            for k, mu in ks:
                m = c * k * d
                sub = np.zeros_like(base)
                sub[::m] = base[::m]
                rhs += mu * np.cumsum(sub)[c * xs]
            bad += [(c, d, int(x)) for x in xs[lhs != rhs]]
    return bad
