"""Numeric audits of the asymptotic-sieve hypotheses for a(c)_n.

The hypotheses are asymptotic with unspecified implied constants, so most
entries are measured and reported. Only the explicit inequalities on g at
primes are hard pass/fail checks here.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Literal

import numpy as np

from .arith import ArithTables, arith_values, build_tables, factorize, primes_up_to
from .errors import PreconditionError
from .sequence import SequenceTally, congruence_sum, remainder_profile, tally
from .singular import _g_prime_power, _kappa_default, big_G

Status = Literal["pass", "fail", "report"]

# y values at which sum_{p <= y} g(p) - log log y is sampled
G_FIT_POINTS = (10**2, 10**3, 10**4)
G_FIT_HALF_WIDTH = 0.05
G_PRIME_CONSTANT = 2
G_SQUARE_CONSTANT = 3


@dataclass
class SieveParams:
    """Level D, Mobius cutoff K, bilinear length N, sifting bound P, and L.

    ``L`` defaults to (log x)^2 at desk scale; ``delta <= Delta`` frame N.
    """

    D: int
    K: int
    N: int
    P: int
    L: float
    delta: float = 2.0
    Delta: float = 4.0

    @classmethod
    def default(cls, x: int) -> "SieveParams":
        D = max(2, int(x**0.75))
        return cls(
            D=D,
            K=max(1, x // D),
            N=max(1, math.isqrt(x) // 3),
            P=2,
            L=math.log(x) ** 2,
        )

    def ranges(self, x: int) -> dict[str, bool]:
        """Which of the hypothesis ranges hold at this x.

        The sifting range for P requires Delta^(1 / (2^35 log log x)) >= P >= 2,
        which no desk-scale Delta satisfies; it is reported, not enforced.
        """
        out = {
            "D": x ** (2 / 3) < self.D < x,
            "K": 1 <= self.K <= x / self.D,
            "N": math.sqrt(self.D) / self.Delta < self.N < math.sqrt(x) / self.delta,
            "delta": self.Delta >= self.delta >= 2,
        }
        loglog = math.log(math.log(x)) if x > math.e else 1.0
        out["P"] = 2 <= self.P <= self.Delta ** (1.0 / (2**35 * loglog))
        return out


def beta_coefficient(n: int, K: int) -> int:
    """beta(n, K): sum of mu(k) over divisors k <= K of n."""
    if n < 1 or K < 1:
        raise PreconditionError(f"need n, K >= 1, got n={n}, K={K}", bound="n, K >= 1")
    total = 0
    for k in factorize(n).divisors():
        if k > K:
            break
        total += arith_values(factorize(k)).mu
    return total


def bilinear_diagnostic(
    x: int,
    c: int,
    params: SieveParams,
    t: SequenceTally | None = None,
    tables: ArithTables | None = None,
) -> float:
    """sum over m of |sum over N < n <= 2N, mn <= x, (n, m Pi) = 1 of beta(n) mu(mn) a(c)_mn|.

    Pi is the product of the primes below P.
    """
    if params.N >= x:
        return 0.0
    t = tally(c, x) if t is None else t
    tables = build_tables(x) if tables is None or tables.limit < x else tables
    mu = tables.mobius.astype(np.int64)
    a = t.counts.astype(np.int64)
    small = [int(p) for p in primes_up_to(params.P - 1)]
    inner = np.zeros(x // (params.N + 1) + 1, dtype=np.int64)
    for n in range(params.N + 1, min(2 * params.N, x) + 1):
        if any(n % p == 0 for p in small):
            continue
        b = beta_coefficient(n, params.K)
        if b == 0:
            continue
        m = np.arange(1, x // n + 1, dtype=np.int64)
        m = m[np.gcd(m, n) == 1]
        mn = m * n
        inner[m] += b * mu[mn] * a[mn]
    return float(np.abs(inner).sum())


@dataclass
class AuditEntry:
    measured: float
    reference: float | None
    status: Status
    note: str = ""


@dataclass
class AuditReport:
    c: int
    x: int
    params: dict
    entries: dict[str, AuditEntry] = field(default_factory=dict)

    def add(self, name: str, measured: float, reference: float | None, status: Status, note: str = "") -> None:
        self.entries[name] = AuditEntry(float(measured), reference, status, note)

    @property
    def ok(self) -> bool:
        return all(e.status != "fail" for e in self.entries.values())

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "x": self.x,
            "params": self.params,
            "entries": {k: asdict(v) for k, v in sorted(self.entries.items())},
        }


def g_prime_sum(y: int, c: int = 1) -> float:
    """sum over p <= y of g_c(p), where g_c vanishes at primes dividing c."""
    return math.fsum(float(_g_prime_power(int(p), 1)) for p in primes_up_to(y) if c % int(p))


def fit_mertens_constant(c: int = 1, points: tuple[int, ...] = G_FIT_POINTS) -> tuple[float, float]:
    """Fit e in sum_{p <= y} g(p) = log log y + e; return (e, max deviation)."""
    diffs = [g_prime_sum(y, c) - math.log(math.log(y)) for y in points]
    e = sum(diffs) / len(diffs)
    return e, max(abs(d - e) for d in diffs)


def hypothesis_audit(
    x: int,
    c: int,
    tables: ArithTables,
    params: SieveParams | None = None,
    *,
    with_remainder: bool = False,
    with_bilinear: bool = False,
) -> AuditReport:
    if x < 100:
        raise PreconditionError(f"audits need x >= 100, got {x}", bound="x >= 100")
    params = SieveParams.default(x) if params is None else params
    t = tally(c, x)
    logx = math.log(x)
    A = t.total()
    report = AuditReport(c, x, {**asdict(params), "ranges": params.ranges(x)})

    A_sqrt = t.total(math.isqrt(x))
    report.add(
        "mass_sqrt_ratio",
        A / (A_sqrt * logx**2) if A_sqrt else math.inf,
        1.0,
        "report",
        "A(x) / (A(sqrt x) (log x)^2)",
    )
    sq = float(np.sum(t.counts.astype(np.float64) ** 2))
    report.add(
        "mass_l2_ratio",
        A / (x ** (1 / 3) * math.sqrt(sq)) if sq else 0.0,
        1.0,
        "report",
        "A(x) / (x^(1/3) (sum a_n^2)^(1/2))",
    )

    # hard inequalities on g at primes
    ps = [int(p) for p in primes_up_to(min(x, 10**4))]
    g1 = [_g_prime_power(p, 1) for p in ps]
    g2 = [_g_prime_power(p, 2) for p in ps]
    ordered = all(0 <= b <= a < 1 for a, b in zip(g1, g2))
    report.add("g_prime_order", float(max(g1)), 1.0, "pass" if ordered else "fail", "0 <= g(p^2) <= g(p) < 1")
    scaled = max(p * a for p, a in zip(ps, g1))
    report.add("g_prime_scaled", float(scaled), G_PRIME_CONSTANT,
               "pass" if scaled <= G_PRIME_CONSTANT else "fail", "max p g(p)")
    scaled_sq = max(p * p * b for p, b in zip(ps, g2))
    report.add("g_square_scaled", float(scaled_sq), G_SQUARE_CONSTANT,
               "pass" if scaled_sq <= G_SQUARE_CONSTANT else "fail", "max p^2 g(p^2)")

    e, spread = fit_mertens_constant(c)
    report.add("mertens_e", e, None, "report", "fitted constant e")
    report.add("mertens_spread", spread, G_FIT_HALF_WIDTH, "report", "max |deviation| from fitted e")

    worst = 0.0
    for d in range(2, int(round(x ** (1 / 3))) + 1):
        if math.gcd(d, c) > 1:
            continue
        tau = arith_values(factorize(d)).tau
        worst = max(worst, congruence_sum(t, d) * d / (A * tau**8 * logx) if A else 0.0)
    report.add("divisor", worst, None, "report", "max A_d d / (A tau(d)^8 log x), d <= x^(1/3)")

    Gc = big_G(c)
    if Gc:
        report.add(
            "main_term",
            A / (4 * _kappa_default() * float(Gc) * (c * x) ** 0.75),
            1.0,
            "report",
            "A(x; c) / (4 kappa G(c) (cx)^(3/4))",
        )

    if with_remainder:
        prof = remainder_profile(x, c, min(params.D, x), t)
        report.add("remainder", prof.ratio, None, "report", "sum |r_d| / (D^(1/4) x^(9/16)), cubefree d <= D")
        report.add("remainder_vs_A", float(prof.total) / A * params.L**2 if A else 0.0, 1.0, "report",
                   "sum |r_d| L^2 / A(x)")
    if with_bilinear:
        value = bilinear_diagnostic(x, c, params, t, tables)
        report.add("bilinear", value, A * params.L**-4, "report", "bilinear sum vs A(x) L^-4")
    return report
