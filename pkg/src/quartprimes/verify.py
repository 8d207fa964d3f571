"""Invariant suites behind `quartprimes verify`.

Each check returns a row (name, passed, detail). Where a stated inequality
is known to fail at specific arguments, the check passes only if the set of
violations is exactly that known set, so a new counterexample still fails.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, NamedTuple


from . import config
from .arith import build_tables, factorize, primes_up_to, valuation
from .congruence import (
    CurveQ,
    degree_lower_bound,
    frey_invariants,
    goldbach_pairs,
    hasse_bound,
    ogg_numerator,
    qcurve_construct,
    quartic_solution_search,
    trace_of_frobenius,
)
from .densities import rho_mult, rho_oracle_table, rho_pair
from .sequence import (
    congruence_sum,
    convention_bridge,
    lambda_sum_positive,
    model_count,
    moebius_identity_failures,
    remainder_profile,
    tally,
)
from .singular import (
    G_vanishes,
    _kappa_default,
    big_G_mobius,
    big_G_product,
    g_closed,
    g_sum,
    h,
    kappa_gamma,
    main_term_coefficient,
    sieve_constant_partial,
)

# Arguments at which the stated h laws and G upper bound fail; see README.
KNOWN_H_LAW_EXCEPTIONS = frozenset({2})
KNOWN_G_UPPER_EXCEPTIONS = frozenset({3125, 15625})


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str


def _rho_checks() -> list[Check]:
    bad = 0
    for d in range(1, 401):
        f = factorize(d)
        oracle = rho_oracle_table(200, d)
        bad += sum(rho_pair(b, f) != int(oracle[b]) for b in range(201))
    out = [Check("rho_oracle_b200_d400", bad == 0, f"{bad} mismatches in 80400 cases")]
    per = sum(rho_pair(b, d) != rho_pair(b + d, d) for d in range(1, 61) for b in range(61))
    out.append(Check("rho_periodic", per == 0, f"{per} mismatches, d, b <= 60"))
    mult = 0
    for d in range(1, 41):
        for e in range(1, 41):
            if math.gcd(d, e) == 1:
                mult += sum(rho_pair(b, d * e) != rho_pair(b, d) * rho_pair(b, e) for b in range(30))
    out.append(Check("rho_multiplicative", mult == 0, f"{mult} mismatches, coprime d, e <= 40"))
    return out


def _g_checks() -> list[Check]:
    bad = [d for d in range(1, 5001) if g_sum(d) != g_closed(d)]
    out = [Check("g_sum_eq_closed_d5000", not bad, f"mismatches: {bad[:5]}")]
    nm_g = nm_h = 0
    for m in range(1, 201):
        for n in range(m, 201):
            if math.gcd(m, n) == 1:
                nm_g += g_closed(m * n) != g_closed(m) * g_closed(n)
                nm_h += h(m * n) != h(m) * h(n)
    out.append(Check("g_multiplicative_200", nm_g == 0, f"{nm_g} failures"))
    out.append(Check("h_multiplicative_200", nm_h == 0, f"{nm_h} failures"))
    ps = [int(p) for p in primes_up_to(1000)]
    first = {p for p in ps if h(p) * p != 1 + 2 * rho_mult(p)}
    second = {p for p in ps if h(p * p) * p * p != p + 2 * rho_mult(p)}
    out.append(
        Check(
            "h_prime_law_p",
            first == KNOWN_H_LAW_EXCEPTIONS,
            f"h(p)p = 1 + 2 rho(p) fails at {sorted(first)}; expected {sorted(KNOWN_H_LAW_EXCEPTIONS)}",
        )
    )
    out.append(
        Check(
            "h_prime_law_p2",
            second == KNOWN_H_LAW_EXCEPTIONS,
            f"h(p^2)p^2 = p + 2 rho(p) fails at {sorted(second)}; expected {sorted(KNOWN_H_LAW_EXCEPTIONS)}",
        )
    )
    return out


def _G_checks() -> list[Check]:
    zero_bad, form_bad, upper, low = [], [], set(), (Fraction(10**9), 0)
    for c in range(1, 10**4 + 1):
        Gm, Gp = big_G_mobius(c), big_G_product(c)
        if Gm != Gp:
            form_bad.append(c)
        f = factorize(c)
        expect = any(p % 4 == 3 and e % 2 for p, e in f.factors) or valuation(c, 2) % 4 == 3
        if (Gp == 0) != expect or G_vanishes(c) != expect:
            zero_bad.append(c)
        if Gp:
            if Gp**4 * c**3 > 1:
                upper.add(c)
            if c * Gp < low[0]:
                low = (c * Gp, c)
    return [
        Check("G_mobius_eq_product_c1e4", not form_bad, f"mismatches: {form_bad[:5]}"),
        Check("G_zero_locus_c1e4", not zero_bad, f"mismatches: {zero_bad[:5]}"),
        Check(
            "G_upper_c1e4",
            upper == {c for c in KNOWN_G_UPPER_EXCEPTIONS if c <= 10**4},
            f"G(c) > c^(-3/4) at {sorted(upper)}",
        ),
        Check(
            "G_lower_relaxed_c1e4",
            low[0] >= config.G_LOWER_CONSTANT,
            f"min c G(c) = {low[0]} at c = {low[1]}; constant 1 fails at c = 2 (G(2) = {big_G_product(2)})",
        ),
    ]


def _sequence_checks() -> list[Check]:
    out = []
    bad = moebius_identity_failures(20, 20, 1000)
    out.append(Check("moebius_identity_c20_d20_x1e3", not bad, f"{len(bad)} mismatches, first {bad[:3]}"))
    r1 = [x for x in (1, 10, 100, 1000, 10**4) if congruence_sum(tally(1, x), 1) != model_count(x, 1, 1)]
    out.append(Check("r1_zero", not r1, f"nonzero at {r1}"))
    t = tally(1, 10)
    out.append(Check("A2_10_anchor", congruence_sum(t, 2) == model_count(10, 1, 2) == 10, "A_2(10;1) = M_2(10;1) = 10"))
    obst = []
    for c in (3, 7, 21):
        obst += [c] if tally(c, 10**4).total() else []
    out.append(Check("obstructed_3_7_21", not obst, f"nonzero tallies for c in {obst}"))
    for c in (1, 2, 5, 10, 25):
        r = tally(c, 10**6).total() / (4 * _kappa_default() * float(big_G_product(c)) * (c * 10**6) ** 0.75)
        tol = config.MAIN_TERM_TOL_C1 if c == 1 else config.MAIN_TERM_TOL_GENERAL
        out.append(Check(f"main_term_c{c}_x1e6", abs(r - 1) <= tol, f"ratio {r:.6f}, tol {tol}"))
    tables = build_tables(10**4)
    for c in (1, 2, 5):
        b = convention_bridge(c, 10**4, tables)
        ok = b.counts_match and abs(b.weighted - 4 * b.positive_coprime - b.boundary) <= 1e-9 * max(1.0, b.weighted)
        out.append(Check(f"bridge_c{c}_x1e4", ok, f"weighted {b.weighted:.6f}, 4*positive {4 * b.positive:.6f}"))
    return out


def _sieve_checks() -> list[Check]:
    out = []
    s = sieve_constant_partial(10**6)
    out.append(Check("sieve_constant_1e6", abs(s - 4 / math.pi) <= config.SIEVE_CONSTANT_TOL, f"{s:.9f} vs 4/pi"))
    k = _kappa_default()
    out.append(Check("kappa_gamma", abs(k - kappa_gamma()) <= 1e-12, f"{k:.15f}"))
    prof = remainder_profile(10**5, 1, math.ceil(10 ** (5 * 2 / 3)))
    out.append(
        Check(
            "remainder_ratio_x1e5",
            math.isfinite(prof.ratio) and prof.ratio <= config.REMAINDER_RATIO_X1E5,
            f"ratio {prof.ratio:.12g}, frozen {config.REMAINDER_RATIO_X1E5}",
        )
    )
    tables = build_tables(10**6)
    lo, hi = config.PRIME_SUM_CORRIDOR
    ten = lambda_sum_positive(1, 10, tables)
    out.append(Check("lambda_positive_10", abs(ten - math.log(10)) <= 1e-12, f"{ten!r}"))
    for c in (1, 5):
        model = main_term_coefficient(c)
        S = lambda_sum_positive(c, 10**6, tables)
        r = S / model.predicted(10**6)
        rc = S / model.predicted(10**6, corrected=True)
        out.append(
            Check(
                f"prime_sum_c{c}_corrected",
                lo <= rc <= hi,
                f"ratio {rc:.6f} with local factor {model.local_factor}; uncorrected {r:.6f}",
            )
        )
    return out


def _congruence_checks() -> list[Check]:
    out = []
    missing = [ell for ell in range(1, 13) if not goldbach_pairs(ell)]
    out.append(Check("goldbach_ell12", not missing, f"no pair for {missing}"))
    frey_bad = []
    for ell in range(1, 13):
        for p, q in goldbach_pairs(ell)[:3]:
            r = frey_invariants(p, q, ell)
            if r.v2_disc != 2 * ell or r.conductor != 2 * p * q:
                frey_bad.append((p, q, ell))
    out.append(Check("frey_invariants", not frey_bad, f"failures {frey_bad[:3]}"))
    rng = random.Random(20240611)
    ps = [int(p) for p in primes_up_to(2000) if p > 3]
    hasse_bad, done = 0, 0
    while done < 200:
        a2, a4, a6 = (rng.randint(-50, 50) for _ in range(3))
        try:
            E = CurveQ(a2, a4, a6)
        except ValueError:
            continue
        p = rng.choice(ps)
        if E.discriminant() % p == 0:
            continue
        hasse_bad += abs(trace_of_frobenius(E, p)) > hasse_bound(p)
        done += 1
    out.append(Check("hasse_200_random", hasse_bad == 0, f"{hasse_bad} violations"))
    cm = CurveQ(0, -1, 0)
    cm_bad = [p for p in primes_up_to(1000) if p % 4 == 3 and trace_of_frobenius(cm, int(p)) != 0]
    out.append(Check("cm_trace_zero", not cm_bad, f"nonzero at {cm_bad[:5]}"))
    out.append(
        Check(
            "degree_examples",
            degree_lower_bound(11, 2) == 2 and degree_lower_bound(1009, 5) == 3,
            f"{degree_lower_bound(11, 2)}, {degree_lower_bound(1009, 5)}",
        )
    )
    out.append(Check("ogg_11_13", ogg_numerator(11, 13) == 35, str(ogg_numerator(11, 13))))
    s1, s2 = quartic_solution_search(1, 100), quartic_solution_search(2, 100)
    out.append(Check("quartic_examples", (3, 2, 17) in s1 and (1, 18, 13) in s2, f"{len(s1)} and {len(s2)} solutions"))
    qbad = 0
    for ell, sols in ((0, quartic_solution_search(0, 1000)), (1, s1), (2, s2), (3, quartic_solution_search(3, 100))):
        for A, B, p in sols:
            try:
                qcurve_construct(A, B, ell, p)
            except ArithmeticError:
                qbad += 1
    out.append(Check("qcurve_discriminants", qbad == 0, f"{qbad} failures"))
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "rho": _rho_checks,
    "g": _g_checks,
    "G": _G_checks,
    "sequence": _sequence_checks,
    "sieve": _sieve_checks,
    "congruence": _congruence_checks,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for key in SUITES for c in SUITES[key]()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name]()
