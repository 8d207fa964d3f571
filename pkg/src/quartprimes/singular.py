"""Exact singular-series data: the densities g and h, G(c), H(c), kappa, H = 4/pi.

``g_sum``/``h_sum`` evaluate the nested divisor sums literally; ``g_closed``
uses the prime-power closed form. The two routes are kept independent so they
can check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from scipy import integrate

from .arith import Factorization, arith_values, chi4, factorize, primes_up_to, quartic_decompose
from .densities import rho_mult
from .errors import PreconditionError


def _divisors_of(n: int) -> list[int]:
    return factorize(n).divisors()


def _nested_terms(d: int):
    """Yield (nu4, nu3, (nu3, d1*), delta) over the index set shared by g and h."""
    q = quartic_decompose(d)
    d1s, d3, d4 = q.d1star, q.d3, q.d4
    for nu4 in _divisors_of(d4):
        for nu3 in _divisors_of(d3):
            if math.gcd(nu3, d4 // nu4) != 1:
                continue
            g3 = math.gcd(nu3, d1s)
            rest = d3 * d4 // (nu3 * nu4)
            for nu1 in _divisors_of(d1s // g3):
                if math.gcd(nu1, rest) != 1:
                    continue
                delta = d1s * d3 * d4 // (g3 * nu1 * nu3 * nu4)
                yield nu4, nu3, g3, delta


@lru_cache(maxsize=None)
def g_sum(d: int) -> Fraction:
    """g(d) from its defining triple divisor sum."""
    if d < 1:
        raise PreconditionError(f"g needs d >= 1, got {d}", bound="d >= 1")
    q = quartic_decompose(d)
    scale = q.d1star * q.d3 * q.d4
    total = Fraction(0)
    for nu4, nu3, g3, delta in _nested_terms(d):
        fd = factorize(delta)
        total += Fraction(nu4 * nu4 * nu3 * g3 * rho_mult(delta * delta) * arith_values(fd).phi, scale)
    return total / d


def _g_prime_power(p: int, e: int) -> Fraction:
    alpha, r = divmod(e, 4)
    if p == 2:
        return Fraction(1, 2 ** (3 * alpha + r))
    chi = chi4(p)
    one_minus = 1 - Fraction(1, p)
    if r == 0:
        g_r = Fraction(1)
    elif r == 1:
        g_r = 1 + chi * one_minus
    else:
        g_r = 1 + (1 + chi) * one_minus
    geometric = Fraction(p**alpha - 1, p - 1)
    return Fraction(1, p**e) * (1 + chi) * one_minus * geometric + g_r / p ** (3 * alpha + r)


def g_closed(d: int | Factorization) -> Fraction:
    """g(d) as a product of prime-power closed forms."""
    f = d if isinstance(d, Factorization) else factorize(d)
    out = Fraction(1)
    for p, e in f.factors:
        out *= _g_prime_power(p, e)
    return out


g = g_closed


@lru_cache(maxsize=None)
def h_sum(d: int) -> Fraction:
    """h(d) from its defining triple divisor sum (no (nu3, d1*) weight)."""
    if d < 1:
        raise PreconditionError(f"h needs d >= 1, got {d}", bound="d >= 1")
    total = 0
    for nu4, nu3, _, delta in _nested_terms(d):
        fd = factorize(delta)
        total += nu4 * nu4 * nu3 * rho_mult(delta * delta) * arith_values(fd).tau
    return Fraction(total, d)


h = h_sum


def big_G_mobius(c: int) -> Fraction:
    """G(c) = sum over k | c of mu(k) g(ck), with g from the divisor sum."""
    f = factorize(c)
    total = Fraction(0)
    for k in f.divisors():
        mu = arith_values(factorize(k)).mu
        if mu:
            total += mu * g_sum(c * k)
    return total


def big_G_product(c: int) -> Fraction:
    """G(c) = prod over p | c of g(p^v) - g(p^(v+1)), with closed-form g."""
    out = Fraction(1)
    for p, v in factorize(c).factors:
        out *= _g_prime_power(p, v) - _g_prime_power(p, v + 1)
    return out


def big_G(c: int) -> Fraction:
    if c < 1:
        raise PreconditionError(f"G needs c >= 1, got {c}", bound="c >= 1")
    a, b = big_G_mobius(c), big_G_product(c)
    if a != b:
        raise ArithmeticError(f"G({c}): Mobius form {a} != product form {b}")
    return a


def G_vanishes(c: int) -> bool:
    """Zero locus of G: a prime 3 mod 4 to an odd power, or v2(c) = 3 mod 4."""
    for p, e in factorize(c).factors:
        if p == 2 and e % 4 == 3:
            return True
        if p % 4 == 3 and e % 2 == 1:
            return True
    return False


def big_H_rational(c: int) -> Fraction:
    """sum over k | c of h(ck); big_H is this times sqrt(c)."""
    if c < 1:
        raise PreconditionError(f"H needs c >= 1, got {c}", bound="c >= 1")
    return sum((h_sum(c * k) for k in factorize(c).divisors()), Fraction(0))


def big_H(c: int) -> float:
    return math.sqrt(c) * float(big_H_rational(c))


def kappa_integrand(t: float) -> float:
    return math.sqrt(max(0.0, 1.0 - t**4))


def kappa_gamma() -> float:
    """Closed form Gamma(1/4)^2 / (6 sqrt(2 pi))."""
    return math.gamma(0.25) ** 2 / (6.0 * math.sqrt(2.0 * math.pi))


def kappa(tolerance: float = 1e-10) -> float:
    """Integral of sqrt(1 - t^4) over [0, 1], by adaptive quadrature.

    The substitution t = 1 - u^2 removes the square-root endpoint behaviour:
    the integrand becomes 2 u^2 sqrt((2 - u^2)(1 + (1 - u^2)^2)), smooth on [0, 1].
    The result must agree with the Gamma-function value within ``tolerance``.
    """
    if not tolerance >= 1e-12:
        raise PreconditionError(f"tolerance must be >= 1e-12, got {tolerance}", bound="tolerance >= 1e-12")

    def smooth(u: float) -> float:
        w = 1.0 - u * u
        return 2.0 * u * u * math.sqrt((2.0 - u * u) * (1.0 + w * w))

    value, err = integrate.quad(smooth, 0.0, 1.0, epsabs=tolerance / 10, epsrel=0.0, limit=200)
    if err > tolerance:
        raise ArithmeticError(f"kappa quadrature error estimate {err:.3g} exceeds {tolerance:.3g}")
    ref = kappa_gamma()
    if abs(value - ref) > tolerance:
        raise ArithmeticError(f"kappa quadrature {value!r} disagrees with Gamma form {ref!r}")
    return value


@lru_cache(maxsize=None)
def _kappa_default() -> float:
    return kappa(1e-12)


def sieve_constant_partial(y: int) -> float:
    """prod over primes p <= y of (1 - g(p)) / (1 - 1/p); tends to 4/pi."""
    if y < 2:
        raise PreconditionError(f"y must be >= 2, got {y}", bound="y >= 2")
    logs = []
    for p in primes_up_to(y):
        p = int(p)
        gp = _g_prime_power(p, 1)
        logs.append(math.log1p(-float(gp)) - math.log1p(-1.0 / p))
    return math.exp(math.fsum(logs))


def local_sieve_factor(c: int) -> Fraction:
    """prod over p | c of 1 / (1 - g(p)).

    The sequence a(c)_n lives on n coprime to c, so its sieve density vanishes
    at p | c and the Euler factor there is (1 - 1/p)^-1 rather than
    (1 - g(p))(1 - 1/p)^-1. This ratio converts one constant into the other.
    """
    out = Fraction(1)
    for p in factorize(c).primes:
        out /= 1 - _g_prime_power(p, 1)
    return out


@dataclass(frozen=True)
class MainTermModel:
    c: int
    G_c: Fraction
    kappa: float
    coefficient: float
    local_factor: Fraction

    @property
    def corrected_coefficient(self) -> float:
        """coefficient with the sieve constant taken over g restricted to (d, c) = 1."""
        return self.coefficient * float(self.local_factor)

    def predicted(self, x: float, corrected: bool = False) -> float:
        """Predicted positive-(a, b) prime-power sum at x."""
        coef = self.corrected_coefficient if corrected else self.coefficient
        return coef * x**0.75


def main_term_coefficient(c: int) -> MainTermModel:
    """4/pi * kappa * G(c) * c^(3/4), the leading constant of the prime sum."""
    Gc = big_G(c)
    k = _kappa_default()
    coef = 0.0 if Gc == 0 else 4.0 / math.pi * k * float(Gc) * c**0.75
    return MainTermModel(c, Gc, k, coef, local_sieve_factor(c))
