"""Run configuration and frozen calibration constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal

from .sequence import DEFAULT_ENUM_BOUND

OutputFormat = Literal["csv", "json", "table"]

# Relaxed lower bound for c G(c); the bound with constant 1 fails at c = 2.
G_LOWER_CONSTANT = Fraction(1, 4)
# Tolerances for A(x; c) against 4 kappa G(c) (cx)^(3/4) at x = 10^6.
MAIN_TERM_TOL_C1 = 0.05
MAIN_TERM_TOL_GENERAL = 0.10
# Corridor for the prime sum over its predicted main term at x = 10^6.
PRIME_SUM_CORRIDOR = (0.6, 1.4)
SIEVE_CONSTANT_TOL = 0.01
# Frozen from the first run of remainder_profile(10^5, 1, 2155): 0.89026696911...
REMAINDER_RATIO_X1E5 = 0.890267
# Desk-scale L = (log x)^L_EXPONENT.
L_EXPONENT = 2

CALIBRATION: dict[str, Any] = {
    "G_lower_constant": G_LOWER_CONSTANT,
    "main_term_tol_c1": MAIN_TERM_TOL_C1,
    "main_term_tol_general": MAIN_TERM_TOL_GENERAL,
    "prime_sum_corridor": list(PRIME_SUM_CORRIDOR),
    "sieve_constant_tol": SIEVE_CONSTANT_TOL,
    "remainder_ratio_x1e5": REMAINDER_RATIO_X1E5,
    "L_exponent": L_EXPONENT,
}


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    fmt: OutputFormat = "json"
    threads: int = 1
    budget: int = DEFAULT_ENUM_BOUND
