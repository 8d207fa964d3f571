"""Prime sums over positive (a, b) against the predicted main term.

The uncorrected constant takes the sieve product over all primes. For c > 1
the sequence is supported on n coprime to c, and multiplying by
prod_{p | c} 1 / (1 - g(p)) accounts for that. Both ratios are printed.
"""

import argparse

from quartprimes.arith import build_tables
from quartprimes.sequence import lambda_sum_positive
from quartprimes.singular import main_term_coefficient


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--x", type=int, default=10**6)
    ap.add_argument("--c", type=int, nargs="+", default=[1, 2, 5, 10, 13, 17, 25, 65])
    a = ap.parse_args()
    tables = build_tables(a.x)
    print("c,local_factor,sum,ratio,corrected_ratio")
    for c in a.c:
        m = main_term_coefficient(c)
        if not m.coefficient:
            print(f"{c},-,0,-,-")
            continue
        S = lambda_sum_positive(c, a.x, tables)
        print(f"{c},{m.local_factor},{S:.12g},{S / m.predicted(a.x):.6f},{S / m.predicted(a.x, corrected=True):.6f}")


if __name__ == "__main__":
    main()
