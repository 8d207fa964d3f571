"""Where G(c) c^(3/4) exceeds 1, and whether A(x; c) <= A(x; 1) there.

    python scripts/G_upper_bound_scan.py --cmax 20000 --x 1000000
"""

import argparse

from quartprimes.sequence import tally
from quartprimes.singular import big_G_product


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--cmax", type=int, default=20000)
    ap.add_argument("--x", type=int, default=10**6)
    a = ap.parse_args()
    base = tally(1, a.x).total()
    print("c,G,G*c^(3/4),A(x;c)/A(x;1)")
    for c in range(1, a.cmax + 1):
        G = big_G_product(c)
        if G and G**4 * c**3 > 1:
            ratio = tally(c, a.x, budget=c * a.x).total() / base
            print(f"{c},{G},{float(G) * c**0.75:.6f},{ratio:.6f}")


if __name__ == "__main__":
    main()
