"""Cubefree remainder sum at D = ceil(x^(2/3)), normalised by D^(1/4) x^(9/16).

    python scripts/remainder_growth.py --x 1000 10000 100000
"""

import argparse
import math

from quartprimes.sequence import remainder_profile


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--x", type=int, nargs="+", default=[10**3, 10**4, 10**5])
    ap.add_argument("--c", type=int, default=1)
    a = ap.parse_args()
    print("x,D,sum_abs_r,ratio")
    for x in a.x:
        D = math.ceil(x ** (2 / 3))
        prof = remainder_profile(x, a.c, D)
        print(f"{x},{D},{float(prof.total):.12g},{prof.ratio:.12g}")


if __name__ == "__main__":
    main()
