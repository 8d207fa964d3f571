"""Partial products of (1 - g(p)) / (1 - 1/p) approaching 4/pi."""

import argparse
import math

from quartprimes.singular import sieve_constant_partial

ap = argparse.ArgumentParser()
ap.add_argument("--ymax", type=int, default=10**7)
a = ap.parse_args()
print("y,partial,error")
y = 10
while y <= a.ymax:
    v = sieve_constant_partial(y)
    print(f"{y},{v:.12g},{v - 4 / math.pi:.6e}")
    y *= 10
