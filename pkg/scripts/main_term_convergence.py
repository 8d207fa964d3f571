"""A(x; c) against 4 kappa G(c) (cx)^(3/4) over a grid of x.

    python scripts/main_term_convergence.py --c 1 2 5 10 25 --xmax 10000000
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from quartprimes.singular import _kappa_default, big_G
from quartprimes.sequence import tally


@dataclass
class Config:
    moduli: tuple[int, ...] = (1, 2, 5, 10, 25)
    xmax: int = 10**6


def run(cfg: Config) -> list[tuple[int, int, int, float]]:
    k = _kappa_default()
    rows = []
    for c in cfg.moduli:
        G = big_G(c)
        if not G:
            continue
        t = tally(c, cfg.xmax)
        x = 1000
        while x <= cfg.xmax:
            A = t.total(x)
            rows.append((c, x, A, A / (4 * k * float(G) * (c * x) ** 0.75)))
            x *= 10
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--c", type=int, nargs="+", default=list(Config.moduli))
    ap.add_argument("--xmax", type=int, default=Config.xmax)
    a = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["c", "x", "A", "ratio"])
    for c, x, A, r in run(Config(tuple(a.c), a.xmax)):
        w.writerow([c, x, A, f"{r:.12g}"])
