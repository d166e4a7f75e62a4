"""Extreme chain counts and symmetry of arbitrary fillings on staircases."""

import argparse
from dataclasses import dataclass
from math import comb

from moonfill.fill import arbitrary_distribution
from moonfill.shape import delta


@dataclass
class Config:
    n_min: int = 3
    n_max: int = 6


def run(cfg: Config) -> list[dict]:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        d = arbitrary_distribution(delta(n))
        k = comb(n, 4)
        rows.append({
            "n": n,
            "cells": delta(n).n_cells,
            "k": k,
            "se_eq_k": sum(c for (_, b), c in d.terms.items() if b == k),
            "ne_eq_k": sum(c for (a, _), c in d.terms.items() if a == k),
            "symmetric": d.is_symmetric(),
        })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=Config.n_min)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    args = ap.parse_args()
    print(f"{'n':>2} {'cells':>5} {'C(n,4)':>6} {'se2=C':>6} {'ne2=C':>6}  symmetric")
    for r in run(Config(args.n_min, args.n_max)):
        print(f"{r['n']:>2} {r['cells']:>5} {r['k']:>6} {r['se_eq_k']:>6} {r['ne_eq_k']:>6}  {r['symmetric']}")


if __name__ == "__main__":
    main()
