"""Enumerate N(T, m; A) for one shape and compare brute force with the closed form."""

import argparse
import json
from dataclasses import asdict, dataclass, field

from moonfill.biject import distribution_closed, h_vector, to_compositions
from moonfill.fill import chain_stats, distribution_of, enumerate_row_constrained
from moonfill.involution import phi
from moonfill.shape import from_rows


@dataclass
class Config:
    rows: list = field(default_factory=lambda: [[3, 4], [1, 6], [1, 6], [2, 5], [2, 4]])
    m: tuple = (1, 2, 1, 0, 1)
    A: tuple = (2,)


def run(cfg: Config) -> dict:
    T = from_rows(cfg.rows)
    fills = list(enumerate_row_constrained(T, cfg.m, set(cfg.A)))
    table = []
    for F in fills:
        table.append({
            "ones": sorted(F.ones),
            "stats": chain_stats(F),
            "gaps": to_compositions(F).comps,
            "phi_stats": chain_stats(phi(F)),
        })
    return {
        "config": asdict(cfg),
        "order": list(T.order),
        "h": h_vector(T, cfg.m, set(cfg.A)),
        "fillings": table,
        "brute": str(distribution_of(fills)),
        "closed": str(distribution_closed(T, cfg.m, set(cfg.A))),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", help="shape rows as JSON, e.g. [[1,2],[1,2]]")
    ap.add_argument("--m", help="row counts, comma-separated")
    ap.add_argument("--A", default=None, help="empty columns, comma-separated")
    args = ap.parse_args()
    cfg = Config()
    if args.rows:
        cfg.rows = json.loads(args.rows)
    if args.m:
        cfg.m = tuple(int(x) for x in args.m.split(","))
    if args.A is not None:
        cfg.A = tuple(int(x) for x in args.A.split(",") if x)
    out = run(cfg)
    print(f"order {out['order']}  h {out['h']}")
    for row in out["fillings"]:
        print(f"  {row['ones']}  stats={row['stats']}  gaps={row['gaps']}  phi->{row['phi_stats']}")
    print(f"brute:  {out['brute']}")
    print(f"closed: {out['closed']}")


if __name__ == "__main__":
    main()
