"""Census of moon polyominoes whose arbitrary-filling distribution is symmetric."""

import argparse
from collections import Counter
from dataclasses import dataclass

from moonfill.fill import arbitrary_distribution
from moonfill.shape import enumerate_shapes_by_cells


@dataclass
class Config:
    max_rows: int = 4
    max_cells: int = 10
    show: int = 10


def run(cfg: Config):
    by_cells = Counter()
    sym_by_cells = Counter()
    asym = []
    for T in enumerate_shapes_by_cells(cfg.max_rows, cfg.max_cells):
        ok = arbitrary_distribution(T).is_symmetric()
        by_cells[T.n_cells] += 1
        sym_by_cells[T.n_cells] += ok
        if not ok:
            asym.append(T.rows)
    return by_cells, sym_by_cells, asym


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rows", type=int, default=Config.max_rows)
    ap.add_argument("--max-cells", type=int, default=Config.max_cells)
    ap.add_argument("--show", type=int, default=Config.show, help="asymmetric shapes to list")
    args = ap.parse_args()
    by_cells, sym, asym = run(Config(args.max_rows, args.max_cells, args.show))
    for c in sorted(by_cells):
        print(f"cells={c:<3} shapes={by_cells[c]:<5} symmetric={sym[c]}")
    print(f"{len(asym)} asymmetric shapes")
    for rows in asym[: args.show]:
        print(f"  {[list(r) for r in rows]}")


if __name__ == "__main__":
    main()
