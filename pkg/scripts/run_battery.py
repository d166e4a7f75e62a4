"""Run the invariant battery and write the report as JSON."""

import argparse
import json
import time

from moonfill.verify import VerifyConfig, run_battery


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rows", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=4)
    ap.add_argument("--max-ones", type=int, default=4)
    ap.add_argument("--out", default=None, help="write the JSON report here")
    args = ap.parse_args()
    cfg = VerifyConfig(args.max_rows, args.max_len, args.max_ones)
    t0 = time.perf_counter()
    rep = run_battery(cfg)
    dt = time.perf_counter() - t0
    for name, p, f in rep.rows():
        print(f"{'PASS' if not f else 'FAIL'}  {name:<24} pass={p} fail={f}")
    print(f"{dt:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rep.to_json(), fh, indent=2)
    raise SystemExit(0 if rep.ok else 3)


if __name__ == "__main__":
    main()
