"""Command-line entry point: ``moonfill <command> ...``.

Exit codes: 0 success, 2 bad input or infeasible parameters, 3 a
verification mismatch.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from math import comb

from . import arcs
from .biject import InfeasibleEmptySet, distribution_closed
from .fill import (
    CapExceeded,
    ColumnConflict,
    Filling01,
    FillingError,
    arbitrary_distribution,
    chain_stats,
    distribution_of,
    empty_lines,
    enumerate_column_constrained,
    enumerate_row_constrained,
)
from .involution import phi, phi_via_g
from .qpoly import BivarPoly
from .shape import MoonPolyomino, ShapeError, delta, enumerate_shapes_by_cells, shape_from_json
from .verify import VerifyConfig, staircase_extreme_counts, run_battery

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 2, 3


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: list
    inputs: dict
    result: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def digest(self) -> str:
        blob = json.dumps(self.inputs, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    @property
    def mismatch(self) -> bool:
        return any(v != "equal" and v is not True for v in self.verdicts.values())

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "inputs_digest": self.digest,
            "result": self.result,
            "verdicts": self.verdicts,
            "wall_ms": round(self.wall_ms, 3),
        }


def _ints(text: str | None) -> list[int]:
    if text is None:
        return []
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}")


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}")


def _poly(rep: RunReport, key: str, poly: BivarPoly) -> None:
    rep.result[key] = {"text": str(poly), "json": poly.to_json()}
    rep.lines.append(f"{key}: {poly}")


def _compare(rep: RunReport, name: str, a: BivarPoly, b: BivarPoly) -> None:
    ok = a == b
    rep.verdicts[name] = "equal" if ok else {"verdict": "mismatch", "left": str(a), "right": str(b)}
    rep.lines.append(f"verdict: {'equal' if ok else 'MISMATCH'}")


# commands


def cmd_dist(args, rep: RunReport) -> None:
    obj = _load(args.shape)
    rep.inputs["shape"] = obj
    try:
        T = shape_from_json(obj)
    except ShapeError as exc:
        if not args.force_brute:
            raise InputError(f"{type(exc).__name__}: {exc}")
        T = shape_from_json(obj, validate=False)
        rep.lines.append(f"warning: {type(exc).__name__}: {exc}; brute force only")

    m = _ints(args.rows)
    A = None if args.empty_cols is None or args.sum_all_A else frozenset(_ints(args.empty_cols))
    rep.inputs.update(rows=m, empty=None if A is None else sorted(A), transpose=args.transpose)
    method = "brute" if not isinstance(T, MoonPolyomino) else args.method
    if args.transpose and not isinstance(T, MoonPolyomino):
        raise InputError("--transpose needs a moon polyomino")

    lines = T.t if args.transpose else T.s
    if len(m) != lines:
        raise InputError(f"--rows needs {lines} counts, got {len(m)}")

    brute = closed = None
    if method in ("brute", "both"):
        gen = enumerate_column_constrained if args.transpose else enumerate_row_constrained
        brute = distribution_of(gen(T, m, A))
        _poly(rep, "brute", brute)
    if method in ("closed", "both"):
        base = T.transpose() if args.transpose else T
        try:
            if A is not None:
                closed = distribution_closed(base, m, A)
            else:
                closed = _closed_sum_over_A(base, m)
        except InfeasibleEmptySet as exc:
            raise InputError(str(exc))
        _poly(rep, "closed", closed)
    if brute is not None and closed is not None:
        _compare(rep, "brute_vs_closed", brute, closed)
    shown = brute if brute is not None else closed
    rep.result["symmetric"] = shown.is_symmetric()
    rep.lines.append(f"symmetric: {str(shown.is_symmetric()).lower()}")


def _closed_sum_over_A(T: MoonPolyomino, m) -> BivarPoly:
    from itertools import combinations

    k = T.t - sum(m)
    total = BivarPoly()
    if k < 0:
        return total
    for A in combinations(range(1, T.t + 1), k):
        total = total + distribution_closed(T, m, A)
    return total


def cmd_phi(args, rep: RunReport) -> None:
    obj = _load(args.filling)
    rep.inputs["filling"] = obj
    try:
        F = Filling01.from_json(obj)
        G = phi_via_g(F) if args.via_g else phi(F)
    except ColumnConflict as exc:
        raise InputError(f"ColumnConflict: {exc}")
    except (ShapeError, FillingError) as exc:
        raise InputError(f"{type(exc).__name__}: {exc}")
    before, after = chain_stats(F), chain_stats(G)
    rep.result.update(phi=G.to_json(), before=list(before), after=list(after))
    rep.lines.append(f"phi(F) ones: {sorted(map(list, G.ones))}")
    rep.lines.append(f"(ne2, se2): {before} -> {after}")
    if args.check_roundtrip:
        ok = phi(G) == F
        rep.verdicts["involution"] = ok
        rep.lines.append(f"phi(phi(F)) == F: {str(ok).lower()}")
    if args.check_roundtrip or args.via_g:
        other = phi(F) if args.via_g else phi_via_g(F)
        ok = other == G
        rep.verdicts["factorization"] = ok
        rep.lines.append(f"phi == g . rev . f: {str(ok).lower()}")


def cmd_graphs(args, rep: RunReport) -> None:
    if args.graphs_cmd == "stats":
        G = arcs.ArcGraph.from_json(_load(args.graph))
        rep.inputs["graph"] = G.to_json()
        cn = arcs.cros2_nest2(G)
        rep.result["cros2_nest2"] = list(cn)
        rep.lines.append(f"(cros2, nest2): {cn}")
        if G.n >= 2:
            F = arcs.graph_to_filling(G)
            st = chain_stats(F)
            rep.result["filling"] = F.to_json()
            rep.result["ne2_se2"] = list(st)
            rep.lines.append(f"(ne2, se2) of staircase filling: {st}")
        return

    O = _ints(args.left) if args.left is not None else None
    C = _ints(args.right) if args.right is not None else None
    rep.inputs.update(n=args.n, cls=args.cls, left=O, right=C)
    method = args.method
    if (O is None or C is None) and method != "brute":
        method = "brute"
        rep.lines.append("note: closed form needs --left and --right; using brute force")
    brute = closed = None
    if method in ("brute", "both"):
        brute = arcs.class_distribution_brute(args.n, args.cls, O, C)
        _poly(rep, "brute", brute)
    if method in ("closed", "both"):
        closed = arcs.class_distribution_closed(args.n, args.cls, O, C)
        _poly(rep, "closed", closed)
    if brute is not None and closed is not None:
        _compare(rep, "brute_vs_closed", brute, closed)


def cmd_verify(args, rep: RunReport) -> None:
    cfg = VerifyConfig(args.max_rows, args.max_len, args.max_ones)
    rep.inputs.update(vars(cfg))
    battery = run_battery(cfg)
    rep.result["battery"] = battery.to_json()
    width = max([len(n) for n, _, _ in battery.rows()] + [10])
    for name, p, f in battery.rows():
        rep.lines.append(f"{'PASS' if not f else 'FAIL'}  {name:<{width}}  pass={p} fail={f}")
        rep.verdicts[name] = True if not f else {"verdict": "mismatch", "witness": repr(battery.witnesses[name])}
    for name, w in battery.witnesses.items():
        rep.lines.append(f"witness {name}: {w!r}")


def cmd_search(args, rep: RunReport) -> None:
    cap = args.max_cells
    rep.inputs.update(max_rows=args.max_rows, max_cells=cap, delta=args.delta)
    table = []
    shapes = [(f"delta({n})", delta(n)) for n in _ints(args.delta)]
    if args.max_rows:
        shapes += [(json.dumps([list(r) for r in T.rows]), T)
                   for T in enumerate_shapes_by_cells(args.max_rows, cap)]
    for label, T in shapes:
        try:
            d = arbitrary_distribution(T)
        except CapExceeded as exc:
            raise InputError(f"CapExceeded: {label}: {exc}")
        table.append({"shape": label, "rows": [list(r) for r in T.rows], "cells": T.n_cells,
                      "symmetric": d.is_symmetric()})
    rep.result["table"] = table
    n_sym = sum(r["symmetric"] for r in table)
    for r in table:
        rep.lines.append(f"{'symmetric    ' if r['symmetric'] else 'not symmetric'}  cells={r['cells']:<3} {r['shape']}")
    rep.lines.append(f"{n_sym} of {len(table)} shapes symmetric")


def cmd_extremes(args, rep: RunReport) -> None:
    n = args.n
    rep.inputs["n"] = n
    if n < 2:
        raise InputError("--n must be at least 2")
    if n > args.max_n:
        raise InputError(f"--n {n} exceeds --max-n {args.max_n}")
    try:
        se, ne = staircase_extreme_counts(n)
    except CapExceeded as exc:
        raise InputError(f"CapExceeded: {exc}")
    k = comb(n, 4)
    rep.result.update(n=n, chains=k, descents_count=se, ascents_count=ne)
    rep.lines.append(f"fillings of delta({n}) with exactly {k} descents: {se}")
    rep.lines.append(f"fillings of delta({n}) with exactly {k} ascents: {ne}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="moonfill", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="print the run report as JSON")
    sub = ap.add_subparsers(dest="cmd", required=True)

    d = sub.add_parser("dist", help="joint (ne2, se2) distribution over N(T, m; A)")
    d.add_argument("--shape", required=True, help="shape JSON file")
    d.add_argument("--rows", required=True, help="row counts m, e.g. 1,2,1,0,1 (column counts with --transpose)")
    g = d.add_mutually_exclusive_group()
    g.add_argument("--empty-cols", help="exact empty-column set A (empty rows with --transpose)")
    g.add_argument("--sum-all-A", action="store_true", help="sum over every feasible A")
    d.add_argument("--method", choices=["brute", "closed", "both"], default="both")
    d.add_argument("--transpose", action="store_true", help="column-constrained variant N'")
    d.add_argument("--force-brute", action="store_true", help="accept non-moon shapes, brute force only")
    d.set_defaults(func=cmd_dist)

    p = sub.add_parser("phi", help="apply the ne2/se2-swapping involution")
    p.add_argument("--filling", required=True)
    p.add_argument("--check-roundtrip", action="store_true")
    p.add_argument("--via-g", action="store_true", help="compute through the composition bijection")
    p.set_defaults(func=cmd_phi)

    gr = sub.add_parser("graphs", help="crossings and nestings of arc diagrams")
    gsub = gr.add_subparsers(dest="graphs_cmd", required=True)
    gd = gsub.add_parser("dist")
    gd.add_argument("--n", type=int, required=True)
    gd.add_argument("--class", dest="cls", choices=list(arcs.CLASSES), required=True)
    gd.add_argument("--left", help="left-endpoint multiset O, e.g. 1,2,2")
    gd.add_argument("--right", help="right-endpoint multiset C")
    gd.add_argument("--method", choices=["brute", "closed", "both"], default="both")
    gs = gsub.add_parser("stats")
    gs.add_argument("--graph", required=True, help="graph JSON file")
    gr.set_defaults(func=cmd_graphs)

    v = sub.add_parser("verify", help="run the invariant battery over small shapes")
    v.add_argument("--max-rows", type=int, default=4)
    v.add_argument("--max-len", type=int, default=4)
    v.add_argument("--max-ones", type=int, default=4)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search-symmetric", help="classify shapes by symmetry over arbitrary fillings")
    s.add_argument("--max-rows", type=int, default=0)
    s.add_argument("--max-cells", type=int, default=8)
    s.add_argument("--delta", default="", help="also classify these staircases, e.g. 4,5,6")
    s.set_defaults(func=cmd_search)

    q = sub.add_parser("prop51", help="count extreme fillings of delta(n)")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--max-n", type=int, default=6)
    q.set_defaults(func=cmd_extremes)
    return ap


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    rep = RunReport(command=argv, inputs={})
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        args.func(args, rep)
    except (InputError, ShapeError, FillingError, InfeasibleEmptySet, CapExceeded, ValueError) as exc:
        rep.result["error"] = str(exc)
        rep.lines.append(f"error: {exc}")
        code = EXIT_INPUT
    rep.wall_ms = (time.perf_counter() - t0) * 1000
    if code == EXIT_OK and rep.mismatch:
        code = EXIT_MISMATCH
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        out = sys.stderr if code == EXIT_INPUT else sys.stdout
        print("\n".join(rep.lines), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
