"""Command line: ``stackfill <command> [options]``.

Commands: hecke, growth, kknuth, enumerate, bijection, linked, verify.
Exit status is 0 iff the command succeeded and every check passed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time

from . import verify
from .bijection import f_with_certificate, move_row_replay, to_ferrers
from .growth import build_growth, extract_pq, matrix_rep
from .hecke import insert_word, lis_lds_via_tableau
from .kjdt import prime_transform
from .kknuth import EquivBudget, kknuth_equivalent, lds, lis
from .linked import (LinkedPartition, LinkedPartitionError, border_str, cgp_bijection, comp1,
                     comp2, cross, nest, our_bijection, vacillating_border)
from .polyomino import (Filling, Mode, Polyomino, ShapeError, chain_stats, count_table,
                        filling_from_json, merge, shape_from_json)
from .tableaux import parse_word, reading_word


class UsageError(Exception):
    pass


def _emit(args, text: str, data) -> None:
    out = json.dumps(data, indent=1, default=list) + "\n" if args.json else text.rstrip("\n") + "\n"
    if args.out in (None, "-"):
        sys.stdout.write(out)
        return
    # write once, atomically
    d = os.path.dirname(os.path.abspath(args.out))
    os.makedirs(d, exist_ok=True)
    with tempfile.NamedTemporaryFile("w", dir=d, delete=False) as fh:
        fh.write(out)
    os.replace(fh.name, args.out)


def _rows_text(rows) -> str:
    return "\n".join("  " + " ".join("." if v is None else _cell(v) for v in row) for row in rows)


def _cell(v) -> str:
    return "{" + ",".join(map(str, v)) + "}" if isinstance(v, (list, tuple)) else str(v)


# -- shapes and fillings from the command line ------------------------------------

def _load_shape(args) -> Polyomino:
    try:
        if args.rows:
            return Polyomino.from_row_spec([int(x) for x in args.rows.split(",")])
        if args.ranges:
            pairs = [tuple(int(y) for y in x.split("-")) for x in args.ranges.split(",")]
            return Polyomino.from_row_ranges(pairs)
        if args.shape:
            with open(args.shape) as fh:
                obj = json.load(fh)
            return shape_from_json(obj.get("shape", obj))
    except (ValueError, KeyError, TypeError, OSError) as exc:
        raise UsageError(f"cannot read shape: {exc}") from exc
    raise UsageError("give --rows, --ranges or --shape")


def _load_filling(path: str) -> Filling:
    try:
        with open(path) as fh:
            obj = json.load(fh)
        return filling_from_json(obj)
    except (ValueError, KeyError, TypeError, OSError) as exc:
        raise UsageError(f"cannot read filling: {exc}") from exc


# -- commands -------------------------------------------------------------------

def cmd_hecke(args) -> int:
    w = parse_word(args.word)
    p, q = insert_word(w)
    data = {"word": w, "P": p.rows, "Q": q.rows, "reading_word": reading_word(p),
            "lis": lis(w), "lds": lds(w), "columns_rows_of_P": lis_lds_via_tableau(w)}
    text = [f"word {' '.join(map(str, w))}", "P", _rows_text(p.rows), "Q", _rows_text(q.rows),
            f"row(P) {' '.join(map(str, reading_word(p)))}", f"lis {lis(w)}  lds {lds(w)}"]
    if args.prime:
        pp = prime_transform(p)
        data["P_prime"] = pp.rows
        text += ["P'", _rows_text(pp.rows)]
    _emit(args, "\n".join(text), data)
    return 0


def cmd_growth(args) -> int:
    w = parse_word(args.word)
    d = build_growth(matrix_rep(w))
    pq = extract_pq(d)
    ok = pq == insert_word(w)
    right = [d.corner(d.grid.cols, k) for k in range(d.grid.rows + 1)]
    top = [d.corner(k, d.grid.rows) for k in range(d.grid.cols + 1)]
    data = {"word": w, "marks": sorted(d.grid.marks), "right_border": right, "top_border": top,
            "edge_labels": sorted([c, r, v] for (c, r), v in d.hlabels.items()),
            "P": pq.p.rows, "Q": pq.q.rows, "agrees_with_insertion": ok}
    text = [f"right border {right}", f"top border {top}", f"edge labels {data['edge_labels']}",
            "P", _rows_text(pq.p.rows), "Q", _rows_text(pq.q.rows),
            f"agrees with insertion: {ok}"]
    _emit(args, "\n".join(text), data)
    return 0 if ok else 1


def cmd_kknuth(args) -> int:
    w1, w2 = parse_word(args.w1), parse_word(args.w2)
    budget = EquivBudget(args.max_len or max(len(w1), len(w2)) + args.slack, args.max_states)
    v = kknuth_equivalent(w1, w2, budget)
    path = [{"word": w, "relation": rel} for w, rel in v.path]
    data = {"w1": w1, "w2": w2, "verdict": v.label, "states": v.states,
            "budget": budget._asdict(), "path": path}
    text = [f"{v.label} (max_len {budget.max_len}, {v.states} states)"]
    text += [f"  {''.join(map(str, p['word']))}" + (f"  by {p['relation']}" if p["relation"] else "")
             for p in path]
    _emit(args, "\n".join(text), data)
    return 0


def cmd_enumerate(args) -> int:
    shape = _load_shape(args)
    try:
        mode = Mode.parse(args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    t0 = time.perf_counter()
    shards = [args.shard] if args.shard is not None else range(args.shards)
    table = merge(count_table(shape, mode, args.shards, s) for s in shards)
    poly = table.gen_poly()
    data = {"shape": shape.to_json(), "mode": str(mode), "shards": args.shards,
            "shard": args.shard, "total": poly.total(), "symmetric": poly.is_symmetric(),
            "gen_poly": poly.to_json(),
            "count_table": [{"n": k, "ne": u, "se": v, "count": m} for (k, u, v), m in sorted(table.items())],
            "seconds": round(time.perf_counter() - t0, 3)}
    text = ["n\tne\tse\tcount"] + [f"{k}\t{u}\t{v}\t{m}" for (k, u, v), m in sorted(table.items())]
    text.append(f"# G = {poly.pretty()}")
    text.append(f"# {poly.total()} fillings, {'symmetric' if poly.is_symmetric() else 'asymmetric'}")
    if args.figures:
        from .plotting import heatmap
        heatmap(poly, os.path.join(args.figures, "gen_poly.png"))
    _emit(args, "\n".join(text), data)
    return 0


def cmd_bijection(args) -> int:
    fill = _load_filling(args.filling)
    try:
        if args.row is not None:
            out, chain = move_row_replay(fill, args.row), []
        elif args.to_ferrers:
            out, chain = to_ferrers(fill)
        else:
            out, cert = f_with_certificate(fill)
            chain = [cert]
    except ShapeError as exc:
        raise UsageError(str(exc)) from exc
    s0, s1 = chain_stats(fill), chain_stats(out)
    data = {"input": fill.to_json(), "output": out.to_json(), "stats_in": s0._asdict(),
            "stats_out": s1._asdict(), "preserved": s0 == s1,
            "moves": [{"rows": c.target.row_lengths(), "from": c.moved_row_from, "to": c.moved_row_to,
                       "rect": c.rect._asdict()} for c in chain]}
    text = [f"shape {fill.shape.row_lengths()} -> {out.shape.row_lengths()}",
            f"(n, ne, se) {tuple(s0)} -> {tuple(s1)}",
            "ones " + " ".join(f"{r},{c}" for r, c in sorted(out.ones, key=lambda rc: rc[1]))]
    if args.figures:
        from .plotting import draw_filling
        draw_filling(fill, os.path.join(args.figures, "input.png"))
        draw_filling(out, os.path.join(args.figures, "output.png"))
    _emit(args, "\n".join(text), data)
    return 0


def cmd_linked(args) -> int:
    try:
        p = LinkedPartition.parse(args.partition, args.n)
    except (ValueError, LinkedPartitionError) as exc:
        raise UsageError(str(exc)) from exc

    def stats(x):
        return {"cross": cross(x), "nest": nest(x), "comp1": sorted(comp1(x)), "comp2": sorted(comp2(x))}

    data = {"input": str(p), "n": p.n, "input_stats": stats(p)}
    text = [f"input  {p}  cross {cross(p)} nest {nest(p)}"]
    if args.map == "border":
        steps = vacillating_border(p)
        data["border"] = [{"shape": s.shape, "marked_row": s.marked_row} for s in steps]
        text.append(border_str(steps))
    else:
        q = our_bijection(p) if args.map == "ours" else cgp_bijection(p)
        data.update(output=str(q), output_stats=stats(q))
        text.append(f"output {q}  cross {cross(q)} nest {nest(q)}")
        text.append(f"comp1 {sorted(comp1(q))}  comp2 {sorted(comp2(q))}")
    _emit(args, "\n".join(text), data)
    return 0


def cmd_verify(args) -> int:
    suites = args.suite or list(verify.SUITES)
    params = {"max_cells": args.max_cells, "workers": args.workers, "shards": args.shards,
              "seed": args.seed}
    report = verify.Report("verify " + " ".join(suites), params)
    verify.run(suites, report, fail_fast=args.fail_fast, **params)
    if args.figures:
        from .plotting import heatmap
        for key, rows in report.records.get("polynomials", {}).items():
            name = key.replace(" ", "_").replace("=", "-")
            heatmap(verify.GenPoly.from_json(rows), os.path.join(args.figures, f"{name}.png"), key)
    lines = report.lines()
    crit = report.criteria()
    lines += [f"criterion {k}: {'PASS' if v else 'FAIL'}" for k, v in sorted(crit.items())]
    _emit(args, "\n".join(lines), report.to_json())
    return 0 if report.ok else 1


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--shards", type=int, default=1, help="split enumerations into N shards")
    common.add_argument("--shard", type=int, help="run only this shard (0-based)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--workers", type=int, default=1, help="worker processes")
    common.add_argument("--figures", metavar="DIR", help="also write PNG drawings here")

    ap = argparse.ArgumentParser(prog="stackfill", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hecke", parents=[common], help="Hecke insertion of a word")
    p.add_argument("word", help='e.g. "32412143" or "3,2,4"')
    p.add_argument("--prime", action="store_true", help="also show the P' transform")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("growth", parents=[common], help="growth diagram of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("kknuth", parents=[common], help="bounded K-Knuth equivalence search")
    p.add_argument("w1")
    p.add_argument("w2")
    p.add_argument("--slack", type=int, default=4, help="max_len = longer length + slack")
    p.add_argument("--max-len", type=int, help="explicit word length cap")
    p.add_argument("--max-states", type=int, default=200_000)
    p.set_defaults(func=cmd_kknuth)

    p = sub.add_parser("enumerate", parents=[common], help="(n, ne, se) counts of all fillings")
    p.add_argument("--rows", help="stack row lengths, bottom first, e.g. 4,6,7,7,5,3")
    p.add_argument("--ranges", help="row column ranges, bottom first, e.g. 3-6,1-6,1-7")
    p.add_argument("--shape", help="JSON shape file (or a filling file)")
    p.add_argument("--mode", default="all", help="all | cover | n=K | rowsums=a,b,..")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bijection", parents=[common], help="move rows of a stack filling")
    p.add_argument("filling", help="JSON filling file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--to-ferrers", action="store_true", help="repeat until the shape is Ferrers")
    g.add_argument("--row", type=int, help="replay the construction on this row instead")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("linked", parents=[common], help="linked partition bijections")
    p.add_argument("--partition", required=True, help='blocks separated by "|"')
    p.add_argument("--n", type=int, help="size of the ground set (default: largest element)")
    p.add_argument("--map", choices=("ours", "cgp", "border"), default="ours")
    p.set_defaults(func=cmd_linked)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", choices=sorted(verify.SUITES),
                   help="repeatable; default: all")
    p.add_argument("--max-cells", type=int, default=12)
    p.add_argument("--fail-fast", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.shard is not None and not 0 <= args.shard < args.shards:
        print("error: --shard must be in [0, --shards)", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
