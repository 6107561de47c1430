"""Verification suites: fixture replay and the exhaustive checks behind every
claim the package makes.  Each suite appends :class:`Check` records to a
:class:`Report`; a run passes iff every required check passes."""
from __future__ import annotations

import json
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from importlib import resources
from itertools import combinations, product
from typing import NamedTuple

from .bijection import RectangleFilling, f, move_row_replay, phi, phi_inverse
from .growth import backward_square, build_growth, extract_pq, matrix_rep
from .hecke import (HeckePair, hecke_insert, insert_word, lis_lds_via_tableau, recover_word,
                    reverse_hecke_insert)
from .kjdt import inverse_prime_transform, jdt, prime_transform, rev_jdt
from .kknuth import EquivBudget, kknuth_equivalent, lds, lis, restrict
from .linked import (LinkedPartition, all_linked_partitions, border_str, cgp_bijection, comp1,
                     comp2, cross, from_triangle_filling, nest, our_bijection, standard_rep,
                     to_triangle_filling, vacillating_border)
from .polyomino import (ALL, GenPoly, Mode, Polyomino, chain_stats, count,
                        enumerate_fillings, filling_from_json, gen_poly, merge, shape_from_json)
from .tableaux import SetValuedTableau, Tableau, partition, reading_word, validate


def load_fixture(name: str) -> dict:
    text = resources.files("stackfill").joinpath("fixtures").joinpath(name).read_text()
    return json.loads(text)


class Check(NamedTuple):
    criterion: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    required: bool = True     # informational checks never fail a run


class Report:
    def __init__(self, command: str = "", params: dict | None = None):
        self.command = command
        self.params = dict(params or {})
        self.checks: list = []
        self.records: dict = {}    # computed data worth keeping (polynomials etc.)

    def add(self, criterion: int, name: str, passed: bool, detail: str = "", seconds: float = 0.0,
            required: bool = True) -> Check:
        c = Check(criterion, name, bool(passed), detail, round(seconds, 3), required)
        self.checks.append(c)
        return c

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.required and not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def criteria(self) -> dict:
        """criterion -> passed, over required checks."""
        out: dict = {}
        for c in self.checks:
            if c.required:
                out[c.criterion] = out.get(c.criterion, True) and c.passed
        return out

    def lines(self) -> list:
        out = []
        for c in self.checks:
            tag = "PASS" if c.passed else ("FAIL" if c.required else "NOTE")
            out.append(f"[{tag}] {c.criterion:>2} {c.name}: {c.detail} ({c.seconds:.2f}s)")
        return out

    def to_json(self) -> dict:
        return {"command": self.command, "params": self.params, "ok": self.ok,
                "checks": [c._asdict() for c in self.checks], "records": self.records}


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def _words(max_len: int, alphabet: int):
    for n in range(1, max_len + 1):
        yield from product(range(1, alphabet + 1), repeat=n)


def _sv(rows) -> SetValuedTableau:
    return SetValuedTableau.from_rows(rows)


# -- criterion 1 ------------------------------------------------------------------

def suite_figures(report: Report, **_) -> None:
    fx = load_fixture("tableaux.json")
    with Timer() as t:
        y = Tableau.from_rows(fx["insertion"]["y"])
        ok = all(hecke_insert(y, c["x"]) == (Tableau.from_rows(c["z"]), tuple(c["corner"]), c["alpha"])
                 for c in fx["insertion"]["cases"])
    report.add(1, "hecke insertion triples", ok, "(Z, c, alpha) for x = 2 and x = 5", t.seconds)

    for case in fx["words"]:
        with Timer() as t:
            pair = insert_word(case["word"])
            want = HeckePair(Tableau.from_rows(case["p"]), _sv(case["q"]))
            ok = pair == want and reading_word(pair.p) == tuple(case["reading_word"]) \
                if "reading_word" in case else pair == want
            if "marks" in case:
                d = build_growth(matrix_rep(case["word"]))
                grid_ok = d.grid.marks == frozenset(map(tuple, case["marks"]))
                right = [d.corner(d.grid.cols, k) for k in range(d.grid.rows + 1)]
                border_ok = right == [partition(p) for p in case["right_border"]]
                labels_ok = all(d.hlabels.get((c, r)) == v for c, r, v in case["edge_labels"])
                ok = ok and grid_ok and border_ok and labels_ok and extract_pq(d) == want
        word = "".join(map(str, case["word"]))
        report.add(1, f"insertion of {word}", ok, "P, Q" + (", growth diagram" if "marks" in case else ""),
                   t.seconds)

    with Timer() as t:
        j = fx["jdt"]
        out = jdt(Tableau.from_rows(j["rows"], j["inner"]), map(tuple, j["corners"]))
        ok_j = out.rows == j["result"]
        r = fx["rev_jdt"]
        out = rev_jdt(Tableau.from_rows(r["rows"], r["inner"]), map(tuple, r["corners"]))
        ok_r = out.rows == r["result"]
    report.add(1, "K-jeu de taquin slides", ok_j and ok_r, f"forward {ok_j}, reverse {ok_r}", t.seconds)

    with Timer() as t:
        p, p2 = Tableau.from_rows(fx["prime"]["p"]), Tableau.from_rows(fx["prime"]["p_prime"])
        ok = prime_transform(p) == p2 and inverse_prime_transform(p2) == p
    report.add(1, "P to P' transform", ok, "forward and inverse", t.seconds)

    fx = load_fixture("bottom_row_move.json")
    with Timer() as t:
        before, after = filling_from_json(fx["before"]), filling_from_json(fx["after"])
        image = f(before)
        ok = image == after and chain_stats(image) == chain_stats(before)
    report.add(1, "bottom-row move f", ok, f"stats {tuple(chain_stats(before))}", t.seconds)

    fx = load_fixture("linked.json")["growth"]
    with Timer() as t:
        p = LinkedPartition.make(fx["n"], fx["partition"])
        q = cgp_bijection(p)
        enc_ok = to_triangle_filling(p).ones == frozenset(map(tuple, fx["ones"]))
        img_ok = q == LinkedPartition.make(fx["n"], fx["image"])
        img_enc = to_triangle_filling(q).ones == frozenset(map(tuple, fx["image_ones"]))
        want = [(tuple(s), m) for s, m in fx["border"]]
        border_ok = [(s.shape, s.marked_row) for s in vacillating_border(p)] == want
    report.add(1, "linked partition growth map", enc_ok and img_ok and img_enc and border_ok,
               f"{p} -> {q}; border {border_str(vacillating_border(p))}", t.seconds)


# -- criteria 2 and 3 -------------------------------------------------------------

def suite_words(report: Report, max_len: int = 6, alphabet: int = 4, **_) -> None:
    report.params.update(word_max_len=max_len, word_alphabet=alphabet)
    bad_pq = bad_valid = bad_lis = total = 0
    with Timer() as t:
        for w in _words(max_len, alphabet):
            total += 1
            pair = insert_word(w)
            if validate(pair.p) or validate(pair.q):
                bad_valid += 1
            if extract_pq(build_growth(matrix_rep(w))) != pair:
                bad_pq += 1
    report.add(2, "growth diagram (P, Q) equals insertion (P, Q)", bad_pq == 0 and bad_valid == 0,
               f"{total} words, {bad_pq} mismatches, {bad_valid} invalid tableaux", t.seconds)
    with Timer() as t:
        for w in _words(max_len, alphabet):
            if lis_lds_via_tableau(w) != (lis(w), lds(w)):
                bad_lis += 1
    report.add(3, "lis/lds equal columns/rows of P", bad_lis == 0,
               f"{total} words, {bad_lis} mismatches", t.seconds)


# -- criterion 4 ------------------------------------------------------------------

def _shapes_in_box(rows: int, cols: int):
    def rec(prefix, cap):
        yield tuple(prefix)
        if len(prefix) < rows:
            for k in range(cap, 0, -1):
                yield from rec(prefix + [k], k)
    yield from rec([], cols)


def increasing_tableaux(max_rows: int, max_cols: int, max_entry: int):
    """Every increasing tableau of straight shape inside max_rows x max_cols."""
    for shape in _shapes_in_box(max_rows, max_cols):
        cells = [(r, c) for r, k in enumerate(shape, 1) for c in range(1, k + 1)]
        entries: dict = {}

        def fill(i):
            if i == len(cells):
                yield Tableau(dict(entries))
                return
            r, c = cells[i]
            lo = max(entries.get((r, c - 1), 0), entries.get((r - 1, c), 0)) + 1
            for v in range(lo, max_entry + 1):
                entries[(r, c)] = v
                yield from fill(i + 1)
            entries.pop((r, c), None)

        yield from fill(0)


def rectangle_fillings(height: int, width: int):
    """All fillings of a height x width rectangle with at most one 1 per column."""
    for pick in product(range(height + 1), repeat=width):
        yield RectangleFilling.make(height, width, ((r, c) for c, r in enumerate(pick, 1) if r))


def suite_roundtrips(report: Report, seed: int = 0, samples: int = 300, **_) -> None:
    bad = total = 0
    with Timer() as t:
        for y in increasing_tableaux(3, 3, 4):
            for x in range(1, 5):
                z, corner, alpha = hecke_insert(y, x)
                total += 1
                if reverse_hecke_insert(z, corner, alpha) != (y, x):
                    bad += 1
    report.add(4, "hecke insert / reverse insert", bad == 0,
               f"{total} (tableau, letter) pairs in a 3x3 box, entries <= 4, {bad} failures", t.seconds)

    bad = total = 0
    with Timer() as t:
        for w in _words(6, 4):
            total += 1
            if recover_word(insert_word(w)) != w:
                bad += 1
    report.add(4, "insert_word / recover_word", bad == 0, f"{total} words, {bad} failures", t.seconds)

    rng = random.Random(seed)
    bad = 0
    with Timer() as t:
        for _ in range(samples):
            w = tuple(rng.randint(1, 7) for _ in range(rng.randint(7, 14)))
            pair = insert_word(w)
            if recover_word(pair) != w or extract_pq(build_growth(matrix_rep(w))) != pair:
                bad += 1
    report.add(4, "random longer words", bad == 0,
               f"{samples} words of length 7-14 over 1..7 (seed {seed}), {bad} failures", t.seconds,
               required=False)

    bad = total = 0
    with Timer() as t:
        for h in range(1, 4):
            for wd in range(1, 5):
                seen = set()
                for r in rectangle_fillings(h, wd):
                    total += 1
                    img = phi(r)
                    seen.add(img)
                    if phi_inverse(img) != r:
                        bad += 1
                if len(seen) != (h + 1) ** wd:
                    bad += 1
    report.add(4, "phi / phi_inverse", bad == 0,
               f"{total} fillings of rectangles up to 3x4, {bad} failures", t.seconds)

    bad = total = 0
    with Timer() as t:
        squares: dict = {}
        for w in _words(6, 4):
            out: list = []
            build_growth(matrix_rep(w), out)
            for sq, res in out:
                squares[sq] = res
        for sq, (gamma, top) in squares.items():
            total += 1
            if backward_square(gamma, sq.mu, sq.nu, top) != sq:
                bad += 1
    report.add(4, "forward / backward local rules", bad == 0,
               f"{total} distinct squares, {bad} failures", t.seconds)


# -- criteria 5 and 6 -------------------------------------------------------------

def integer_partitions(n: int, cap: int | None = None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for k in range(min(n, cap), 0, -1):
        for rest in integer_partitions(n - k, k):
            yield (k,) + rest


def stack_orderings(parts) -> list:
    """Unimodal orderings of a multiset of row lengths: place the parts from the
    largest down, each at the bottom or the top."""
    parts = sorted(parts, reverse=True)
    out = {(parts[0],)}
    for x in parts[1:]:
        out = {(x,) + a for a in out} | {a + (x,) for a in out}
    return sorted(out)


class MultisetResult(NamedTuple):
    parts: tuple
    orderings: int
    fillings: int
    tables_agree: bool
    symmetric: bool
    move_failures: list


def check_multiset(parts: tuple) -> MultisetResult:
    """All stack orderings of ``parts`` give one count table, and the bottom-row
    move of every non-Ferrers ordering is a statistic-preserving bijection."""
    tables = []
    fails = []
    n = 0
    for order in stack_orderings(parts):
        shape = Polyomino.from_row_spec(order)
        fills = list(enumerate_fillings(shape))
        n += len(fills)
        stats = [chain_stats(x) for x in fills]
        table: dict = defaultdict(int)
        for s in stats:
            table[s] += 1
        tables.append(dict(table))
        if shape.is_ferrers_french():
            continue
        images = set()
        for x, s in zip(fills, stats):
            y = f(x)
            if chain_stats(y) != s or y.empty_columns() != x.empty_columns():
                fails.append((order, sorted(x.ones)))
            images.add(y)
        if len(images) != len(fills):
            fails.append((order, "not injective"))
    agree = all(t == tables[0] for t in tables)
    poly = GenPoly()
    for (k, u, v), m in tables[0].items():
        poly[(u, v)] += m
    return MultisetResult(tuple(parts), len(tables), n, agree, poly.is_symmetric(), fails[:5])


@lru_cache(maxsize=None)
def row_order_sweep(max_cells: int, workers: int = 1) -> tuple:
    todo = [p for m in range(1, max_cells + 1) for p in integer_partitions(m)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return tuple(pool.map(check_multiset, todo, chunksize=4))
    return tuple(map(check_multiset, todo))


def suite_row_order(report: Report, max_cells: int = 12, workers: int = 1, **_) -> None:
    report.params.update(max_cells=max_cells)
    with Timer() as t:
        res = row_order_sweep(max_cells, workers)
    n_ord = sum(r.orderings for r in res)
    n_fill = sum(r.fillings for r in res)
    disagree = [r.parts for r in res if not r.tables_agree]
    report.add(5, "count table independent of row order", not disagree,
               f"{len(res)} row multisets, {n_ord} stack shapes, {n_fill} fillings, "
               f"{len(disagree)} disagreements {disagree[:3]}", t.seconds)
    moves = [r for r in res if r.move_failures]
    report.add(5, "bottom-row move preserves (n, ne, se) bijectively", not moves,
               f"{len(moves)} multisets with failures {[m.move_failures for m in moves[:2]]}", 0.0)


def suite_symmetry(report: Report, max_cells: int = 12, workers: int = 1, **_) -> None:
    report.params.update(max_cells=max_cells)
    with Timer() as t:
        res = row_order_sweep(max_cells, workers)
    asym = [r.parts for r in res if not r.symmetric]
    report.add(6, "(ne, se) distribution symmetric on stack shapes", not asym,
               f"{len(res)} row multisets, {len(asym)} asymmetric {asym[:3]}", t.seconds)


# -- criteria 7 and 8 -------------------------------------------------------------

def suite_counterexamples(report: Report, **_) -> None:
    for name in ("row_move_stack.json", "row_move_moon.json"):
        fx = load_fixture(name)
        with Timer() as t:
            before, after = filling_from_json(fx["before"]), filling_from_json(fx["after"])
            s0, s1 = chain_stats(before), chain_stats(after)
            image = move_row_replay(before, fx["moved_row"])
            ok = ((s0.ne, s0.se) == (fx["before"]["ne"], fx["before"]["se"])
                  and (s1.ne, s1.se) == (fx["after"]["ne"], fx["after"]["se"])
                  and image == after)
        kind = "stack" if "stack" in name else "moon"
        report.add(7, f"row move on a {kind} changes ne", ok,
                   f"(ne, se) {s0.ne, s0.se} -> {s1.ne, s1.se}, replay of row {fx['moved_row']} "
                   f"{'matches' if image == after else 'differs'}", t.seconds)


def suite_rowsums(report: Report, **_) -> None:
    fx = load_fixture("row_sums.json")
    with Timer() as t:
        shape = shape_from_json(fx["shape"])
        mode = Mode("rowsums", fx["n"], tuple(fx["row_sums"]))
        got = [count(shape, fx["n"], e["ne"], e["se"], mode) for e in fx["expect"]]
        want = [e["count"] for e in fx["expect"]]
    report.add(8, "fixed row sums break the symmetry", got == want,
               f"counts {got} for (ne, se) = {[(e['ne'], e['se']) for e in fx['expect']]}", t.seconds)


# -- criterion 9 ------------------------------------------------------------------

def sharded_gen_poly(shape: Polyomino, mode: Mode, shards: int = 1, workers: int = 1) -> GenPoly:
    if workers > 1 and shards > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(gen_poly, [shape] * shards, [mode] * shards, [shards] * shards,
                                  range(shards)))
    else:
        parts = [gen_poly(shape, mode, shards, s) for s in range(shards)]
    return merge(parts)


def suite_conjecture(report: Report, shards: int = 1, workers: int = 1, **_) -> None:
    fx = load_fixture("conjecture.json")
    shapes = {k: shape_from_json(v) for k, v in fx["shapes"].items()}
    printed = GenPoly.from_json(fx["printed"])
    polys = report.records.setdefault("polynomials", {})
    for mode in (ALL, Mode("cover")):
        with Timer() as t:
            got = {k: sharded_gen_poly(s, mode, shards, workers) for k, s in shapes.items()}
        first = got["M1"]
        equal = all(g == first for g in got.values())
        for k, g in got.items():
            polys[f"{k} {mode}"] = g.to_json()
        report.add(9, f"moon polyominoes with equal row lengths, mode={mode}", equal,
                   f"{len(got)} shapes, {first.total()} fillings each", t.seconds)
        if mode.kind == "cover":
            report.add(9, "printed polynomial reproduced, mode=cover", first == printed,
                       first.pretty(), 0.0, required=False)

    fx = load_fixture("almost_moons.json")
    for name in ("A1", "A2"):
        shape = shape_from_json(fx[name]["shape"])
        want = GenPoly.from_json(fx[name]["printed"])
        for mode in (ALL, Mode("cover")):
            with Timer() as t:
                g = sharded_gen_poly(shape, mode, shards, workers)
            polys[f"{name} {mode}"] = g.to_json()
            report.add(9, f"almost-moon {name} asymmetric, mode={mode}", not g.is_symmetric(),
                       f"{g.total()} fillings, G(x,y) {'=' if g.is_symmetric() else '!='} G(y,x)",
                       t.seconds)
            if mode.kind == "cover":
                report.add(9, f"almost-moon {name} printed polynomial reproduced, mode=cover", g == want,
                           f"computed {g.pretty()}; printed {want.pretty()}", 0.0, required=False)


# -- criteria 10 and 11 -----------------------------------------------------------

def suite_witnesses(report: Report, **_) -> None:
    fx = load_fixture("linked.json")["witnesses"]
    n = fx["n"]
    with Timer() as t:
        p = LinkedPartition.make(n, fx["L"])
        l1, l2 = LinkedPartition.make(n, fx["L1"]), LinkedPartition.make(n, fx["L2"])
        ours, cgp = our_bijection(p), cgp_bijection(p)
    report.add(10, "bottom-row-move bijection on the witness", ours == l1, f"{ours}", t.seconds)
    report.add(10, "border-transpose bijection on the witness", cgp == l2, f"{cgp}", 0.0)
    report.add(10, "the two bijections differ on the witness", l1 != l2 and ours != cgp,
               f"cross/nest of L = {cross(p)}/{nest(p)}", 0.0)

    fx = load_fixture("linked.json")["standard_rep"]
    p = LinkedPartition.make(fx["n"], fx["blocks"])
    report.add(10, "standard representation", standard_rep(p) == frozenset(map(tuple, fx["arcs"])),
               f"{sorted(standard_rep(p))}", 0.0, required=False)


def suite_linked(report: Report, max_n: int = 6, **_) -> None:
    report.params.update(linked_max_n=max_n)
    for name, fn in (("bottom-row-move", our_bijection), ("border-transpose", cgp_bijection)):
        bad = total = 0
        with Timer() as t:
            for n in range(0, max_n + 1):
                seen = set()
                parts = list(all_linked_partitions(n))
                for p in parts:
                    q = fn(p)
                    total += 1
                    seen.add(q)
                    if (cross(q), nest(q)) != (nest(p), cross(p)) or comp1(q) != comp1(p) \
                            or comp2(q) != comp2(p):
                        bad += 1
                if len(seen) != len(parts):
                    bad += 1
        report.add(11, f"{name} bijection swaps crossings and nestings", bad == 0,
                   f"{total} linked partitions with n <= {max_n}, {bad} failures", t.seconds)

    bad = total = 0
    with Timer() as t:
        for n in range(1, max_n + 1):
            for p in all_linked_partitions(n):
                total += 1
                fl = to_triangle_filling(p)
                s = chain_stats(fl)
                steps = vacillating_border(p)
                width = max(len(x.shape) and x.shape[0] for x in steps)
                height = max(len(x.shape) for x in steps)
                if from_triangle_filling(fl, n) != p or (s.ne, s.se) != (nest(p), cross(p)) \
                        or (width, height) != (nest(p), cross(p)):
                    bad += 1
    report.add(11, "encoding, chain statistics and border reading", bad == 0,
               f"{total} linked partitions, {bad} failures", t.seconds)


# -- criterion 12 -----------------------------------------------------------------

def suite_kknuth(report: Report, max_len: int = 5, alphabet: int = 3, slack: int = 4, **_) -> None:
    report.params.update(kknuth_max_len=max_len, kknuth_alphabet=alphabet, kknuth_slack=slack)
    classes: dict = defaultdict(list)
    words = [()] + list(_words(max_len, alphabet))
    for w in words:
        classes[insert_word(w).p].append(w)

    def budget(*ws):
        return EquivBudget(max(len(w) for w in ws) + slack)

    found = misses = states = 0
    pairs = []
    with Timer() as t:
        for cls in classes.values():
            for a, b in combinations(cls, 2):
                v = kknuth_equivalent(a, b, budget(a, b))
                states = max(states, v.states)
                if v.equivalent:
                    found += 1
                    pairs.append((a, b))
                else:
                    misses += 1
    report.add(12, "Hecke-equal words are K-Knuth equivalent", misses == 0,
               f"{found} pairs found, {misses} not found within max_len = length + {slack} "
               f"(largest search {states} states)", t.seconds)

    misses = 0
    with Timer() as t:
        for w in words:
            r = reading_word(insert_word(w).p)
            if not kknuth_equivalent(w, r, budget(w, r)).equivalent:
                misses += 1
    report.add(12, "every word is equivalent to the reading word of P", misses == 0,
               f"{len(words)} words, {misses} not found within budget", t.seconds)

    misses = total = 0
    with Timer() as t:
        for a, b in pairs:
            for lo in range(1, alphabet + 1):
                for hi in range(lo, alphabet + 1):
                    ra, rb = restrict(a, lo, hi), restrict(b, lo, hi)
                    total += 1
                    if not kknuth_equivalent(ra, rb, budget(ra, rb, (0,))).equivalent:
                        misses += 1
    report.add(12, "restriction to an interval keeps equivalence", misses == 0,
               f"{total} restricted pairs, {misses} not found within budget", t.seconds)


SUITES: dict = {
    "figures": suite_figures,
    "words": suite_words,
    "roundtrips": suite_roundtrips,
    "theorem1": suite_row_order,
    "corollary1": suite_symmetry,
    "counterexamples": suite_counterexamples,
    "rowsums": suite_rowsums,
    "conjecture": suite_conjecture,
    "witnesses": suite_witnesses,
    "theorem5": suite_linked,
    "kknuth": suite_kknuth,
}


def run(suites, report: Report | None = None, fail_fast: bool = False, **params) -> Report:
    report = report or Report("verify", params)
    for name in suites:
        SUITES[name](report, **params)
        if fail_fast and not report.ok:
            break
    return report
