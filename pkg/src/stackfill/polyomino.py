"""Polyominoes, 01-fillings with at most one 1 per column, ne/se chain
statistics, exhaustive enumeration and (ne, se) generating polynomials.

Coordinates are Cartesian: cells are ``(row, col)`` with row 1 at the bottom.
"""
from __future__ import annotations

import json
from collections import Counter
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, NamedTuple, Sequence

from .kknuth import lds, lis


class ShapeError(ValueError):
    pass


class Rect(NamedTuple):
    row_lo: int
    row_hi: int
    col_lo: int
    col_hi: int

    def contains(self, cell) -> bool:
        r, c = cell
        return self.row_lo <= r <= self.row_hi and self.col_lo <= c <= self.col_hi

    @property
    def height(self) -> int:
        return self.row_hi - self.row_lo + 1

    @property
    def width(self) -> int:
        return self.col_hi - self.col_lo + 1


def _runs(values: Iterable[int]) -> list:
    vals = sorted(values)
    out = []
    for v in vals:
        if out and out[-1][1] == v - 1:
            out[-1][1] = v
        else:
            out.append([v, v])
    return out


def _comparable(a: set, b: set) -> bool:
    return a <= b or b <= a


class Polyomino:
    """Finite set of cells.  Classification is computed, never stored."""

    def __init__(self, cells: Iterable):
        self.cells = frozenset((int(r), int(c)) for r, c in cells)
        if any(r < 1 or c < 1 for r, c in self.cells):
            raise ShapeError("cells use 1-based coordinates")

    @classmethod
    def from_row_spec(cls, lengths: Sequence[int]) -> "Polyomino":
        """Left-justified rows, bottom row first; must be unimodal."""
        lengths = [int(x) for x in lengths]
        if any(x < 1 for x in lengths):
            raise ShapeError("row lengths must be positive")
        if not _unimodal(lengths):
            raise ShapeError("not a stack polyomino")
        return cls((r, c) for r, n in enumerate(lengths, 1) for c in range(1, n + 1))

    @classmethod
    def from_row_ranges(cls, ranges: Sequence[Sequence[int]]) -> "Polyomino":
        """Row ``i`` (bottom first) covers columns ``lo..hi``."""
        return cls((r, c) for r, (lo, hi) in enumerate(ranges, 1) for c in range(lo, hi + 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Polyomino) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.cells

    def __repr__(self) -> str:
        return f"Polyomino({len(self.cells)} cells, rows={self.row_lengths()})"

    # -- geometry --------------------------------------------------------------

    @cached_property
    def rows(self) -> dict:
        out: dict = {}
        for r, c in self.cells:
            out.setdefault(r, set()).add(c)
        return out

    @cached_property
    def cols(self) -> dict:
        out: dict = {}
        for r, c in self.cells:
            out.setdefault(c, set()).add(r)
        return out

    @property
    def height(self) -> int:
        return max(self.rows, default=0)

    @property
    def width(self) -> int:
        return max(self.cols, default=0)

    def row_lengths(self) -> list:
        return [len(self.rows.get(r, ())) for r in range(1, self.height + 1)]

    def column_heights(self) -> list:
        return [len(self.cols.get(c, ())) for c in range(1, self.width + 1)]

    @cached_property
    def _prefix(self) -> list:
        h, w = self.height, self.width
        pre = [[0] * (w + 1) for _ in range(h + 1)]
        for r in range(1, h + 1):
            for c in range(1, w + 1):
                pre[r][c] = ((r, c) in self.cells) + pre[r - 1][c] + pre[r][c - 1] - pre[r - 1][c - 1]
        return pre

    def contains_rect(self, rect: Rect) -> bool:
        r0, r1, c0, c1 = rect
        if r0 < 1 or c0 < 1 or r1 > self.height or c1 > self.width:
            return False
        pre = self._prefix
        inside = pre[r1][c1] - pre[r0 - 1][c1] - pre[r1][c0 - 1] + pre[r0 - 1][c0 - 1]
        return inside == (r1 - r0 + 1) * (c1 - c0 + 1)

    def span_ok(self, a, b) -> bool:
        """Is the bounding rectangle of cells ``a`` and ``b`` inside the shape?"""
        (ra, ca), (rb, cb) = a, b
        return self.contains_rect(Rect(min(ra, rb), max(ra, rb), min(ca, cb), max(ca, cb)))

    # -- classification --------------------------------------------------------

    def is_row_convex(self) -> bool:
        return all(len(_runs(cs)) == 1 for cs in self.rows.values())

    def is_column_convex(self) -> bool:
        return all(len(_runs(rs)) == 1 for rs in self.cols.values())

    def is_intersection_free(self) -> bool:
        cols = list(self.cols.values())
        return all(_comparable(a, b) for i, a in enumerate(cols) for b in cols[i + 1:])

    def _rows_comparable(self) -> bool:
        rows = list(self.rows.values())
        return all(_comparable(a, b) for i, a in enumerate(rows) for b in rows[i + 1:])

    def is_moon(self) -> bool:
        return (self.is_row_convex() and self.is_column_convex()
                and self.is_intersection_free() and self._connected_rows())

    def _connected_rows(self) -> bool:
        return sorted(self.rows) == list(range(min(self.rows), max(self.rows) + 1)) if self.rows else True

    def is_stack(self) -> bool:
        if not self.is_moon() or min(self.rows, default=1) != 1:
            return False
        return all(cs == set(range(1, len(cs) + 1)) for cs in self.rows.values())

    def is_ferrers_french(self) -> bool:
        lengths = self.row_lengths()
        return self.is_stack() and all(a >= b for a, b in zip(lengths, lengths[1:]))

    def exceptional_rows(self) -> list:
        lengths = {r: len(cs) for r, cs in self.rows.items()}
        return [r for r, n in lengths.items()
                if any(m > n for q, m in lengths.items() if q > r)
                and any(m > n for q, m in lengths.items() if q < r)]

    def exceptional_cols(self) -> list:
        lengths = {c: len(rs) for c, rs in self.cols.items()}
        return [c for c, n in lengths.items()
                if any(m > n for q, m in lengths.items() if q > c)
                and any(m > n for q, m in lengths.items() if q < c)]

    def classify(self) -> set:
        tags = set()
        if self.is_row_convex():
            tags.add("row-convex")
        if self.is_column_convex():
            tags.add("column-convex")
        if {"row-convex", "column-convex"} <= tags:
            tags.add("convex")
        if self.is_intersection_free():
            tags.add("intersection-free")
        if self.is_moon():
            tags.add("moon")
        if self.is_stack():
            tags.add("stack")
        if self.is_ferrers_french():
            tags.add("ferrers-french")
        if "moon" not in tags:
            if self.is_row_convex() and self._rows_comparable() and len(self.exceptional_rows()) <= 1:
                tags.add("almost-moon-row")
            if self.is_column_convex() and self.is_intersection_free() and len(self.exceptional_cols()) <= 1:
                tags.add("almost-moon-col")
        return tags

    def maximal_rectangles(self) -> list:
        """All inclusion-maximal rectangles of cells, sorted."""
        rects = set()
        rows = sorted(self.rows)
        for r0 in rows:
            for r1 in rows:
                if r1 < r0:
                    continue
                common = set.intersection(*(self.rows.get(r, set()) for r in range(r0, r1 + 1)))
                for lo, hi in _runs(common):
                    rects.add(Rect(r0, r1, lo, hi))

        def grows(t: Rect) -> bool:
            r0, r1, c0, c1 = t
            return any(self.contains_rect(u) for u in (
                Rect(r0 - 1, r1, c0, c1), Rect(r0, r1 + 1, c0, c1),
                Rect(r0, r1, c0 - 1, c1), Rect(r0, r1, c0, c1 + 1)))
        return sorted(t for t in rects if not grows(t))

    def mirror_rows(self) -> "Polyomino":
        """Reflect through a horizontal axis (row r -> height + 1 - r)."""
        h = self.height
        return Polyomino((h + 1 - r, c) for r, c in self.cells)

    def to_json(self) -> dict:
        if self.is_stack():
            return {"kind": "rowspec", "lengths": self.row_lengths()}
        return {"kind": "cells", "cells": sorted([r, c] for r, c in self.cells)}


def _unimodal(seq: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i >= len(seq) - 1


def shape_from_json(obj: dict) -> Polyomino:
    kind = obj.get("kind")
    if kind == "rowspec":
        return Polyomino.from_row_spec(obj["lengths"])
    if kind == "ranges":
        return Polyomino.from_row_ranges(obj["ranges"])
    if kind == "cells":
        return Polyomino(obj["cells"])
    raise ShapeError(f"unknown shape kind {kind!r}")


# -- fillings -------------------------------------------------------------------

class Filling(NamedTuple):
    shape: Polyomino
    ones: frozenset

    @classmethod
    def make(cls, shape: Polyomino, ones: Iterable) -> "Filling":
        ones = frozenset((int(r), int(c)) for r, c in ones)
        bad = ones - shape.cells
        if bad:
            raise ShapeError(f"ones outside the shape: {sorted(bad)}")
        cols = [c for _, c in ones]
        if len(set(cols)) != len(cols):
            raise ShapeError("more than one 1 in a column")
        return cls(shape, ones)

    def word(self) -> tuple:
        """Row indices of the ones read left to right."""
        return tuple(r for r, _ in sorted(self.ones, key=lambda rc: rc[1]))

    def mirror_rows(self) -> "Filling":
        h = self.shape.height
        return Filling(self.shape.mirror_rows(), frozenset((h + 1 - r, c) for r, c in self.ones))

    def empty_columns(self) -> set:
        used = {c for _, c in self.ones}
        return set(self.shape.cols) - used

    def row_sums(self) -> list:
        return [sum(1 for r, _ in self.ones if r == k) for k in range(1, self.shape.height + 1)]

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "ones": sorted([r, c] for r, c in self.ones)}


def filling_from_json(obj: dict) -> Filling:
    return Filling.make(shape_from_json(obj["shape"]), obj.get("ones", []))


class ChainStats(NamedTuple):
    n: int
    ne: int
    se: int


def _longest(shape: Polyomino, pts: list, up: bool) -> int:
    """Longest chain of ``pts`` (sorted by column) going up-right (``up``) or
    down-right whose bounding rectangle lies in ``shape``: for each start a,
    a longest-path DP to every valid end b."""
    best = 1 if pts else 0
    k = len(pts)
    for i in range(k):
        a = pts[i]
        length = {i: 1}
        for j in range(i + 1, k):
            b = pts[j]
            if not ((b[0] > a[0]) if up else (b[0] < a[0])) or b[1] == a[1]:
                continue
            m = 0
            for t, lt in length.items():
                c = pts[t]
                if c[1] < b[1] and ((b[0] > c[0]) if up else (b[0] < c[0])):
                    m = max(m, lt)
            if m:
                length[j] = m + 1
                if m + 1 > best and shape.span_ok(a, b):
                    best = m + 1
    return best


def chain_stats(f: Filling) -> ChainStats:
    """Generic computation, valid for any shape: a chain's bounding rectangle is
    the one spanned by its end points, so it suffices to check each (start,
    end) pair and take the longest monotone path between them."""
    pts = sorted(f.ones, key=lambda rc: rc[1])
    return ChainStats(len(pts), _longest(f.shape, pts, True), _longest(f.shape, pts, False))


def chain_stats_moon(f: Filling, rects: list | None = None) -> ChainStats:
    """Shortcut for moon polyominoes: the longest chain lives in a maximal
    rectangle, where it is a longest increasing/decreasing subsequence."""
    rects = f.shape.maximal_rectangles() if rects is None else rects
    ne = se = 0
    for rect in rects:
        word = [r for r, c in sorted((o for o in f.ones if rect.contains(o)), key=lambda rc: rc[1])]
        ne = max(ne, lis(word))
        se = max(se, lds(word))
    return ChainStats(len(f.ones), ne, se)


# -- enumeration ----------------------------------------------------------------

class Mode(NamedTuple):
    """Which fillings to enumerate: ``all``; ``n=K`` (K ones); ``rowsums=a,b,..``
    (row i holds a_i ones); ``cover`` (one 1 in every column and no empty row,
    the convention that reproduces the printed conjecture polynomial)."""
    kind: str                    # "all", "n", "rowsums" or "cover"
    n: int | None = None
    row_sums: tuple | None = None

    @classmethod
    def parse(cls, text: str) -> "Mode":
        text = text.strip()
        if text in ("all", "cover"):
            return cls(text)
        if text.startswith("n="):
            return cls("n", int(text[2:]))
        if text.startswith("rowsums="):
            sums = tuple(int(x) for x in text[8:].split(","))
            return cls("rowsums", sum(sums), sums)
        raise ValueError(f"unknown mode {text!r}")

    def __str__(self) -> str:
        if self.kind in ("all", "cover"):
            return self.kind
        if self.kind == "n":
            return f"n={self.n}"
        return "rowsums=" + ",".join(map(str, self.row_sums))


ALL = Mode("all")


def _column_choices(shape: Polyomino, mode: Mode = None) -> list:
    empty = [] if mode is not None and mode.kind == "cover" else [None]
    return [(c, empty + sorted(shape.cols[c])) for c in sorted(shape.cols)]


def shard_prefix(shape: Polyomino, shards: int, mode: Mode = None) -> int:
    """Number of leading columns whose joint choice index decides the shard:
    the shortest prefix with at least ``shards`` combinations."""
    total, k = 1, 0
    for _, ch in _column_choices(shape, mode):
        if total >= shards:
            break
        total *= len(ch)
        k += 1
    return k


def enumerate_fillings(shape: Polyomino, mode: Mode = ALL, shards: int = 1,
                       shard: int = 0) -> Iterator[Filling]:
    """Column-major, each column choosing "empty" or a row bottom-up.  Shard
    ``s`` of ``S`` keeps the fillings whose mixed-radix index over the first
    :func:`shard_prefix` columns is congruent to ``s`` mod ``S``."""
    if not 0 <= shard < shards:
        raise ValueError("shard index out of range")
    choices = _column_choices(shape, mode)
    if mode.kind == "rowsums" and len(mode.row_sums) != shape.height:
        raise ValueError("row sums need one entry per row")
    k = shard_prefix(shape, shards, mode) if shards > 1 else 0
    head, tail = choices[:k], choices[k:]
    for idx, pre in enumerate(product(*(range(len(ch)) for _, ch in head))):
        if idx % shards != shard:
            continue
        fixed = [(ch[i], c) for (c, ch), i in zip(head, pre) if ch[i] is not None]
        yield from _extend(shape, fixed, tail, mode)


def _extend(shape, fixed, tail, mode):
    cols = [c for c, _ in tail]
    for pick in product(*(ch for _, ch in tail)):
        ones = fixed + [(r, c) for r, c in zip(pick, cols) if r is not None]
        if mode.kind == "n" and len(ones) != mode.n:
            continue
        if mode.kind == "rowsums":
            sums = [0] * shape.height
            for r, _ in ones:
                sums[r - 1] += 1
            if tuple(sums) != mode.row_sums:
                continue
        if mode.kind == "cover" and len({r for r, _ in ones}) != len(shape.rows):
            continue
        yield Filling(shape, frozenset(ones))


class GenPoly(Counter):
    """Sparse map (ne, se) -> count."""

    def total(self) -> int:  # Counter.total only exists on 3.10+
        return sum(self.values())

    def transpose(self) -> "GenPoly":
        return GenPoly({(v, u): m for (u, v), m in self.items()})

    def is_symmetric(self) -> bool:
        return +self == +self.transpose()

    def to_json(self) -> list:
        return [{"ne": u, "se": v, "count": m} for (u, v), m in sorted(self.items()) if m]

    @classmethod
    def from_json(cls, rows: list) -> "GenPoly":
        return cls({(r["ne"], r["se"]): r["count"] for r in rows})

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def pretty(self) -> str:
        terms = []
        for (u, v), m in sorted(self.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            if not m:
                continue
            mono = "".join(s for s in (_pow("x", u), _pow("y", v)) if s) or "1"
            terms.append(str(m) if mono == "1" else mono if m == 1 else f"{m}{mono}")
        return " + ".join(terms) or "0"


def _pow(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


class CountTable(Counter):
    """Sparse map (n, ne, se) -> count."""

    def gen_poly(self, n: int | None = None) -> GenPoly:
        out = GenPoly()
        for (k, u, v), m in self.items():
            if n is None or k == n:
                out[(u, v)] += m
        return out


def count_table(shape: Polyomino, mode: Mode = ALL, shards: int = 1, shard: int = 0,
                stats=chain_stats) -> CountTable:
    table = CountTable()
    for f in enumerate_fillings(shape, mode, shards, shard):
        table[stats(f)] += 1
    return table


def gen_poly(shape: Polyomino, mode: Mode = ALL, shards: int = 1, shard: int = 0) -> GenPoly:
    return count_table(shape, mode, shards, shard).gen_poly()


def count(shape: Polyomino, n: int, u: int, v: int, mode: Mode | None = None) -> int:
    """N(shape; n; ne=u, se=v), optionally under a row-sum restriction."""
    mode = mode or Mode("n", n)
    return count_table(shape, mode)[ChainStats(n, u, v)]


def merge(parts: Iterable[Counter]):
    """Coefficient-wise sum of shard results; keeps the type of the first part."""
    out = None
    for p in parts:
        if out is None:
            out = type(p)()
        out.update(p)
    return out if out is not None else Counter()
