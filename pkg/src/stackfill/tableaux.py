"""Partitions, increasing tableaux (straight and skew), set-valued tableaux,
reading words and standardization.

Tableaux use English orientation: cell ``(1, 1)`` is the top-left box, rows
grow downward and columns grow to the right.  Entries are stored sparsely as
a ``{(row, col): value}`` mapping so that skew and straight shapes share the
same code paths.
"""
from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Sequence

Partition = tuple
Cell = tuple


# -- partitions ---------------------------------------------------------------

def partition(parts: Iterable[int]) -> Partition:
    """Canonical partition: trailing zeros dropped, weakly decreasing checked."""
    p = [int(x) for x in parts]
    while p and p[-1] == 0:
        p.pop()
    for a, b in zip(p, p[1:]):
        if b > a:
            raise ValueError(f"{tuple(p)} is not weakly decreasing")
    if p and p[-1] < 0:
        raise ValueError(f"{tuple(p)} has negative parts")
    return tuple(p)


def part(p: Partition, i: int) -> int:
    """Length of row ``i`` (1-based); 0 past the last row."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def size(p: Partition) -> int:
    return sum(p)


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(b <= a for a, b in zip(outer, inner))


def transpose(p: Partition) -> Partition:
    return tuple(sum(1 for x in p if x > j) for j in range(p[0])) if p else ()


def add_box(p: Partition, row: int) -> Partition:
    """Add a box at the end of ``row``; raises if the result is not a partition."""
    q = list(p) + [0] * (row - len(p))
    q[row - 1] += 1
    return partition(q)


def union(a: Partition, b: Partition) -> Partition:
    n = max(len(a), len(b))
    return tuple(max(part(a, i), part(b, i)) for i in range(1, n + 1))


def intersection(a: Partition, b: Partition) -> Partition:
    return partition(min(x, y) for x, y in zip(a, b))


def cells_of(p: Partition) -> list:
    return [(i, j) for i, length in enumerate(p, 1) for j in range(1, length + 1)]


def skew_cells(outer: Partition, inner: Partition = ()) -> list:
    return [(i, j) for i, length in enumerate(outer, 1)
            for j in range(part(inner, i) + 1, length + 1)]


def inner_corners(p: Partition) -> list:
    """Maximally south-east boxes of ``p`` (removable corners)."""
    return [(i, p[i - 1]) for i in range(1, len(p) + 1)
            if p[i - 1] > 0 and part(p, i + 1) < p[i - 1]]


def highest_corner_row(p: Partition) -> int:
    """Row of the top-most removable corner: the number of rows of length ``p[0]``."""
    return sum(1 for x in p if x == p[0]) if p else 0


def partition_str(p: Partition) -> str:
    if not p:
        return "0"
    sep = "," if max(p) > 9 else ""
    return sep.join(str(x) for x in p)


# -- tableaux -----------------------------------------------------------------

class Tableau:
    """Increasing tableau of skew shape ``outer / inner`` (``inner`` may be empty).

    Immutable by convention: every operation in the package builds a new
    instance.
    """

    __slots__ = ("entries", "inner", "outer")

    def __init__(self, entries: Mapping[Cell, int], inner: Sequence[int] = ()):
        self.entries = dict(entries)
        self.inner = partition(inner)
        rows = {}
        for (r, c) in self.entries:
            rows[r] = max(rows.get(r, 0), c)
        n = max(list(rows) + [len(self.inner)], default=0)
        self.outer = tuple(max(rows.get(i, 0), part(self.inner, i)) for i in range(1, n + 1))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], inner: Sequence[int] = ()) -> "Tableau":
        """Build from row lists, top row first.  Inner (skew) cells may be given
        as ``None`` or omitted; when omitted the row lists start at the first
        cell right of the inner shape."""
        inner = partition(inner)
        entries = {}
        for i, row in enumerate(rows, 1):
            offset = 0 if (row and row[0] is None) else part(inner, i)
            for j, v in enumerate(row, 1):
                if v is not None:
                    entries[(i, j + offset)] = v
        return cls(entries, inner)

    @property
    def shape(self) -> Partition:
        return partition(self.outer)

    @property
    def rows(self) -> list:
        """Row lists top-down; inner cells appear as ``None``."""
        return [[self.entries.get((i, j)) for j in range(1, length + 1)]
                for i, length in enumerate(self.outer, 1)]

    def straight_rows(self) -> list:
        return [[v for v in row if v is not None] for row in self.rows]

    def __getitem__(self, cell: Cell):
        return self.entries[cell]

    def __len__(self) -> int:
        return len(self.entries)

    def values(self) -> set:
        return set(self.entries.values())

    def max_entry(self) -> int:
        return max(self.entries.values(), default=0)

    def num_rows(self) -> int:
        return len(self.shape)

    def num_cols(self) -> int:
        return self.shape[0] if self.shape else 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, Tableau) and self.entries == other.entries
                and self.inner == other.inner)

    def __hash__(self) -> int:
        return hash((frozenset(self.entries.items()), self.inner))

    def __repr__(self) -> str:
        body = " / ".join(" ".join("." if v is None else str(v) for v in row) for row in self.rows)
        return f"Tableau({body})"

    def to_json(self):
        return self.rows


class SetValuedTableau:
    """Straight-shape tableau whose boxes hold nonempty sets (stored sorted)."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[Cell, Iterable[int]]):
        self.entries = {cell: tuple(sorted(vals)) for cell, vals in entries.items()}

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Iterable[int]]]) -> "SetValuedTableau":
        return cls({(i, j): vals for i, row in enumerate(rows, 1) for j, vals in enumerate(row, 1)})

    @property
    def shape(self) -> Partition:
        rows = {}
        for (r, c) in self.entries:
            rows[r] = max(rows.get(r, 0), c)
        return partition(rows.get(i, 0) for i in range(1, max(rows, default=0) + 1))

    @property
    def rows(self) -> list:
        return [[list(self.entries[(i, j)]) for j in range(1, length + 1)]
                for i, length in enumerate(self.shape, 1)]

    def cell_of(self, value: int) -> Cell:
        for cell, vals in self.entries.items():
            if value in vals:
                return cell
        raise KeyError(value)

    def values(self) -> list:
        return sorted(v for vals in self.entries.values() for v in vals)

    def __eq__(self, other) -> bool:
        return isinstance(other, SetValuedTableau) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    def __repr__(self) -> str:
        body = " / ".join(" ".join("{" + ",".join(map(str, s)) + "}" for s in row) for row in self.rows)
        return f"SetValuedTableau({body})"

    def to_json(self):
        return self.rows


# -- words --------------------------------------------------------------------

def reading_word(t: Tableau) -> tuple:
    """Rows left to right, bottom row first."""
    return tuple(v for row in reversed(t.rows) for v in row if v is not None)


def standardize(w: Sequence[int]) -> tuple:
    """Replace the i-th smallest distinct letter of ``w`` by ``i``."""
    rank = {x: i for i, x in enumerate(sorted(set(w)), 1)}
    return tuple(rank[x] for x in w)


def parse_word(text: str) -> tuple:
    """Accept ``"3,2,4"``, ``"3 2 4"`` or, for single-digit letters, ``"324"``."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or " " in text:
        return tuple(int(t) for t in text.replace(",", " ").split())
    return tuple(int(ch) for ch in text)


# -- validation ---------------------------------------------------------------

class Violation(NamedTuple):
    cell: Cell
    reason: str


def validate(t) -> Violation | None:
    """First violated invariant of an (increasing or set-valued) tableau, or None."""
    if isinstance(t, SetValuedTableau):
        return _validate_set_valued(t)
    return _validate_increasing(t)


def _validate_increasing(t: Tableau) -> Violation | None:
    for (r, c), v in sorted(t.entries.items()):
        if not isinstance(v, int) or v < 1:
            return Violation((r, c), "entry is not a positive integer")
        if r > 1 and c > part(t.outer, r - 1):
            return Violation((r, c), "shape is not a partition")
        if (r, c) in t.entries and c <= part(t.inner, r):
            return Violation((r, c), "cell lies inside the inner shape")
    for (r, c) in skew_cells(t.outer, t.inner):
        if (r, c) not in t.entries:
            return Violation((r, c), "missing entry")
    for (r, c), v in sorted(t.entries.items()):
        right = t.entries.get((r, c + 1))
        if right is not None and right <= v:
            return Violation((r, c + 1), "row not strictly increasing")
        below = t.entries.get((r + 1, c))
        if below is not None and below <= v:
            return Violation((r + 1, c), "column not strictly increasing")
    return None


def _validate_set_valued(t: SetValuedTableau) -> Violation | None:
    shape = t.shape
    for (r, c) in cells_of(shape):
        if (r, c) not in t.entries:
            return Violation((r, c), "shape is not a partition")
    for (r, c), vals in sorted(t.entries.items()):
        if not vals:
            return Violation((r, c), "empty set")
        if len(set(vals)) != len(vals) or min(vals) < 1:
            return Violation((r, c), "set must hold distinct positive integers")
        for nb, what in (((r, c + 1), "row"), ((r + 1, c), "column")):
            other = t.entries.get(nb)
            if other is not None and max(vals) >= min(other):
                return Violation(nb, f"{what} not strictly increasing")
    return None


def validate_recording(q: SetValuedTableau) -> Violation | None:
    """Set-valued tableau used as a recording tableau: values are exactly 1..n."""
    v = validate(q)
    if v is not None:
        return v
    vals = q.values()
    if vals != list(range(1, len(vals) + 1)):
        return Violation((1, 1), "values are not exactly 1..n")
    return None
