"""Linked partitions of [n], their arcs, crossings and nestings, the encoding
as fillings of the staircase, and two bijections that swap crossings with
nestings: one through the bottom-row moves, one through transposing the
border of a Hecke growth diagram.

Encoding: the arc (i, j) of a block {i < j < ...} becomes a 1 in row ``i``
(counted from the bottom) and column ``n + 1 - j`` (counted from the left) of
the staircase whose bottom row has n - 1 cells.  Nestings become ne-chains
and crossings become se-chains.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple

from .bijection import to_ferrers
from .growth import Border, borders, build_growth, staircase, unbuild_growth
from .polyomino import Filling, Polyomino
from .tableaux import part, partition, partition_str, transpose


class LinkedPartitionError(ValueError):
    pass


class LinkedPartition(NamedTuple):
    n: int
    blocks: frozenset     # frozensets of ints

    @classmethod
    def make(cls, n: int, blocks: Iterable[Iterable[int]]) -> "LinkedPartition":
        bl = frozenset(frozenset(int(x) for x in b) for b in blocks)
        covered = set().union(*bl) if bl else set()
        if covered - set(range(1, n + 1)):
            raise LinkedPartitionError(f"elements outside [1, {n}]")
        # elements that are not mentioned form singleton blocks
        bl |= frozenset(frozenset((k,)) for k in range(1, n + 1) if k not in covered)
        p = cls(n, bl)
        bad = p.violation()
        if bad:
            raise LinkedPartitionError(f"blocks {sorted(bad[0])} and {sorted(bad[1])} are not nearly disjoint")
        return p

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "LinkedPartition":
        """``"1 2 3 5 6 | 2 4 7"``; n defaults to the largest element."""
        blocks = [[int(x) for x in chunk.replace(",", " ").split()] for chunk in text.split("|")]
        blocks = [b for b in blocks if b]
        if n is None:
            n = max((max(b) for b in blocks), default=0)
        return cls.make(n, blocks)

    def violation(self):
        """First pair of blocks that are not nearly disjoint, or None."""
        for a, b in combinations(sorted(self.blocks, key=sorted), 2):
            for t in a & b:
                ok1 = t == min(a) and len(a) > 1 and t != min(b)
                ok2 = t == min(b) and len(b) > 1 and t != min(a)
                if not (ok1 or ok2):
                    return a, b
        return None

    def sorted_blocks(self, singletons: bool = True) -> list:
        return sorted((sorted(b) for b in self.blocks if singletons or len(b) > 1))

    def __str__(self) -> str:
        return " | ".join(" ".join(map(str, b)) for b in self.sorted_blocks(singletons=False))


def standard_rep(p: LinkedPartition) -> frozenset:
    return frozenset((min(b), j) for b in p.blocks for j in b if j != min(b))


def from_arcs(n: int, arcs: Iterable) -> LinkedPartition:
    blocks: dict = {}
    for i, j in arcs:
        blocks.setdefault(i, {i}).add(j)
    return LinkedPartition.make(n, blocks.values())


def comp1(p: LinkedPartition) -> frozenset:
    return frozenset(i for i, _ in standard_rep(p))


def comp2(p: LinkedPartition) -> frozenset:
    return frozenset(j for _, j in standard_rep(p))


def _max_family(arcs: list, related) -> int:
    """Largest set of arcs that are pairwise related (brute force, small n)."""
    best = 1 if arcs else 0
    k = len(arcs)
    # grow cliques incrementally; arcs sorted so each clique is found once
    stack = [([i], i) for i in range(k)]
    while stack:
        clique, last = stack.pop()
        best = max(best, len(clique))
        for j in range(last + 1, k):
            if all(related(arcs[c], arcs[j]) for c in clique):
                stack.append((clique + [j], j))
    return best


def _crossing(a, b) -> bool:
    (i1, j1), (i2, j2) = sorted((a, b))
    return i1 < i2 < j1 < j2


def _nesting(a, b) -> bool:
    (i1, j1), (i2, j2) = sorted((a, b))
    return i1 < i2 < j2 < j1


def cross(p: LinkedPartition) -> int:
    return _max_family(sorted(standard_rep(p)), _crossing)


def nest(p: LinkedPartition) -> int:
    return _max_family(sorted(standard_rep(p)), _nesting)


# -- staircase encoding -----------------------------------------------------------

def triangle(n: int) -> Polyomino:
    """Staircase with n - 1 cells in the bottom row, one fewer in each row above."""
    return Polyomino.from_row_spec(list(range(n - 1, 0, -1)))


def to_triangle_filling(p: LinkedPartition) -> Filling:
    return Filling.make(triangle(p.n), ((i, p.n + 1 - j) for i, j in standard_rep(p)))


def from_triangle_filling(f: Filling, n: int) -> LinkedPartition:
    if f.shape != triangle(n):
        raise LinkedPartitionError("filling is not on the staircase")
    return from_arcs(n, ((r, n + 1 - c) for r, c in f.ones))


def all_linked_partitions(n: int):
    """Every linked partition of [n], by decoding every staircase filling."""
    from .polyomino import enumerate_fillings
    for f in enumerate_fillings(triangle(n)):
        yield from_triangle_filling(f, n)


# -- the two bijections --------------------------------------------------------------

def our_bijection(p: LinkedPartition) -> LinkedPartition:
    """Reflect the staircase filling upside down (ne and se swap), then move
    bottom rows up until the staircase is back."""
    flipped = to_triangle_filling(p).mirror_rows()
    back, _ = to_ferrers(flipped)
    return from_triangle_filling(back, p.n)


def _growth(p: LinkedPartition):
    grid = staircase(p.n, to_triangle_filling(p).ones) if p.n else staircase(0)
    return build_growth(grid)


def transpose_border(b: Border) -> Border:
    """Transpose every border partition; a label naming the row of the marked
    corner becomes the column of that corner."""
    corners = dict(b.path)
    labels = {key: part(corners[key], c) for key, c in b.labels.items()}
    path = tuple((pt, transpose(partition(lam))) for pt, lam in b.path)
    return Border(b.grid, path, labels)


def cgp_bijection(p: LinkedPartition) -> LinkedPartition:
    if p.n <= 1:
        return p
    grid = unbuild_growth(transpose_border(borders(_growth(p))))
    return from_arcs(p.n, ((r, p.n + 1 - c) for r, c in grid.marks))


class BorderStep(NamedTuple):
    shape: tuple
    marked_row: int | None


def vacillating_border(p: LinkedPartition) -> list:
    """Corner partitions along the upper-right border, bottom right to top
    left; a partition at the right end of a labelled horizontal edge carries
    that label (the row of its marked corner)."""
    if p.n == 0:
        return [BorderStep((), None)]
    b = borders(_growth(p))
    return [BorderStep(lam, b.labels.get(pt)) for pt, lam in b.path]


def border_str(steps: list) -> str:
    out = []
    for s in steps:
        txt = "0" if not s.shape else partition_str(s.shape)
        out.append(txt + (f"*{s.marked_row}" if s.marked_row else ""))
    return " ".join(out)
