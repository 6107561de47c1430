"""Hecke growth diagrams: matrix representation of words, the forward local
rules F1-F10, their case-by-case inverses, and border extraction of (P, Q).

Grid coordinates are Cartesian: rows are counted from the bottom, columns
from the left, both 1-based.  Corner ``(x, y)`` is the lattice point at the
top-right of square ``(col=x, row=y)``; the bottom row and the left column of
corners carry the empty partition.  Horizontal edge labels are keyed by the
square whose *top* edge they sit on.

Diagrams are not restricted to rectangles: any region whose corner set is
closed under moving down or left is allowed (rectangles for words, the
staircase ``x + y <= n`` for linked partitions).
"""
from __future__ import annotations

from typing import NamedTuple, Sequence

from .hecke import HeckePair
from .tableaux import (SetValuedTableau, Tableau, add_box, contains, highest_corner_row,
                       part, partition, union)


class InconsistentSquare(ValueError):
    pass


class BinaryGrid(NamedTuple):
    rows: int
    cols: int
    marks: frozenset          # {(row, col)}
    squares: frozenset | None = None   # None: the full rectangle

    def has_square(self, col: int, row: int) -> bool:
        if not (1 <= col <= self.cols and 1 <= row <= self.rows):
            return False
        return self.squares is None or (col, row) in self.squares

    def column_marks(self) -> dict:
        return {c: r for r, c in self.marks}


def rectangle(rows: int, cols: int, marks=()) -> BinaryGrid:
    return BinaryGrid(rows, cols, frozenset(marks))


def staircase(n: int, marks=()) -> BinaryGrid:
    """Squares ``(col, row)`` with ``col + row <= n``: the triangle with n-1
    boxes in its bottom row, framed by one empty column and one empty row."""
    squares = frozenset((c, r) for c in range(1, n) for r in range(1, n - c + 1))
    return BinaryGrid(n, n, frozenset(marks), squares)


def matrix_rep(w: Sequence[int]) -> BinaryGrid:
    """One mark per column ``j`` at row ``w_j``."""
    return rectangle(max(w, default=0), len(w), ((x, j) for j, x in enumerate(w, 1)))


def _check_grid(grid: BinaryGrid) -> None:
    seen = set()
    for r, c in grid.marks:
        if c in seen:
            raise ValueError(f"column {c} has more than one mark")
        seen.add(c)
        if not grid.has_square(c, r):
            raise ValueError(f"mark {(r, c)} lies outside the region")


def corner_set(grid: BinaryGrid) -> set:
    pts = {(x, 0) for x in range(grid.cols + 1)} | {(0, y) for y in range(grid.rows + 1)}
    if grid.squares is None:
        pts |= {(x, y) for x in range(grid.cols + 1) for y in range(grid.rows + 1)}
    else:
        for c, r in grid.squares:
            pts |= {(c - 1, r - 1), (c, r - 1), (c - 1, r), (c, r)}
    return pts


class SquareConfig(NamedTuple):
    lam: tuple            # bottom-left
    mu: tuple             # top-left
    nu: tuple             # bottom-right
    bottom_label: int | None
    has_x: bool


# -- local rules --------------------------------------------------------------

def _box_row(big, small) -> int:
    """Row of the single box of big/small."""
    rows = [i for i in range(1, len(big) + 1) if part(big, i) != part(small, i)]
    if len(rows) != 1 or part(big, rows[0]) != part(small, rows[0]) + 1:
        raise InconsistentSquare(f"{big}/{small} is not a single box")
    return rows[0]


def forward_square(sq: SquareConfig):
    """Return ``(gamma, top_label)`` for a square; exactly one rule fires."""
    lam, mu, nu, bl, has_x = sq
    if not (contains(mu, lam) and contains(nu, lam)):
        raise InconsistentSquare("inconsistent square")
    if bl is not None and nu != lam:
        raise InconsistentSquare("inconsistent square")
    if has_x:
        if nu != lam or bl is not None:
            raise InconsistentSquare("inconsistent square")
        if part(mu, 1) == part(nu, 1):
            return add_box(mu, 1), None                         # F1
        return mu, highest_corner_row(mu)                       # F2
    if bl is None and (mu == lam or nu == lam):
        return (nu if mu == lam else mu), None                  # F3
    if not contains(mu, nu):
        return union(mu, nu), None                              # F4
    if bl is None:
        i = _box_row(nu, lam)
        if part(mu, i + 1) > part(nu, i + 1):
            return mu, i + 1                                    # F6
        return _grow(mu, i + 1), None                           # F5
    i = bl
    col = part(nu, i)
    if col == 0 or part(nu, i + 1) >= col:
        raise InconsistentSquare(f"row {i} of {nu} has no inner corner")
    below = part(mu, i + 1) >= col
    right = part(mu, i) > col
    if below:
        return mu, i + 1                                        # F8
    if right:
        if part(mu, i + 1) > part(nu, i + 1):
            return mu, i + 1                                    # F10
        return _grow(mu, i + 1), None                           # F9
    return mu, i                                                # F7


def _grow(p, row):
    try:
        return add_box(p, row)
    except ValueError as exc:
        raise InconsistentSquare(str(exc)) from exc


def _remove_last(p, row):
    q = list(p)
    if row < 1 or row > len(q) or q[row - 1] == 0:
        raise InconsistentSquare(f"no box to remove in row {row} of {p}")
    q[row - 1] -= 1
    try:
        return partition(q)
    except ValueError as exc:
        raise InconsistentSquare(str(exc)) from exc


def backward_square(gamma, mu, nu, top_label) -> SquareConfig:
    """Recover ``(lambda, bottom_label, has_x)`` from the other three corners
    and the top edge label by inverting the forward rules case by case.

    Every candidate is re-run through :func:`forward_square`; a mismatch is an
    inconsistency, never a guess.
    """
    gamma, mu, nu = partition(gamma), partition(mu), partition(nu)
    if not (contains(gamma, mu) and contains(gamma, nu)):
        raise InconsistentSquare("inconsistent square")
    t = top_label
    if gamma != mu:
        if t is not None:
            raise InconsistentSquare("inconsistent square")
        if not contains(mu, nu):
            sq = SquareConfig(_meet(mu, nu), mu, nu, None, False)         # F3 / F4
        else:
            r = _box_row(gamma, mu)
            if r == 1:
                sq = SquareConfig(nu, mu, nu, None, True)                 # F1
            elif part(mu, r - 1) > part(nu, r - 1):
                sq = SquareConfig(nu, mu, nu, r - 1, False)               # F9
            else:
                sq = SquareConfig(_remove_last(nu, r - 1), mu, nu, None, False)  # F5
    elif t is None:
        sq = SquareConfig(nu, mu, nu, None, False)                        # F3
    else:
        sq = _backward_plateau(mu, nu, t)
    if forward_square(sq) != (gamma, t):
        raise InconsistentSquare("inconsistent square")
    return sq


def _meet(a, b):
    return partition(min(part(a, i), part(b, i)) for i in range(1, max(len(a), len(b)) + 1))


def _backward_plateau(mu, nu, t) -> SquareConfig:
    """gamma == mu with top label t: one of F2, F6, F7, F8, F10.

    Boxes of mu/nu all hold the largest letter of the row, so no two share a
    row or a column.  Hence F2 only ever carries label 1, and a box of mu/nu
    in row t separates F6/F8/F10 (label t = i + 1) from F7 (label t = i).
    """
    if t == 1:
        if part(mu, 1) != part(nu, 1):
            return SquareConfig(nu, mu, nu, None, True)                   # F2
        return SquareConfig(nu, mu, nu, 1, False)                         # F7
    if part(mu, t) == part(nu, t):
        return SquareConfig(nu, mu, nu, t, False)                         # F7
    i = t - 1
    col = part(nu, i)
    if col > 0 and part(nu, t) < col:
        if part(mu, t) >= col:
            return SquareConfig(nu, mu, nu, i, False)                     # F8
        if part(mu, i) > col:
            return SquareConfig(nu, mu, nu, i, False)                     # F10
    # F6: nu/lambda is the last box of row i; that box holds the largest
    # letter, so nothing of mu/nu sits right of or below it.
    return SquareConfig(_remove_last(nu, i), mu, nu, None, False)


# -- diagrams -----------------------------------------------------------------

class GrowthDiagram(NamedTuple):
    grid: BinaryGrid
    corners: dict         # (x, y) -> partition
    hlabels: dict         # (col, row) -> label on the top edge of that square

    def corner(self, x: int, y: int):
        return self.corners[(x, y)]


def build_growth(grid: BinaryGrid, squares_out: list | None = None) -> GrowthDiagram:
    """Fill the diagram square by square: bottom row of squares first, left to
    right within a row.  ``squares_out`` collects every (config, result) pair."""
    _check_grid(grid)
    corners = {pt: () for pt in corner_set(grid) if pt[0] == 0 or pt[1] == 0}
    hlabels = {}
    for r in range(1, grid.rows + 1):
        for c in range(1, grid.cols + 1):
            if not grid.has_square(c, r):
                continue
            sq = SquareConfig(corners[(c - 1, r - 1)], corners[(c - 1, r)], corners[(c, r - 1)],
                              hlabels.get((c, r - 1)), (r, c) in grid.marks)
            gamma, top = forward_square(sq)
            corners[(c, r)] = gamma
            if top is not None:
                hlabels[(c, r)] = top
            if squares_out is not None:
                squares_out.append((sq, (gamma, top)))
    return GrowthDiagram(grid, corners, hlabels)


class Border(NamedTuple):
    """Corner labels and horizontal edge labels along the upper-right border,
    listed from the bottom-right corner to the top-left corner."""
    grid: BinaryGrid        # region only; marks are ignored
    path: tuple             # ((x, y), partition) pairs
    labels: dict            # (col, row) -> label, for horizontal border edges


def border_path(grid: BinaryGrid) -> list:
    pts = corner_set(grid)
    x, y = grid.cols, 0
    path = [(x, y)]
    while (x, y) != (0, grid.rows):
        if (x, y + 1) in pts:
            y += 1
        else:
            x -= 1
        path.append((x, y))
    return path


def borders(d: GrowthDiagram) -> Border:
    path = border_path(d.grid)
    labels = {}
    for (x0, y0), (x1, y1) in zip(path, path[1:]):
        if y0 == y1 and (x0, y0) in d.hlabels:
            labels[(x0, y0)] = d.hlabels[(x0, y0)]
    region = d.grid._replace(marks=frozenset())
    return Border(region, tuple((pt, d.corners[pt]) for pt in path), labels)


def unbuild_growth(border: Border, squares_out: list | None = None) -> BinaryGrid:
    """Reconstruct the marks from border data with the backward rules, sweeping
    the top row of squares first and right to left within a row."""
    grid = border.grid
    corners = {pt: partition(p) for pt, p in border.path}
    hlabels = dict(border.labels)
    marks = set()
    for r in range(grid.rows, 0, -1):
        for c in range(grid.cols, 0, -1):
            if not grid.has_square(c, r):
                continue
            try:
                gamma, mu, nu = corners[(c, r)], corners[(c - 1, r)], corners[(c, r - 1)]
            except KeyError as exc:
                raise InconsistentSquare(f"border data does not cover corner {exc}") from exc
            top = hlabels.get((c, r))
            sq = backward_square(gamma, mu, nu, top)
            if squares_out is not None:
                squares_out.append((sq, (gamma, top)))
            lam_pt = (c - 1, r - 1)
            if lam_pt in corners and corners[lam_pt] != sq.lam:
                raise InconsistentSquare(f"conflicting labels at corner {lam_pt}")
            corners[lam_pt] = sq.lam
            if sq.bottom_label is not None:
                if r == 1:
                    raise InconsistentSquare("label on the bottom border")
                hlabels[(c, r - 1)] = sq.bottom_label
            if sq.has_x:
                marks.add((r, c))
    for (x, y), p in corners.items():
        if (x == 0 or y == 0) and p != ():
            raise InconsistentSquare(f"corner {(x, y)} on the lower-left border is not empty")
    out = grid._replace(marks=frozenset(marks))
    _check_grid(out)
    return out


def extract_pq(d: GrowthDiagram) -> HeckePair:
    """P from the right border chain, Q from the top border chain (rectangles)."""
    grid = d.grid
    p = {}
    for k in range(1, grid.rows + 1):
        prev, cur = d.corner(grid.cols, k - 1), d.corner(grid.cols, k)
        for i in range(1, len(cur) + 1):
            for j in range(part(prev, i) + 1, part(cur, i) + 1):
                p[(i, j)] = k
    q: dict = {}
    for k in range(1, grid.cols + 1):
        prev, cur = d.corner(k - 1, grid.rows), d.corner(k, grid.rows)
        if prev != cur:
            q[(_box_row(cur, prev), max(part(cur, _box_row(cur, prev)), 1))] = [k]
        elif (k, grid.rows) in d.hlabels:
            row = d.hlabels[(k, grid.rows)]
            q[(row, part(prev, row))].append(k)
    return HeckePair(Tableau(p), SetValuedTableau(q))
