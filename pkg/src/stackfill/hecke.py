"""Hecke insertion into increasing tableaux, its reverse, and the
word <-> (P, Q) correspondence."""
from __future__ import annotations

from typing import NamedTuple, Sequence

from .tableaux import SetValuedTableau, Tableau, validate


class InsertionError(ValueError):
    pass


class InsertionResult(NamedTuple):
    tableau: Tableau
    corner: tuple
    alpha: int


class HeckePair(NamedTuple):
    p: Tableau
    q: SetValuedTableau


def _rows(t: Tableau) -> list:
    if t.inner:
        raise InsertionError("Hecke insertion needs a straight-shape tableau")
    return [list(r) for r in t.rows]


def _from_rows(rows) -> Tableau:
    return Tableau({(i, j): v for i, row in enumerate(rows, 1) for j, v in enumerate(row, 1)})


def _fits(rows, r, c, v) -> bool:
    """Would value ``v`` at 0-based ``(r, c)`` keep rows and columns strictly increasing?
    ``c`` may equal ``len(rows[r])`` (appending)."""
    row = rows[r]
    if c > 0 and row[c - 1] >= v:
        return False
    if c + 1 < len(row) and row[c + 1] <= v:
        return False
    if r > 0:
        if c >= len(rows[r - 1]) or rows[r - 1][c] >= v:
            return False
    if r + 1 < len(rows) and c < len(rows[r + 1]) and rows[r + 1][c] <= v:
        return False
    return True


def _insert_rows(rows: list, x: int):
    """Insert ``x`` in place; return (corner, alpha) with a 1-based corner."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([])
        row = rows[r]
        bigger = [j for j, v in enumerate(row) if v > x]
        if not bigger:
            if _fits(rows, r, len(row), x):
                row.append(x)
                return (r + 1, len(row)), 1
            if not row:
                rows.pop()
                raise InsertionError("insertion stalled on an empty row")
            col = len(row) - 1
            bottom = max(i for i in range(len(rows)) if len(rows[i]) > col)
            if not rows[-1]:
                rows.pop()
            return (bottom + 1, col + 1), 0
        j = bigger[0]
        y = row[j]
        if _fits(rows, r, j, x):
            row[j] = x
        x = y
        r += 1


def hecke_insert(y: Tableau, x: int) -> InsertionResult:
    if x < 1:
        raise InsertionError("letters must be positive integers")
    bad = validate(y)
    if bad is not None:
        raise InsertionError(f"invalid tableau at {bad.cell}: {bad.reason}")
    rows = _rows(y)
    corner, alpha = _insert_rows(rows, x)
    return InsertionResult(_from_rows(rows), corner, alpha)


def _reverse_rows(rows: list, corner, alpha: int) -> int:
    r, c = corner[0] - 1, corner[1] - 1
    if r >= len(rows) or c >= len(rows[r]):
        raise InsertionError("not a corner")
    below = r + 1 < len(rows) and len(rows[r + 1]) > c
    if c + 1 < len(rows[r]) or below:
        raise InsertionError("not a corner")
    y = rows[r][c]
    if alpha == 1:
        rows[r].pop()
        if not rows[r]:
            rows.pop()
    elif alpha != 0:
        raise InsertionError("alpha must be 0 or 1")
    for rr in range(r - 1, -1, -1):
        row = rows[rr]
        smaller = [j for j, v in enumerate(row) if v < y]
        if not smaller:
            raise InsertionError("inconsistent triple")
        j = smaller[-1]
        x = row[j]
        if _fits(rows, rr, j, y):
            row[j] = y
        y = x
    return y


def reverse_hecke_insert(z: Tableau, corner, alpha: int):
    """Inverse of :func:`hecke_insert`: returns ``(Y, x)``."""
    rows = _rows(z)
    x = _reverse_rows(rows, tuple(corner), alpha)
    y = _from_rows(rows)
    if validate(y) is not None:
        raise InsertionError("inconsistent triple")
    return y, x


def insert_word(w: Sequence[int]) -> HeckePair:
    rows: list = []
    q: dict = {}
    for k, x in enumerate(w, 1):
        if x < 1:
            raise InsertionError("letters must be positive integers")
        corner, alpha = _insert_rows(rows, x)
        if alpha:
            q[corner] = [k]
        else:
            q[corner].append(k)
    return HeckePair(_from_rows(rows), SetValuedTableau(q))


def recover_word(pair: HeckePair, check: bool = True) -> tuple:
    """Reverse-insert in the order dictated by Q.  With ``check`` the result is
    re-inserted and compared, so pairs outside the image are rejected."""
    p, q = pair
    if p.shape != q.shape:
        raise InsertionError("unrecoverable pair")
    rows = _rows(p)
    sets = {cell: list(vals) for cell, vals in q.entries.items()}
    where = {v: cell for cell, vals in sets.items() for v in vals}
    n = len(where)
    if sorted(where) != list(range(1, n + 1)):
        raise InsertionError("unrecoverable pair")
    word = []
    try:
        for k in range(n, 0, -1):
            cell = where[k]
            vals = sets[cell]
            if vals[-1] != k:
                raise InsertionError("unrecoverable pair")
            vals.pop()
            alpha = 0 if vals else 1
            if alpha:
                del sets[cell]
            word.append(_reverse_rows(rows, cell, alpha))
    except InsertionError as exc:
        raise InsertionError("unrecoverable pair") from exc
    if rows:
        raise InsertionError("unrecoverable pair")
    word.reverse()
    w = tuple(word)
    if check and insert_word(w) != (p, q):
        raise InsertionError("unrecoverable pair")
    return w


def lis_lds_via_tableau(w: Sequence[int]) -> tuple:
    """(columns, rows) of the insertion tableau: the longest strictly
    increasing and strictly decreasing subsequence lengths."""
    p = insert_word(w).p
    return p.num_cols(), p.num_rows()
