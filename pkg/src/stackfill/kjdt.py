"""K-theoretic jeu de taquin on increasing skew tableaux, and the corner
rotation P -> P' used by the rectangle map."""
from __future__ import annotations

from typing import Iterable

from .tableaux import Tableau, part, partition, validate


class JdtError(ValueError):
    pass


def _is_inner_corner(inner, cell) -> bool:
    r, c = cell
    return part(inner, r) == c and c > 0 and part(inner, r + 1) < c


def _is_outer_corner(outer, cell) -> bool:
    r, c = cell
    return part(outer, r) == c - 1 and (r == 1 or part(outer, r - 1) >= c)


def _slide(entries: dict, holes: set, values: Iterable[int], forward: bool) -> set:
    """Run the staged swaps.  In each stage every hole next to a copy of the
    current value and every copy next to a hole trade places simultaneously."""
    for v in values:
        nbrs = ((1, 0), (0, 1)) if forward else ((-1, 0), (0, -1))
        copies = {cell for cell, x in entries.items() if x == v}
        if not copies:
            continue
        moving = {h for h in holes
                  if any((h[0] + dr, h[1] + dc) in copies for dr, dc in nbrs)}
        freed = {cell for cell in copies
                 if any((cell[0] - dr, cell[1] - dc) in holes for dr, dc in nbrs)}
        for cell in freed:
            del entries[cell]
        for h in moving:
            entries[h] = v
        holes = (holes - moving) | freed
    return holes


def jdt(t: Tableau, corners: Iterable) -> Tableau:
    """Slide the holes in ``corners`` (inner corners of the inner shape) through
    values 1, 2, ... until they leave the tableau."""
    corners = {tuple(c) for c in corners}
    for cell in corners:
        if not _is_inner_corner(t.inner, cell):
            raise JdtError(f"{cell} is not an inner corner of {t.inner}")
    if not corners:
        return t
    entries = dict(t.entries)
    _slide(entries, corners, sorted(t.values()), forward=True)
    inner = list(t.inner)
    for r, _ in corners:
        inner[r - 1] -= 1
    out = Tableau(entries, partition(inner))
    if validate(out) is not None:
        raise JdtError("jeu de taquin produced an invalid tableau")
    return out


def rev_jdt(t: Tableau, corners: Iterable) -> Tableau:
    """Slide holes placed at outer corners backwards through values max, max-1, ..."""
    corners = {tuple(c) for c in corners}
    for cell in corners:
        if not _is_outer_corner(t.outer, cell):
            raise JdtError(f"{cell} is not an outer corner of {t.outer}")
    if not corners:
        return t
    entries = dict(t.entries)
    holes = _slide(entries, corners, sorted(t.values(), reverse=True), forward=False)
    inner = list(t.inner) + [0] * len(t.outer)
    for r, c in holes:
        inner[r - 1] = max(inner[r - 1], c)
    out = Tableau(entries, partition(inner))
    if validate(out) is not None:
        raise JdtError("reverse jeu de taquin produced an invalid tableau")
    return out


def prime_transform(p: Tableau) -> Tableau:
    """Empty the top-left box, slide the hole out through 2, 3, ..., lower every
    entry by one and write the former maximum into the vacated boxes."""
    if p.inner or not p.entries or p.entries.get((1, 1)) != 1:
        raise JdtError("no letter 1")
    m = p.max_entry()
    entries = {cell: v for cell, v in p.entries.items() if cell != (1, 1)}
    holes = _slide(entries, {(1, 1)}, range(2, m + 1), forward=True)
    out = {cell: v - 1 for cell, v in entries.items()}
    out.update({h: m for h in holes})
    result = Tableau(out)
    if result.shape != p.shape or validate(result) is not None:
        raise JdtError("prime transform broke the tableau")
    return result


def inverse_prime_transform(q: Tableau) -> Tableau:
    """Inverse of :func:`prime_transform`."""
    if q.inner or not q.entries:
        raise JdtError("empty tableau")
    m = q.max_entry()
    holes = {cell for cell, v in q.entries.items() if v == m}
    entries = {cell: v for cell, v in q.entries.items() if v != m}
    holes = _slide(entries, holes, range(m - 1, 0, -1), forward=False)
    if holes != {(1, 1)}:
        raise JdtError("holes did not collect in the top-left box")
    out = {cell: v + 1 for cell, v in entries.items()}
    out[(1, 1)] = 1
    result = Tableau(out)
    if result.shape != q.shape or validate(result) is not None:
        raise JdtError("inverse prime transform broke the tableau")
    return result
