"""The rectangle map phi, the filling map f that moves the bottom row of a stack
polyomino up, and the chain of such moves ending at a Ferrers shape."""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .hecke import HeckePair, InsertionError, insert_word, recover_word
from .kjdt import JdtError, inverse_prime_transform, prime_transform
from .polyomino import Filling, Polyomino, Rect, ShapeError, _unimodal


class PhiError(RuntimeError):
    pass


class RectangleFilling(NamedTuple):
    height: int
    width: int
    ones: frozenset   # (row, col), row 1 at the bottom

    @classmethod
    def make(cls, height: int, width: int, ones: Iterable = ()) -> "RectangleFilling":
        ones = frozenset((int(r), int(c)) for r, c in ones)
        for r, c in ones:
            if not (1 <= r <= height and 1 <= c <= width):
                raise ShapeError(f"one at {(r, c)} outside a {height}x{width} rectangle")
        cols = [c for _, c in ones]
        if len(set(cols)) != len(cols):
            raise ShapeError("more than one 1 in a column")
        return cls(height, width, ones)

    def row_used(self, r: int) -> bool:
        return any(rr == r for rr, _ in self.ones)


def _compress(t: RectangleFilling):
    """Word of the filling with empty rows and columns dropped; also the
    list of nonempty rows (bottom first)."""
    rows = sorted({r for r, _ in t.ones})
    rank = {r: i for i, r in enumerate(rows, 1)}
    word = tuple(rank[r] for r, _ in sorted(t.ones, key=lambda rc: rc[1]))
    return word, rows


def _expand(t: RectangleFilling, word: tuple, rows: list) -> frozenset:
    cols = sorted(c for _, c in t.ones)
    if len(word) != len(cols) or set(word) != set(range(1, len(rows) + 1)):
        raise PhiError("phi inconsistency")
    return frozenset((rows[x - 1], c) for x, c in zip(word, cols))


def phi(t: RectangleFilling) -> RectangleFilling:
    """Rectangle map.  An empty bottom row is rotated to the top; otherwise the
    word is run through (P, Q) -> (P', Q) and empty rows a move to a - 1."""
    if not t.row_used(1):
        return t._replace(ones=frozenset((r - 1 if r > 1 else t.height, c) for r, c in t.ones))
    word, rows = _compress(t)
    empty = [a for a in range(1, t.height + 1) if a not in rows]
    out_rows = [r for r in range(1, t.height + 1) if r not in {a - 1 for a in empty}]
    try:
        p, q = insert_word(word)
        w2 = recover_word(HeckePair(prime_transform(p), q))
    except (InsertionError, JdtError) as exc:
        raise PhiError("phi inconsistency") from exc
    return t._replace(ones=_expand(t, w2, out_rows))


def phi_inverse(t: RectangleFilling) -> RectangleFilling:
    if not t.row_used(t.height):
        return t._replace(ones=frozenset((r + 1 if r < t.height else 1, c) for r, c in t.ones))
    word, rows = _compress(t)
    empty = [e for e in range(1, t.height + 1) if e not in rows]
    out_rows = [r for r in range(1, t.height + 1) if r not in {e + 1 for e in empty}]
    try:
        p, q = insert_word(word)
        w2 = recover_word(HeckePair(inverse_prime_transform(p), q))
    except (InsertionError, JdtError) as exc:
        raise PhiError("phi inconsistency") from exc
    return t._replace(ones=_expand(t, w2, out_rows))


# -- moving rows ----------------------------------------------------------------

class MoveCertificate(NamedTuple):
    source: Polyomino
    target: Polyomino
    moved_row_from: int
    moved_row_to: int
    rect: Rect            # R in the source; R' in the target has the same cells


def _rect_above(shape: Polyomino, row: int) -> Rect:
    """Tallest rectangle whose bottom row is all of ``row``."""
    cols = shape.rows[row]
    lo, hi = min(cols), max(cols)
    top = row
    while top + 1 in shape.rows and cols <= shape.rows[top + 1]:
        top += 1
    return Rect(row, top, lo, hi)


def _move_row(shape: Polyomino, rect: Rect) -> Polyomino:
    """Take the bottom row of ``rect`` out and put it back on top of ``rect``;
    rows in between drop by one."""
    r0, r1 = rect.row_lo, rect.row_hi
    cells = set()
    for r, c in shape.cells:
        if r == r0:
            cells.add((r1, c))
        elif r0 < r <= r1:
            cells.add((r - 1, c))
        else:
            cells.add((r, c))
    return Polyomino(cells)


def move_bottom_row_target(m: Polyomino) -> MoveCertificate:
    if not m.is_stack():
        raise ShapeError("not a stack polyomino")
    if m.is_ferrers_french():
        raise ShapeError("nothing to move")
    lengths = m.row_lengths()
    bottom, rest = lengths[0], lengths[1:]
    pos = max(p for p in range(len(rest) + 1) if _unimodal(rest[:p] + [bottom] + rest[p:]))
    rect = _rect_above(m, 1)
    if rect.row_hi != pos + 1:
        raise ShapeError("highest reinsertion is not the top of the rectangle")
    target = Polyomino.from_row_spec(rest[:pos] + [bottom] + rest[pos:])
    if _move_row(m, rect) != target:
        raise ShapeError("row move geometry mismatch")
    return MoveCertificate(m, target, 1, pos + 1, rect)


def _apply(fill: Filling, cert: MoveCertificate) -> Filling:
    rect = cert.rect
    r0, r1, c0, _ = rect
    inside = RectangleFilling.make(rect.height, rect.width,
                                   ((r - r0 + 1, c - c0 + 1) for r, c in fill.ones if rect.contains((r, c))))
    moved = phi(inside)
    ones = {(r + r0 - 1, c + c0 - 1) for r, c in moved.ones}
    for r, c in fill.ones:
        if rect.contains((r, c)):
            continue
        ones.add((r - 1, c) if r0 < r <= r1 else (r, c))
    return Filling.make(cert.target, ones)


def f(fill: Filling) -> Filling:
    """Move the bottom row up as far as possible, transforming the filling of
    the maximal rectangle through it with :func:`phi`."""
    return _apply(fill, move_bottom_row_target(fill.shape))


def f_with_certificate(fill: Filling):
    cert = move_bottom_row_target(fill.shape)
    return _apply(fill, cert), cert


def to_ferrers(fill: Filling):
    chain = []
    while not fill.shape.is_ferrers_french():
        fill, cert = f_with_certificate(fill)
        chain.append(cert)
    return fill, chain


def move_row_replay(fill: Filling, row: int) -> Filling:
    """Apply the same construction to an arbitrary row: move ``row`` to the top
    of the tallest rectangle sitting on it and map that rectangle with phi.
    This does not preserve the chain statistics in general; it is kept to
    replay the known counterexamples."""
    rect = _rect_above(fill.shape, row)
    target = _move_row(fill.shape, rect)
    return _apply(fill, MoveCertificate(fill.shape, target, row, rect.row_hi, rect))
