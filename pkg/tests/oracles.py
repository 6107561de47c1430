"""Independent brute-force reference implementations used by the tests."""
from itertools import combinations


def is_increasing_seq(seq):
    return all(a < b for a, b in zip(seq, seq[1:]))


def lis_brute(w):
    best = 0
    for k in range(len(w) + 1):
        for idx in combinations(range(len(w)), k):
            if is_increasing_seq([w[i] for i in idx]):
                best = k
    return best


def lds_brute(w):
    return lis_brute([-x for x in w])


def chain_brute(cells, ones, up):
    """Largest subset of ``ones`` that is an ne-chain (``up``) or se-chain and
    whose bounding rectangle lies in ``cells``."""
    pts = sorted(ones, key=lambda rc: rc[1])
    best = 0
    for k in range(1, len(pts) + 1):
        for sub in combinations(pts, k):
            cols = [c for _, c in sub]
            rows = [r for r, _ in sub]
            if len(set(cols)) != k:
                continue
            mono = is_increasing_seq(rows) if up else is_increasing_seq([-r for r in rows])
            if not mono:
                continue
            box = all((r, c) in cells for r in range(min(rows), max(rows) + 1)
                      for c in range(min(cols), max(cols) + 1))
            if box:
                best = k
    return best


def is_increasing_tableau(rows):
    for i, row in enumerate(rows):
        if not is_increasing_seq(row):
            return False
        if i and (len(row) > len(rows[i - 1]) or any(row[j] <= rows[i - 1][j] for j in range(len(row)))):
            return False
    return True


def count_increasing_tableaux(max_rows, max_cols, max_entry):
    """Count by filling a max_rows x max_cols grid with 0 (empty) or 1..max_entry
    and keeping grids whose nonempty part is an increasing straight-shape tableau."""
    from itertools import product
    n = 0
    for vals in product(range(max_entry + 1), repeat=max_rows * max_cols):
        rows = [list(vals[i * max_cols:(i + 1) * max_cols]) for i in range(max_rows)]
        ok = True
        trimmed = []
        for row in rows:
            k = 0
            while k < len(row) and row[k]:
                k += 1
            if any(row[k:]):
                ok = False
                break
            trimmed.append(row[:k])
        if not ok:
            continue
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        if any(not r for r in trimmed):
            continue
        if is_increasing_tableau(trimmed):
            n += 1
    return n
