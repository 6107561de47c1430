"""K-Knuth relations on words, a bounded equivalence search, restriction to an
interval and longest increasing/decreasing subsequences."""
from __future__ import annotations

from bisect import bisect_left
from typing import NamedTuple, Sequence


class EquivBudget(NamedTuple):
    max_len: int
    max_states: int = 200_000


class Verdict(NamedTuple):
    equivalent: bool
    path: tuple          # ((word, relation used to reach it), ...) when equivalent
    states: int
    budget: EquivBudget

    @property
    def label(self) -> str:
        return "equivalent" if self.equivalent else "not-found-within-budget"


def _moves(w: tuple, max_len: int):
    """Yield (relation, neighbour) for one application of a relation."""
    n = len(w)
    for i in range(n - 2):
        a, b, c = w[i:i + 3]
        pre, post = w[:i], w[i + 3:]
        # xzy <-> zxy with x < y < z
        if a < c < b or b < c < a:
            yield "xzy=zxy", pre + (b, a, c) + post
        # yxz <-> yzx with x < y < z
        if b < a < c or c < a < b:
            yield "yxz=yzx", pre + (a, c, b) + post
        if a == c and a != b:
            yield "xyx=yxy", pre + (b, a, b) + post
    for i in range(n - 1):
        if w[i] == w[i + 1]:
            yield "xx=x", w[:i] + w[i + 1:]
    if n + 1 <= max_len:
        for i in range(n):
            yield "x=xx", w[:i + 1] + w[i:]


def kknuth_neighbors(w: Sequence[int], budget: EquivBudget) -> set:
    w = tuple(w)
    return {v for _, v in _moves(w, budget.max_len)} - {w}


def kknuth_equivalent(w1: Sequence[int], w2: Sequence[int], budget: EquivBudget) -> Verdict:
    """Breadth-first closure from ``w1``.  Never claims inequivalence: a miss
    only means the target was not reached inside the budget."""
    w1, w2 = tuple(w1), tuple(w2)
    if w1 == w2:
        return Verdict(True, ((w1, None),), 1, budget)
    parent = {w1: None}
    frontier = [w1]
    while frontier and len(parent) < budget.max_states:
        nxt = []
        for w in frontier:
            for rel, v in _moves(w, budget.max_len):
                if v in parent:
                    continue
                parent[v] = (w, rel)
                if v == w2:
                    return Verdict(True, _path(parent, v), len(parent), budget)
                nxt.append(v)
        frontier = sorted(set(nxt), key=lambda u: (len(u), u))
    return Verdict(False, (), len(parent), budget)


def _path(parent: dict, v: tuple) -> tuple:
    out = []
    while parent[v] is not None:
        w, rel = parent[v]
        out.append((v, rel))
        v = w
    out.append((v, None))
    return tuple(reversed(out))


def closure(w: Sequence[int], budget: EquivBudget) -> set:
    """All words reachable from ``w`` inside the budget."""
    seen = {tuple(w)}
    frontier = [tuple(w)]
    while frontier and len(seen) < budget.max_states:
        nxt = []
        for u in frontier:
            for _, v in _moves(u, budget.max_len):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def restrict(w: Sequence[int], a: int, b: int) -> tuple:
    if a > b:
        raise ValueError("empty interval")
    return tuple(x for x in w if a <= x <= b)


def lis(w: Sequence[int]) -> int:
    """Longest strictly increasing subsequence (patience sorting)."""
    tails: list = []
    for x in w:
        k = bisect_left(tails, x)
        if k == len(tails):
            tails.append(x)
        else:
            tails[k] = x
    return len(tails)


def lds(w: Sequence[int]) -> int:
    return lis([-x for x in w])
