from itertools import product

from hypothesis import given
from hypothesis import strategies as st

from oracles import lds_brute, lis_brute
from stackfill.hecke import insert_word
from stackfill.kknuth import (EquivBudget, closure, kknuth_equivalent, kknuth_neighbors, lds, lis,
                              restrict)
from stackfill.tableaux import reading_word

B = EquivBudget(8)


def test_each_relation():
    assert (3, 1, 2) in kknuth_neighbors((1, 3, 2), B)      # xzy = zxy
    assert (2, 3, 1) in kknuth_neighbors((2, 1, 3), B)      # yxz = yzx
    assert (2, 1, 2) in kknuth_neighbors((1, 2, 1), B)      # xyx = yxy
    assert (1,) in kknuth_neighbors((1, 1), B)              # xx = x
    assert (1, 1) in kknuth_neighbors((1,), B)


def test_no_move_when_pattern_absent():
    assert (2, 1, 3) not in kknuth_neighbors((1, 2, 3), B)
    assert kknuth_neighbors((1, 2, 3), EquivBudget(3)) == set()


def test_verdict_and_path():
    v = kknuth_equivalent((2, 1, 3), (2, 3, 1), B)
    assert v.equivalent and v.label == "equivalent"
    assert v.path[0][0] == (2, 1, 3) and v.path[-1] == ((2, 3, 1), "yxz=yzx")
    miss = kknuth_equivalent((1, 2), (2, 1), EquivBudget(4))
    assert not miss.equivalent and miss.label == "not-found-within-budget"


def test_closure_is_symmetric():
    c = closure((2, 1, 3), EquivBudget(5))
    assert all((2, 1, 3) in closure(u, EquivBudget(5)) for u in c)


def test_equivalent_to_reading_word_small():
    for n in range(1, 5):
        for w in product(range(1, 4), repeat=n):
            r = reading_word(insert_word(w).p)
            assert kknuth_equivalent(w, r, EquivBudget(max(n, len(r)) + 4)).equivalent


@given(st.lists(st.integers(1, 6), max_size=9))
def test_lis_lds(w):
    assert lis(w) == lis_brute(w) and lds(w) == lds_brute(w)


def test_restrict():
    assert restrict((3, 1, 4, 1, 5), 1, 3) == (3, 1, 1)
    assert restrict((3, 1), 4, 9) == ()
