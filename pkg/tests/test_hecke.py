from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from oracles import count_increasing_tableaux, lds_brute, lis_brute
from stackfill.hecke import (HeckePair, InsertionError, hecke_insert, insert_word,
                             lis_lds_via_tableau, recover_word, reverse_hecke_insert)
from stackfill.tableaux import SetValuedTableau, Tableau, validate, validate_recording
from stackfill.verify import increasing_tableaux, load_fixture

FX = load_fixture("tableaux.json")
words = st.lists(st.integers(1, 6), max_size=12).map(tuple)


@pytest.mark.parametrize("case", FX["insertion"]["cases"], ids=lambda c: f"x={c['x']}")
def test_worked_insertions(case):
    y = Tableau.from_rows(FX["insertion"]["y"])
    z, corner, alpha = hecke_insert(y, case["x"])
    assert z == Tableau.from_rows(case["z"])
    assert corner == tuple(case["corner"]) and alpha == case["alpha"]
    assert reverse_hecke_insert(z, corner, alpha) == (y, case["x"])


@pytest.mark.parametrize("case", FX["words"], ids=lambda c: "".join(map(str, c["word"])))
def test_worked_words(case):
    pair = insert_word(case["word"])
    assert pair == HeckePair(Tableau.from_rows(case["p"]), SetValuedTableau.from_rows(case["q"]))


def test_empty_word():
    p, q = insert_word(())
    assert p.shape == () and recover_word((p, q)) == ()


def test_tableau_generator_matches_grid_oracle():
    for r, c in ((2, 2), (2, 3), (3, 2)):
        assert sum(1 for _ in increasing_tableaux(r, c, 4)) == count_increasing_tableaux(r, c, 4)


def test_insert_reverse_exhaustive_small_box():
    for y in increasing_tableaux(3, 3, 4):
        for x in range(1, 5):
            z, corner, alpha = hecke_insert(y, x)
            assert validate(z) is None
            assert len(z) == len(y) + alpha
            assert reverse_hecke_insert(z, corner, alpha) == (y, x)


@given(words)
def test_word_roundtrip(w):
    pair = insert_word(w)
    assert validate(pair.p) is None and validate_recording(pair.q) is None
    assert recover_word(pair) == w


@settings(max_examples=200)
@given(st.lists(st.integers(1, 5), max_size=8))
def test_lis_lds_against_brute_force(w):
    assert lis_lds_via_tableau(w) == (lis_brute(w), lds_brute(w))


def test_rejects_bad_letters_and_pairs():
    with pytest.raises(InsertionError):
        insert_word((1, 0))
    p, q = insert_word((2, 1))
    with pytest.raises(InsertionError):
        recover_word(HeckePair(p, SetValuedTableau.from_rows([[[2]], [[1]]])))
    with pytest.raises(InsertionError):
        hecke_insert(Tableau.from_rows([[2, 1]]), 1)
