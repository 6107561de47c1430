import pytest

from stackfill.tableaux import (SetValuedTableau, Tableau, add_box, contains, inner_corners,
                                parse_word, partition, reading_word, standardize, transpose,
                                validate, validate_recording)


def test_partition_helpers():
    assert partition([3, 2, 1, 0, 0]) == (3, 2, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    assert transpose((3, 1)) == (2, 1, 1)
    assert add_box((2, 1), 2) == (2, 2)
    assert contains((3, 2), (2, 2)) and not contains((2, 2), (3,))
    assert sorted(inner_corners((3, 1))) == [(1, 3), (2, 1)]


def test_tableau_rows_and_skew():
    t = Tableau.from_rows([[None, 2, 3], [1, 3], [3]], inner=(1,))
    assert t.shape == (3, 2, 1)
    assert t.rows == [[None, 2, 3], [1, 3], [3]]
    assert validate(t) is None


def test_reading_word_bottom_row_first():
    p = Tableau.from_rows([[1, 2, 3], [2, 4], [3]])
    assert reading_word(p) == (3, 2, 4, 1, 2, 3)


def test_standardize_and_parse():
    assert standardize((5, 2, 9, 2)) == (2, 1, 3, 1)
    assert parse_word("3241") == (3, 2, 4, 1)
    assert parse_word("10, 2") == (10, 2)
    assert parse_word("") == ()


@pytest.mark.parametrize("rows", [[[1, 1]], [[1, 2], [1]], [[2, 3], [1, 4]]])
def test_validate_rejects_non_increasing(rows):
    assert validate(Tableau.from_rows(rows)) is not None


def test_set_valued_recording():
    q = SetValuedTableau.from_rows([[[1], [3, 4]], [[2, 5], [6]]])
    assert validate(q) is None and validate_recording(q) is None
    bad = SetValuedTableau.from_rows([[[1], [3, 4]], [[2, 5], [5]]])
    assert validate_recording(bad) is not None
