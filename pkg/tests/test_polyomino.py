import random

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from oracles import chain_brute
from stackfill.polyomino import (ALL, CountTable, Filling, GenPoly, Mode, Polyomino, Rect,
                                 ShapeError, chain_stats, chain_stats_moon, count, count_table,
                                 enumerate_fillings, gen_poly, merge, shape_from_json)
from stackfill.verify import load_fixture


def moons(max_cells, max_width=5):
    """Every moon polyomino with at most ``max_cells`` cells, up to translation."""
    spans = [(lo, hi) for lo in range(1, max_width + 1) for hi in range(lo, max_width + 1)]
    out = set()

    def grow(rows, cells):
        if rows:
            p = Polyomino.from_row_ranges(rows)
            if p.is_moon() and min(c for _, c in p.cells) == 1:
                out.add(p)
        for lo, hi in spans:
            if cells + hi - lo + 1 <= max_cells:
                if rows and not (lo <= rows[-1][1] and hi >= rows[-1][0]):
                    continue
                grow(rows + [(lo, hi)], cells + hi - lo + 1)

    grow([], 0)
    return sorted(out, key=lambda p: sorted(p.cells))


MOONS = moons(10)


def test_classification_of_examples():
    fx = load_fixture("moon_shapes.json")
    moon, stack = shape_from_json(fx["moon"]["shape"]), shape_from_json(fx["stack"]["shape"])
    assert len(moon) == fx["moon"]["cells"] and len(stack) == fx["stack"]["cells"]
    assert moon.is_moon() and not moon.is_stack()
    assert stack.is_stack() and not stack.is_ferrers_french()
    assert Polyomino.from_row_spec([3, 2, 2, 1]).is_ferrers_french()
    am = load_fixture("almost_moons.json")
    a1, a2 = shape_from_json(am["A1"]["shape"]), shape_from_json(am["A2"]["shape"])
    assert not a1.is_moon() and a1.exceptional_rows() == [am["A1"]["exceptional"]["row"]]
    assert not a2.is_moon() and a2.exceptional_cols() == [am["A2"]["exceptional"]["col"]]


def test_non_unimodal_rows_rejected():
    with pytest.raises(ShapeError):
        Polyomino.from_row_spec([3, 1, 3])


def test_maximal_rectangles_of_a_stack():
    rects = Polyomino.from_row_spec([3, 4, 5, 4, 2]).maximal_rectangles()
    assert Rect(1, 4, 1, 3) in rects and Rect(3, 3, 1, 5) in rects


def test_single_cell_and_square():
    assert gen_poly(Polyomino([(1, 1)])) == GenPoly({(0, 0): 1, (1, 1): 1})
    assert gen_poly(Polyomino.from_row_spec([2, 2])) == GenPoly({(0, 0): 1, (1, 1): 6, (1, 2): 1, (2, 1): 1})


def test_moon_enumeration_sanity():
    assert len(MOONS) > 500
    assert all(p.is_moon() for p in MOONS)


def test_moon_shortcut_equals_generic():
    for p in MOONS:
        rects = p.maximal_rectangles()
        for f in enumerate_fillings(p):
            assert chain_stats_moon(f, rects) == chain_stats(f)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_chain_stats_against_brute_force(seed):
    rng = random.Random(seed)
    cells = {(r, c) for r in range(1, 6) for c in range(1, 7) if rng.random() < 0.8}
    cells |= {(1, 1)}
    shape = Polyomino(cells)
    ones = []
    for c, rows in shape.cols.items():
        if rng.random() < 0.8:
            ones.append((rng.choice(sorted(rows)), c))
    f = Filling.make(shape, ones)
    s = chain_stats(f)
    assert (s.ne, s.se) == (chain_brute(shape.cells, f.ones, True), chain_brute(shape.cells, f.ones, False))


def test_reflection_swaps_ne_and_se():
    for p in MOONS[::7]:
        for f in enumerate_fillings(p):
            a, b = chain_stats(f), chain_stats(f.mirror_rows())
            assert (a.ne, a.se) == (b.se, b.ne)


@pytest.mark.parametrize("rows", [[2, 3, 1], [1, 3, 3, 2], [2, 2, 2]])
def test_shard_merge_matches_single_run(rows):
    shape = Polyomino.from_row_spec(rows)
    whole = count_table(shape)
    for shards in (2, 3, 5, 11):
        parts = [count_table(shape, ALL, shards, s) for s in range(shards)]
        assert merge(parts) == whole and isinstance(merge(parts), CountTable)


def test_modes():
    shape = Polyomino.from_row_spec([2, 2])
    assert sum(1 for _ in enumerate_fillings(shape, Mode.parse("n=2"))) == 4
    assert sum(1 for _ in enumerate_fillings(shape, Mode.parse("cover"))) == 2
    assert sum(1 for _ in enumerate_fillings(shape, Mode.parse("rowsums=1,1"))) == 2
    assert str(Mode.parse("rowsums=1,1")) == "rowsums=1,1"
    with pytest.raises(ValueError):
        Mode.parse("sometimes")


def test_fixed_row_sums_example():
    fx = load_fixture("row_sums.json")
    shape = shape_from_json(fx["shape"])
    mode = Mode("rowsums", fx["n"], tuple(fx["row_sums"]))
    for e in fx["expect"]:
        assert count(shape, fx["n"], e["ne"], e["se"], mode) == e["count"]


def test_filling_validation():
    shape = Polyomino.from_row_spec([2, 2])
    with pytest.raises(ShapeError):
        Filling.make(shape, [(1, 1), (2, 1)])
    with pytest.raises(ShapeError):
        Filling.make(shape, [(3, 1)])


def test_gen_poly_json_roundtrip():
    g = gen_poly(Polyomino.from_row_spec([3, 2]))
    assert GenPoly.from_json(g.to_json()) == g and g.is_symmetric()
