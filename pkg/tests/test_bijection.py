import pytest

from stackfill.bijection import (PhiError, RectangleFilling, f, f_with_certificate,
                                 move_bottom_row_target, move_row_replay, phi, phi_inverse,
                                 to_ferrers)
from stackfill.polyomino import Filling, Polyomino, ShapeError, chain_stats, enumerate_fillings, filling_from_json
from stackfill.verify import (check_multiset, load_fixture, rectangle_fillings, stack_orderings)
from stackfill.kknuth import lds, lis


def _word(t):
    return [r for r, _ in sorted(t.ones, key=lambda rc: rc[1])]


def test_phi_is_a_bijection_on_small_rectangles():
    for h in range(1, 4):
        for w in range(1, 5):
            fills = list(rectangle_fillings(h, w))
            images = {phi(t) for t in fills}
            assert len(images) == len(fills)
            for t in fills:
                u = phi(t)
                assert phi_inverse(u) == t
                assert (lis(_word(u)), lds(_word(u))) == (lis(_word(t)), lds(_word(t)))


def test_phi_rotates_an_empty_bottom_row():
    t = RectangleFilling.make(3, 2, [(2, 1), (3, 2)])
    assert phi(t).ones == frozenset({(1, 1), (2, 2)})


def test_phi_output_has_empty_top_row_iff_input_bottom_row_empty():
    for t in rectangle_fillings(3, 3):
        assert (not t.row_used(1)) == (not phi(t).row_used(3))


def test_worked_bottom_row_move():
    fx = load_fixture("bottom_row_move.json")
    before, after = filling_from_json(fx["before"]), filling_from_json(fx["after"])
    assert len(before.shape) == fx["before"]["cells"]
    out, cert = f_with_certificate(before)
    assert out == after
    assert tuple(cert.rect)[:2] == tuple(fx["rectangle"]["rows"])
    assert chain_stats(out) == chain_stats(before)


def test_move_chain_to_ferrers():
    shape = Polyomino.from_row_spec([3, 4, 5, 4, 2])
    assert move_bottom_row_target(shape).target.row_lengths() == [4, 5, 4, 3, 2]
    out, chain = to_ferrers(Filling.make(shape, [(1, 1), (5, 2), (3, 5)]))
    assert [c.target.row_lengths() for c in chain] == [[4, 5, 4, 3, 2], [5, 4, 4, 3, 2]]
    assert out.shape.is_ferrers_french()


@pytest.mark.parametrize("name", ["row_move_stack.json", "row_move_moon.json"])
def test_arbitrary_row_replay_breaks_ne(name):
    fx = load_fixture(name)
    before, after = filling_from_json(fx["before"]), filling_from_json(fx["after"])
    assert move_row_replay(before, fx["moved_row"]) == after
    assert chain_stats(before).ne == 5 and chain_stats(after).ne == 4


def test_f_bijective_on_small_stacks():
    for parts in ((3, 2, 1), (4, 2, 2), (3, 3, 1, 1), (2, 2, 1, 1, 1)):
        res = check_multiset(parts)
        assert res.tables_agree and res.symmetric and not res.move_failures


def test_stack_orderings_are_unimodal_and_complete():
    from itertools import permutations
    from stackfill.polyomino import _unimodal
    parts = (3, 2, 2, 1)
    want = sorted({p for p in permutations(parts) if _unimodal(p)})
    assert stack_orderings(parts) == want


def test_f_preserves_empty_columns():
    shape = Polyomino.from_row_spec([2, 3, 1])
    for fill in enumerate_fillings(shape):
        assert f(fill).empty_columns() == fill.empty_columns()


def test_errors():
    with pytest.raises(ShapeError):
        move_bottom_row_target(Polyomino.from_row_spec([3, 2]))
    with pytest.raises(ShapeError):
        move_bottom_row_target(Polyomino.from_row_ranges([(2, 3), (1, 3)]))
    with pytest.raises(ShapeError):
        RectangleFilling.make(2, 2, [(1, 1), (2, 1)])
    assert issubclass(PhiError, RuntimeError)
