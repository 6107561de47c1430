import pytest

from stackfill.linked import (LinkedPartition, LinkedPartitionError, all_linked_partitions,
                              border_str, cgp_bijection, comp1, comp2, cross, from_triangle_filling,
                              nest, our_bijection, standard_rep, to_triangle_filling,
                              vacillating_border)
from stackfill.polyomino import chain_stats
from stackfill.verify import load_fixture

FX = load_fixture("linked.json")
COUNTS = [1, 1, 2, 6, 24, 120, 720]


def test_parse_and_print():
    p = LinkedPartition.parse("1 2 3 5 6 | 2 4 7")
    assert p.n == 7 and str(p) == "1 2 3 5 6 | 2 4 7"
    assert len(p.blocks) == 2


def test_not_nearly_disjoint_rejected():
    with pytest.raises(LinkedPartitionError):
        LinkedPartition.parse("1 3 | 2 3")
    with pytest.raises(LinkedPartitionError):
        LinkedPartition.make(3, [[1, 4]])


def test_standard_representation():
    fx = FX["standard_rep"]
    p = LinkedPartition.make(fx["n"], fx["blocks"])
    assert standard_rep(p) == frozenset(map(tuple, fx["arcs"]))


def test_growth_map_example():
    fx = FX["growth"]
    p = LinkedPartition.make(fx["n"], fx["partition"])
    assert cross(p) == 2 and nest(p) == 2
    assert to_triangle_filling(p).ones == frozenset(map(tuple, fx["ones"]))
    assert cgp_bijection(p) == LinkedPartition.make(fx["n"], fx["image"])
    assert [(s.shape, s.marked_row) for s in vacillating_border(p)] == \
        [(tuple(s), m) for s, m in fx["border"]]
    assert border_str(vacillating_border(p)) == "0 0 1*1 1 21*2 21 21 11 11*2 11 11 1 1 0 0"


def test_witnesses():
    fx = FX["witnesses"]
    p = LinkedPartition.make(fx["n"], fx["L"])
    assert our_bijection(p) == LinkedPartition.make(fx["n"], fx["L1"])
    assert cgp_bijection(p) == LinkedPartition.make(fx["n"], fx["L2"])


def test_trivial_cases():
    p = LinkedPartition.make(4, [])
    assert our_bijection(p) == p == cgp_bijection(p)
    assert [s.shape for s in vacillating_border(LinkedPartition.make(1, []))] == [(), (), ()]
    assert from_triangle_filling(to_triangle_filling(p), 4) == p


@pytest.mark.parametrize("n", range(7))
def test_exhaustive(n):
    parts = list(all_linked_partitions(n))
    assert len(parts) == COUNTS[n] and len(set(parts)) == len(parts)
    ours = set()
    for p in parts:
        fl = to_triangle_filling(p)
        assert from_triangle_filling(fl, n) == p
        s = chain_stats(fl)
        assert (s.n, s.ne, s.se) == (len(standard_rep(p)), nest(p), cross(p))
        for fn in (our_bijection, cgp_bijection):
            q = fn(p)
            assert (cross(q), nest(q)) == (nest(p), cross(p))
            assert comp1(q) == comp1(p) and comp2(q) == comp2(p)
        # the two constructions agree while n is this small
        assert our_bijection(p) == cgp_bijection(p)
        ours.add(our_bijection(p))
        steps = vacillating_border(p)
        assert max(x.shape[0] if x.shape else 0 for x in steps) == nest(p)
        assert max(len(x.shape) for x in steps) == cross(p)
    assert len(ours) == len(parts)
