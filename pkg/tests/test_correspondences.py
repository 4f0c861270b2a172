"""Set partitions, matchings and their tableau encodings."""

import pytest

from growthdiagrams.correspondences import (Matching, PartialTableau,
                                            SetPartition, all_matchings,
                                            all_set_partitions,
                                            conjugate_matching,
                                            conjugate_set_partition,
                                            conjugate_set_partition_enhanced,
                                            cross, enhanced_cross,
                                            enhanced_nest,
                                            enhanced_representation,
                                            filling_to_setpartition,
                                            hesitating_to_setpartition,
                                            is_hesitating, is_oscillating,
                                            is_vacillating,
                                            matching_to_oscillating,
                                            min_max_blocks,
                                            min_max_from_vacillating, nest,
                                            oscillating_to_matching,
                                            pair_to_vacillating,
                                            parse_matching,
                                            parse_set_partition,
                                            setpartition_to_filling,
                                            setpartition_to_hesitating,
                                            setpartition_to_vacillating,
                                            standard_representation,
                                            vacillating_to_setpartition)
from growthdiagrams.partitions import parse_partition


def seq_of(t):
    from growthdiagrams.partitions import to_compact
    return ",".join(to_compact(p) for p in t.seq)


def expect(text):
    return tuple(parse_partition(s) for s in text.split(","))


def test_parse_and_str():
    p = parse_set_partition("1 4 5 7 | 2 6 | 3")
    assert p.n == 7
    assert str(p) == "1 4 5 7 | 2 6 | 3"
    with pytest.raises(ValueError):
        SetPartition(3, ((1, 2),))


def test_representations():
    p = parse_set_partition("1 4 5 7 | 2 6 | 3")
    assert standard_representation(p) == [(1, 4), (2, 6), (4, 5), (5, 7)]
    assert enhanced_representation(p) == [(1, 4), (2, 6), (3, 3), (4, 5),
                                          (5, 7)]


def test_cross_nest_small():
    assert cross(parse_set_partition("1 3 | 2 4")) == 2
    assert nest(parse_set_partition("1 3 | 2 4")) == 1
    assert cross(parse_set_partition("1 4 | 2 3")) == 1
    assert nest(parse_set_partition("1 4 | 2 3")) == 2


def test_min_max_blocks():
    p = parse_set_partition("1 4 5 7 | 2 6 | 3")
    mins, maxes = min_max_blocks(p)
    assert mins == {1, 2, 3}
    assert maxes == {3, 6, 7}


def test_setpartition_filling_round_trip():
    for p in all_set_partitions(5):
        f = setpartition_to_filling(p)
        assert filling_to_setpartition(f, 5) == p


def test_vacillating_fixture():
    p = parse_set_partition("1 4 5 7 | 2 6 | 3")
    t = setpartition_to_vacillating(p)
    assert t.seq == expect("e,e,1,1,11,11,11,1,2,1,11,1,1,e,e")
    assert is_vacillating(t, 7)
    assert vacillating_to_setpartition(t) == p


def test_vacillating_round_trip():
    for n in range(5):
        seen = set()
        for p in all_set_partitions(n):
            t = setpartition_to_vacillating(p)
            assert is_vacillating(t, n)
            assert len(t.seq) == 2 * n + 1
            seen.add(t.seq)
            assert vacillating_to_setpartition(t, n) == p
        # the encoding is injective
        assert len(seen) == len(list(all_set_partitions(n)))


def test_hesitating_fixture():
    p = parse_set_partition("1 4 5 7 | 2 6 | 3")
    t = setpartition_to_hesitating(p)
    assert t.seq == expect("e,e,1,1,11,21,11,21,2,21,11,1,1,e,e")
    assert is_hesitating(t, 7)
    assert hesitating_to_setpartition(t) == p


def test_hesitating_round_trip():
    for n in range(5):
        for p in all_set_partitions(n):
            t = setpartition_to_hesitating(p)
            assert is_hesitating(t, n)
            assert hesitating_to_setpartition(t, n) == p


def test_oscillating_fixture():
    m = parse_matching("1-4 2-6 3-5")
    t = matching_to_oscillating(m)
    assert t.seq == expect("e,1,11,21,2,1,e")
    assert is_oscillating(t, 6)
    assert oscillating_to_matching(t) == m


def test_oscillating_round_trip():
    for n in range(4):
        for m in all_matchings(n):
            t = matching_to_oscillating(m)
            assert is_oscillating(t, 2 * n)
            assert oscillating_to_matching(t) == m


def test_pair_to_vacillating_fixture():
    p = parse_set_partition("1 | 2 6 | 3 | 4 7 | 5")
    t = PartialTableau(((1, 7), (5,)))
    vac = pair_to_vacillating(p, t)
    assert vac.seq == expect("e,e,1,1,2,2,2,2,21,21,211,21,21,11,21")


def test_pair_to_vacillating_rejects_non_maxima():
    p = parse_set_partition("1 2 | 3")
    with pytest.raises(ValueError):
        pair_to_vacillating(p, PartialTableau(((1,),)))


def test_partial_tableau_validation():
    with pytest.raises(ValueError):
        PartialTableau(((2, 1),))
    with pytest.raises(ValueError):
        PartialTableau(((1, 3), (5, 2)))
    assert PartialTableau(((1, 7), (5,))).shape_at(5) == (1, 1)


def test_conjugation_swaps_cross_and_nest():
    for p in all_set_partitions(4):
        q = conjugate_set_partition(p)
        assert (cross(q), nest(q)) == (nest(p), cross(p))
        assert conjugate_set_partition(q) == p
        # mins and maxes are preserved
        assert min_max_blocks(q) == min_max_blocks(p)


def test_min_max_from_vacillating():
    for p in all_set_partitions(4):
        t = setpartition_to_vacillating(p)
        assert min_max_from_vacillating(t, p.n) == min_max_blocks(p)


def test_enhanced_conjugation_swaps_cross_and_nest():
    for p in all_set_partitions(4):
        q = conjugate_set_partition_enhanced(p)
        assert (enhanced_cross(q), enhanced_nest(q)) == (
            enhanced_nest(p), enhanced_cross(p))
        assert conjugate_set_partition_enhanced(q) == p


def test_swap_chain_statistics_standard():
    from growthdiagrams.enumeration import all_fillings, all_shapes
    from growthdiagrams.correspondences import swap_chain_statistics
    from growthdiagrams.fillings import chain_spec, longest_chain
    ne, se = chain_spec("NE"), chain_spec("SE", require_rectangle=True)
    for shape in all_shapes(5):
        for _, f in all_fillings(shape, "partial-permutation"):
            g = swap_chain_statistics(f)
            assert g.shape == f.shape
            assert longest_chain(g, ne) == longest_chain(f, se)
            assert longest_chain(g, se) == longest_chain(f, ne)
            assert swap_chain_statistics(g) == f


def test_swap_chain_statistics_routes_invert():
    from growthdiagrams.correspondences import swap_chain_statistics
    from growthdiagrams.fillings import Filling
    from growthdiagrams.shapes import FerrersShape
    f = Filling(FerrersShape((3, 2)), {(1, 1): 2, (2, 2): 1, (3, 1): 1})
    g = swap_chain_statistics(f, "nes1")
    assert swap_chain_statistics(g, "nes1-inverse") == f
    z = Filling(FerrersShape((3, 2)), {(1, 1): 1, (1, 2): 1, (2, 1): 1})
    w = swap_chain_statistics(z, "nes2")
    assert swap_chain_statistics(w, "nes2-inverse") == z


def test_conjugate_matching():
    for m in all_matchings(3):
        c = conjugate_matching(m)
        pm, pc = m.as_set_partition(), c.as_set_partition()
        assert (cross(pc), nest(pc)) == (nest(pm), cross(pm))
        assert conjugate_matching(c) == m
