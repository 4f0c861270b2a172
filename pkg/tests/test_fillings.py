import pytest

from growthdiagrams.fillings import (ARBITRARY, PARTIAL_PERMUTATION, ZERO_ONE,
                                     ChainSpec, Filling, InstanceTooLarge,
                                     chain_spec, filling_class,
                                     filling_from_json, filling_to_json,
                                     greene_oracle, in_class, longest_chain,
                                     transpose_filling)
from growthdiagrams.shapes import FerrersShape, StackPolyomino


def make(rows, entries):
    return Filling(FerrersShape(rows), entries)


def test_filling_cleans_zeros():
    f = make((2, 2), {(1, 1): 0, (2, 2): 3})
    assert f.entries == {(2, 2): 3}
    assert f.entry(1, 1) == 0
    assert f.entry_sum == 3


def test_filling_validates_cells():
    with pytest.raises(ValueError):
        make((2, 1), {(2, 2): 1})
    with pytest.raises(ValueError):
        make((2, 2), {(1, 1): -1})


def test_filling_class():
    assert filling_class(make((2, 2), {(1, 1): 1, (2, 2): 1})) == PARTIAL_PERMUTATION
    assert filling_class(make((2, 2), {(1, 1): 1, (1, 2): 1})) == ZERO_ONE
    assert filling_class(make((2, 2), {(1, 1): 2})) == ARBITRARY
    assert in_class(make((2, 2), {}), PARTIAL_PERMUTATION)
    assert not in_class(make((2, 2), {(1, 1): 2}), ZERO_ONE)


def test_json_round_trip():
    f = make((3, 1), {(1, 1): 2, (3, 1): 1})
    assert filling_from_json(filling_to_json(f)) == f


def test_chain_spec_codes():
    assert chain_spec("NE").code == "NE"
    assert chain_spec("se").code == "se"
    assert chain_spec("NE").step_ok((1, 1), (1, 2))
    assert not chain_spec("ne").step_ok((1, 1), (1, 2))
    assert chain_spec("Se").step_ok((1, 2), (2, 2))
    assert not chain_spec("sE").step_ok((1, 2), (2, 2))
    with pytest.raises(ValueError):
        chain_spec("XY")


def test_longest_chain_basic():
    f = make((3, 3, 3), {(1, 1): 1, (2, 2): 1, (3, 3): 1, (3, 1): 1})
    assert longest_chain(f, chain_spec("ne")) == 3
    assert longest_chain(f, chain_spec("se")) == 2
    assert longest_chain(make((2, 2), {}), chain_spec("NE")) == 0


def test_longest_chain_entry_sum():
    f = make((2, 2), {(1, 1): 2, (2, 2): 3})
    assert longest_chain(f, chain_spec("NE", length_mode="entry-sum")) == 5


def test_rectangle_constraint():
    # the two cells form an se-chain whose bounding box leaves the shape
    f = make((2, 1), {(1, 1): 1})
    g = Filling(FerrersShape((2, 1)), {(2, 1): 1, (1, 1): 1})
    spec = chain_spec("NE", require_rectangle=True)
    f2 = make((3, 1), {(1, 1): 1, (3, 1): 1})
    assert longest_chain(f2, chain_spec("NE")) == 2
    assert longest_chain(f2, spec) == 2  # bottom row rectangle is inside
    f3 = make((2, 1), {(1, 1): 1})
    assert longest_chain(f3, spec) == 1
    se = chain_spec("se", require_rectangle=True)
    f4 = make((2, 1), {(1, 2): 0})
    diag = Filling(FerrersShape((2, 1)), {(1, 2): 1})
    # chain (1,2) -> (2,1) needs the full 2x2 box, which is not in the shape
    f5 = Filling(FerrersShape((2, 1)), {(1, 2): 1, (2, 1): 1})
    assert longest_chain(f5, chain_spec("se")) == 2
    assert longest_chain(f5, se) == 1


def test_chains_on_stack_polyomino():
    sp = StackPolyomino((1, 2, 1))
    f = Filling(sp, {(1, 1): 1, (3, 1): 1})
    spec = chain_spec("ne", require_rectangle=True)
    assert longest_chain(f, spec) == 1


def test_greene_oracle_matches_longest_chain_for_k1():
    f = make((3, 2, 1), {(1, 1): 1, (2, 2): 1, (3, 1): 1})
    for code in ("NE", "SE", "ne", "se"):
        spec = chain_spec(code)
        assert greene_oracle(f, spec, 1) == longest_chain(f, spec)


def test_greene_oracle_union_semantics():
    # 2x2 permutation matrix: one NE chain of length 2 needs both cells,
    # two chains cover everything
    f = make((2, 2), {(1, 2): 1, (2, 1): 1})
    ne = chain_spec("NE")
    assert greene_oracle(f, ne, 1) == 1
    assert greene_oracle(f, ne, 2) == 2


def test_greene_oracle_entry_multiplicity():
    # entry 2 may sit in two different chains
    f = make((2, 2), {(1, 1): 2, (2, 2): 1, (1, 2): 1})
    spec = chain_spec("ne", length_mode="entry-multiplicity")
    assert greene_oracle(f, spec, 1) == 2
    # the corner entry 2 may open a second chain of its own
    assert greene_oracle(f, spec, 2) == 3


def test_greene_oracle_budget():
    f = make((5, 5, 5, 5), {})
    with pytest.raises(InstanceTooLarge):
        greene_oracle(f, chain_spec("NE"), 1)


def test_transpose_filling():
    f = make((3, 1), {(3, 1): 2})
    assert transpose_filling(f).entries == {(1, 3): 2}
    assert transpose_filling(transpose_filling(f)) == f
