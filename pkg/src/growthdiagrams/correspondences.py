"""Bijections between set partitions / matchings and tableau sequences,
and the chain-statistic swapping maps built from growth diagrams.

Set partitions of {1, ..., n} are encoded as fillings of the triangular
shape with n-1 cells in the bottom row: a pair (i, j) of the standard
representation (i < j, consecutive elements of a block) puts a cross in
column i and in the j-th row counted from above, i.e. internal row
n + 1 - j.  Crossings of the partition then become strictly down-right
chains of the filling and nestings become up-right chains.
"""

from dataclasses import dataclass
from itertools import combinations

from .fillings import Filling
from .growth import (GrowthTableau, grid_from_word, growth_tableau,
                     label_diagram, border_tableau, reconstruct)
from .partitions import contains, make_partition
from .shapes import FerrersShape, staircase

EMPTY = ()


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple  # tuple of sorted tuples, sorted by minimum

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks),
                              key=lambda b: b[0]))
        seen = [x for b in blocks for x in b]
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {blocks} do not partition 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    def __str__(self) -> str:
        return " | ".join(" ".join(str(x) for x in b) for b in self.blocks)


def parse_set_partition(text: str, n: int | None = None) -> SetPartition:
    blocks = tuple(tuple(int(x) for x in part.split()) for part in text.split("|"))
    if n is None:
        n = max(x for b in blocks for x in b)
    return SetPartition(n, blocks)


def all_set_partitions(n: int):
    """All set partitions of {1..n}, by recursive block insertion."""
    if n == 0:
        yield SetPartition(0, ())
        return
    for p in all_set_partitions(n - 1):
        yield SetPartition(n, p.blocks + ((n,),))
        for i in range(len(p.blocks)):
            blocks = list(p.blocks)
            blocks[i] = blocks[i] + (n,)
            yield SetPartition(n, tuple(blocks))


def standard_representation(p: SetPartition):
    """Pairs of consecutive elements within blocks."""
    return sorted((b[i], b[i + 1]) for b in p.blocks for i in range(len(b) - 1))


def enhanced_representation(p: SetPartition):
    """The standard representation plus (i, i) for every singleton block."""
    rep = standard_representation(p)
    rep.extend((b[0], b[0]) for b in p.blocks if len(b) == 1)
    return sorted(rep)


def _max_k(pairs, kind: str, enhanced: bool) -> int:
    """Largest k with a k-crossing resp. k-nesting among the given pairs."""
    best = 0
    for k in range(1, len(pairs) + 1):
        found = False
        for combo in combinations(sorted(pairs), k):
            i_s = [i for i, _ in combo]
            j_s = [j for _, j in combo]
            if any(a >= b for a, b in zip(i_s, i_s[1:])):
                continue
            if kind == "crossing":
                ok = all(a < b for a, b in zip(j_s, j_s[1:]))
                sep = i_s[-1] <= j_s[0] if enhanced else i_s[-1] < j_s[0]
            else:
                ok = all(a > b for a, b in zip(j_s, j_s[1:]))
                sep = i_s[-1] <= j_s[-1] if enhanced else i_s[-1] < j_s[-1]
            if ok and sep:
                found = True
                break
        if found:
            best = k
        else:
            break
    return best


def cross(p: SetPartition) -> int:
    return _max_k(standard_representation(p), "crossing", False)


def nest(p: SetPartition) -> int:
    return _max_k(standard_representation(p), "nesting", False)


def enhanced_cross(p: SetPartition) -> int:
    return _max_k(enhanced_representation(p), "crossing", True)


def enhanced_nest(p: SetPartition) -> int:
    return _max_k(enhanced_representation(p), "nesting", True)


def min_max_blocks(p: SetPartition):
    """The sets of block minima and block maxima."""
    return (frozenset(b[0] for b in p.blocks), frozenset(b[-1] for b in p.blocks))


# ---------------------------------------------------------------------------
# vacillating tableaux

def setpartition_to_filling(p: SetPartition) -> Filling:
    entries = {}
    for i, j in standard_representation(p):
        entries[(i, p.n + 1 - j)] = 1
    return Filling(staircase(p.n), entries)


def filling_to_setpartition(f: Filling, n: int) -> SetPartition:
    pairs = [(c, n + 1 - r) for (c, r) in f.entries]
    return _partition_from_pairs(n, pairs)


def _partition_from_pairs(n: int, pairs) -> SetPartition:
    succ = {}
    for i, j in pairs:
        if i == j:
            continue
        if i in succ:
            raise ValueError(f"element {i} linked twice")
        succ[i] = j
    starts = set(range(1, n + 1)) - set(succ.values())
    blocks = []
    for s in sorted(starts):
        block = [s]
        while block[-1] in succ:
            block.append(succ[block[-1]])
        blocks.append(tuple(block))
    return SetPartition(n, tuple(blocks))


def _staircase_word(n: int) -> str:
    return "DR" * n


def setpartition_to_vacillating(p: SetPartition) -> GrowthTableau:
    """The sequence of 2n+1 partitions read along the staircase boundary."""
    return growth_tableau(setpartition_to_filling(p), word=_staircase_word(p.n))


def is_vacillating(t: GrowthTableau, n: int) -> bool:
    if len(t.seq) != 2 * n + 1 or t.seq[0] != EMPTY or t.seq[-1] != EMPTY:
        return False
    for i in range(1, n + 1):
        a, b, c = t.seq[2 * i - 2], t.seq[2 * i - 1], t.seq[2 * i]
        if not (_shrinks(a, b) and _grows(b, c)):
            return False
    return True


def _grows(a, b):
    return contains(b, a) and sum(b) - sum(a) in (0, 1)


def _shrinks(a, b):
    return contains(a, b) and sum(a) - sum(b) in (0, 1)


def vacillating_to_setpartition(t: GrowthTableau, n: int | None = None) -> SetPartition:
    if n is None:
        n = (len(t.seq) - 1) // 2
    if not is_vacillating(t, n):
        raise ValueError("not a vacillating tableau")
    filling, bottom, left = reconstruct(_staircase_word(n), t.seq, "standard")
    if any(p != EMPTY for p in bottom + left):
        raise ValueError("backward pass left nonempty boundary labels")
    return filling_to_setpartition(filling, n)


def min_max_from_vacillating(t: GrowthTableau, n: int | None = None):
    """Read off the block minima and maxima directly from the tableau:
    i is a minimum iff nothing is deleted at step 2i-1, a maximum iff
    nothing is added at step 2i."""
    if n is None:
        n = (len(t.seq) - 1) // 2
    minima = frozenset(i for i in range(1, n + 1)
                       if t.seq[2 * i - 2] == t.seq[2 * i - 1])
    maxima = frozenset(i for i in range(1, n + 1)
                       if t.seq[2 * i - 1] == t.seq[2 * i])
    return minima, maxima


# ---------------------------------------------------------------------------
# pairs (P, T): partial tableau along the bottom boundary

@dataclass(frozen=True)
class PartialTableau:
    """Rows of distinct positive integers, increasing along rows and columns."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} not increasing")
        for a, b in zip(rows, rows[1:]):
            if len(b) > len(a):
                raise ValueError("rows do not form a partition shape")
            if any(x >= y for x, y in zip(a, b)):
                raise ValueError("columns not increasing")
        entries = [x for r in rows for x in r]
        if len(set(entries)) != len(entries):
            raise ValueError("repeated entry")
        object.__setattr__(self, "rows", rows)

    @property
    def entries(self):
        return frozenset(x for r in self.rows for x in r)

    def shape_at(self, bound: int):
        """Shape formed by the entries <= bound."""
        return make_partition(sum(1 for x in r if x <= bound) for r in self.rows)


def pair_to_vacillating(p: SetPartition, t: PartialTableau) -> GrowthTableau:
    """Growth of the partition filling with the chain of t along the bottom.

    The entries of t must be block maxima of p.
    """
    maxima = min_max_blocks(p)[1]
    if not t.entries <= maxima:
        raise ValueError("tableau entries must be block maxima of the partition")
    n = p.n
    bottom = [t.shape_at(x) for x in range(n + 1)]
    diagram = label_diagram(setpartition_to_filling(p), "standard",
                            word=_staircase_word(n), bottom=bottom)
    return border_tableau(diagram)


# ---------------------------------------------------------------------------
# hesitating tableaux

def _hesitating_shape(p: SetPartition):
    """The staircase with an extra diagonal cell in column i (and row i from
    above) whenever i is a singleton or the middle element of a chain."""
    n = p.n
    rep = standard_representation(p)
    firsts = {i for i, _ in rep}
    seconds = {j for _, j in rep}
    extended = {b[0] for b in p.blocks if len(b) == 1} | (firsts & seconds)
    rows = []
    for r in range(1, n + 1):
        length = (n - r) + (1 if (n + 1 - r) in extended else 0)
        rows.append(length)
    shape = FerrersShape(tuple(x for x in rows if x))
    return shape, extended


def _padded_word(shape: FerrersShape, n: int) -> str:
    return "D" * (n - shape.n_rows) + shape.word + "R" * (n - shape.n_cols)


def setpartition_to_hesitating(p: SetPartition) -> GrowthTableau:
    n = p.n
    shape, extended = _hesitating_shape(p)
    entries = {}
    for i, j in standard_representation(p):
        entries[(i, n + 1 - j)] = 1
    for i in extended:
        if (i,) in p.blocks:
            entries[(i, n + 1 - i)] = 1
    return growth_tableau(Filling(shape, entries), word=_padded_word(shape, n))


def is_hesitating(t: GrowthTableau, n: int) -> bool:
    """Each step pair does nothing-then-add, delete-then-nothing, or
    add-then-delete."""
    if len(t.seq) != 2 * n + 1 or t.seq[0] != EMPTY or t.seq[-1] != EMPTY:
        return False
    for i in range(1, n + 1):
        a, b, c = t.seq[2 * i - 2], t.seq[2 * i - 1], t.seq[2 * i]
        pat1 = a == b and _grows(b, c) and b != c
        pat2 = _shrinks(a, b) and a != b and b == c
        pat3 = _grows(a, b) and a != b and _shrinks(b, c) and b != c
        if not (pat1 or pat2 or pat3):
            return False
    return True


def hesitating_to_setpartition(t: GrowthTableau, n: int | None = None) -> SetPartition:
    if n is None:
        n = (len(t.seq) - 1) // 2
    if not is_hesitating(t, n):
        raise ValueError("not a hesitating tableau")
    # an add-then-delete pair at position i marks the extra diagonal cell
    extended = {i for i in range(1, n + 1)
                if contains(t.seq[2 * i - 1], t.seq[2 * i - 2])
                and t.seq[2 * i - 1] != t.seq[2 * i - 2]}
    rows = tuple(x for x in ((n - r) + (1 if (n + 1 - r) in extended else 0)
                             for r in range(1, n + 1)) if x)
    shape = FerrersShape(rows)
    filling, bottom, left = reconstruct(_padded_word(shape, n), t.seq, "standard")
    if any(p != EMPTY for p in bottom + left):
        raise ValueError("backward pass left nonempty boundary labels")
    pairs = []
    singles = []
    for (c, r) in filling.entries:
        j = n + 1 - r
        if c == j:
            singles.append(c)
        else:
            pairs.append((c, j))
    part = _partition_from_pairs(n, pairs)
    if any((i,) not in part.blocks for i in singles):
        raise ValueError("diagonal cross at a non-singleton position")
    return part


# ---------------------------------------------------------------------------
# matchings and oscillating tableaux

@dataclass(frozen=True)
class Matching:
    """A perfect matching of {1, ..., 2n}, as sorted pairs."""

    n: int
    pairs: tuple

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        seen = [x for p in pairs for x in p]
        if sorted(seen) != list(range(1, 2 * self.n + 1)):
            raise ValueError(f"pairs {pairs} do not match up 1..{2 * self.n}")
        object.__setattr__(self, "pairs", pairs)

    def __str__(self) -> str:
        return " ".join(f"{a}-{b}" for a, b in self.pairs)

    def as_set_partition(self) -> SetPartition:
        return SetPartition(2 * self.n, self.pairs)


def parse_matching(text: str) -> Matching:
    pairs = tuple(tuple(int(x) for x in p.split("-")) for p in text.split())
    return Matching(len(pairs), pairs)


def all_matchings(n: int):
    """All perfect matchings of {1..2n}."""
    def rec(elems):
        if not elems:
            yield ()
            return
        first, rest = elems[0], elems[1:]
        for i, other in enumerate(rest):
            for sub in rec(rest[:i] + rest[i + 1:]):
                yield ((first, other),) + sub
    for pairs in rec(tuple(range(1, 2 * n + 1))):
        yield Matching(n, pairs)


def matching_to_oscillating(m: Matching) -> GrowthTableau:
    """Drop the odd-indexed terms of the vacillating tableau of the matching."""
    vac = setpartition_to_vacillating(m.as_set_partition())
    seq = vac.seq[::2]
    return GrowthTableau("D" * (2 * m.n), seq)


def is_oscillating(t: GrowthTableau, length: int) -> bool:
    if len(t.seq) != length + 1 or t.seq[0] != EMPTY or t.seq[-1] != EMPTY:
        return False
    return all(abs(sum(a) - sum(b)) == 1 and (contains(a, b) or contains(b, a))
               for a, b in zip(t.seq, t.seq[1:]))


def oscillating_to_matching(t: GrowthTableau) -> Matching:
    two_n = len(t.seq) - 1
    if not is_oscillating(t, two_n):
        raise ValueError("not an oscillating tableau")
    seq = []
    for i, p in enumerate(t.seq):
        seq.append(p)
        if i < two_n:
            q = t.seq[i + 1]
            seq.append(p if contains(q, p) else q)
    # seq now interleaves deletions and additions into a length 4n+1 sequence
    vac = GrowthTableau(_staircase_word(two_n), tuple(seq))
    part = vacillating_to_setpartition(vac, two_n)
    if any(len(b) != 2 for b in part.blocks):
        raise ValueError("tableau does not encode a perfect matching")
    n = two_n // 2
    return Matching(n, part.blocks)


# ---------------------------------------------------------------------------
# statistic-swapping bijections

def swap_chain_statistics(f: Filling, mode: str = "standard") -> Filling:
    """Map a filling to one with the up-chain and down-chain statistics
    exchanged, by conjugating every border label.

    * ``standard``: partial permutation fillings, same rules both ways;
    * ``nes1``: arbitrary fillings; forward with the rsk rules, backward
      with the dual-rsk-prime rules;
    * ``nes2``: 0/1 fillings; forward with the dual-rsk rules, backward
      with the rsk-prime rules;
    * ``nes1-inverse`` / ``nes2-inverse``: the inverse directions.
    """
    routes = {"standard": ("standard", "standard"),
              "nes1": ("rsk", "dual-rsk-prime"),
              "nes1-inverse": ("dual-rsk-prime", "rsk"),
              "nes2": ("dual-rsk", "rsk-prime"),
              "nes2-inverse": ("rsk-prime", "dual-rsk"),
              }
    fwd, bwd = routes[mode]
    t = growth_tableau(f, fwd)
    back, bottom, left = reconstruct(t.word, t.conjugate().seq, bwd)
    if any(p != EMPTY for p in bottom + left):
        raise ValueError("conjugated tableau did not reconstruct cleanly")
    return back


def conjugate_set_partition(p: SetPartition) -> SetPartition:
    """Exchange cross and nest by conjugating the vacillating tableau."""
    t = setpartition_to_vacillating(p)
    return vacillating_to_setpartition(t.conjugate(), p.n)


def conjugate_set_partition_enhanced(p: SetPartition) -> SetPartition:
    """Exchange enhanced cross and nest via the hesitating tableau."""
    t = setpartition_to_hesitating(p)
    return hesitating_to_setpartition(t.conjugate(), p.n)


def conjugate_matching(m: Matching) -> Matching:
    t = matching_to_oscillating(m)
    conj = GrowthTableau(t.word, tuple(make_partition(_conj(p)) for p in t.seq))
    return oscillating_to_matching(conj)


def _conj(p):
    from .partitions import conjugate
    return conjugate(p)
