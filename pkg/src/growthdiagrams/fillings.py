"""Fillings of shapes with nonnegative integers, chain statistics, and a
brute-force oracle for Greene-style invariants.

A filling stores only its nonzero entries, keyed by (col, row).  Three
nested classes of fillings appear throughout:

* ``arbitrary``          -- any nonnegative entries,
* ``zero-one``           -- entries 0/1,
* ``partial-permutation``-- entries 0/1 with at most one 1 per row and column.

Chains are described by a :class:`ChainSpec`.  The two-letter codes follow
the compass convention: the first letter gives the vertical relation
(N = weakly above, n = strictly above, S = weakly below, s = strictly
below), the second the horizontal one (E = weakly right, e = strictly
right).
"""

import json
from dataclasses import dataclass, field

from .shapes import FerrersShape, shape_from_word

ARBITRARY = "arbitrary"
ZERO_ONE = "zero-one"
PARTIAL_PERMUTATION = "partial-permutation"


class InstanceTooLarge(Exception):
    """Raised when a brute-force computation exceeds its safety budget."""


@dataclass(frozen=True)
class Filling:
    shape: object
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (c, r), v in self.entries.items():
            v = int(v)
            if v < 0:
                raise ValueError(f"negative entry at ({c},{r})")
            if v == 0:
                continue
            if (c, r) not in self.shape:
                raise ValueError(f"cell ({c},{r}) outside shape {self.shape}")
            clean[(c, r)] = v
        object.__setattr__(self, "entries", clean)

    def entry(self, c: int, r: int) -> int:
        return self.entries.get((c, r), 0)

    @property
    def entry_sum(self) -> int:
        return sum(self.entries.values())

    def cells(self):
        """Cells carrying a nonzero entry, in column-major order."""
        return sorted(self.entries)

    def __eq__(self, other):
        return (isinstance(other, Filling)
                and self.shape == other.shape and self.entries == other.entries)

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self.entries.items()))))


def filling_class(f: Filling) -> str:
    """The strictest of the three filling classes that f belongs to."""
    if any(v > 1 for v in f.entries.values()):
        return ARBITRARY
    rows = [r for (_, r) in f.entries]
    cols = [c for (c, _) in f.entries]
    if len(set(rows)) == len(rows) and len(set(cols)) == len(cols):
        return PARTIAL_PERMUTATION
    return ZERO_ONE


def in_class(f: Filling, cls: str) -> bool:
    actual = filling_class(f)
    order = [PARTIAL_PERMUTATION, ZERO_ONE, ARBITRARY]
    return order.index(actual) <= order.index(cls)


def transpose_filling(f: Filling) -> Filling:
    shape = f.shape.transpose()
    return Filling(shape, {(r, c): v for (c, r), v in f.entries.items()})


def filling_to_json(f: Filling) -> str:
    return json.dumps({
        "shape": f.shape.word,
        "entries": [[c, r, v] for (c, r), v in sorted(f.entries.items())],
    })


def filling_from_json(text: str) -> Filling:
    data = json.loads(text)
    shape = shape_from_word(data["shape"])
    return Filling(shape, {(c, r): v for c, r, v in data["entries"]})


# ---------------------------------------------------------------------------
# chain specifications

_VERTICAL = {"N": "weak-up", "n": "strict-up", "S": "weak-down", "s": "strict-down"}
_HORIZONTAL = {"E": "weak-right", "e": "strict-right"}


@dataclass(frozen=True)
class ChainSpec:
    vertical: str
    horizontal: str
    length_mode: str = "count"           # count | entry-sum | entry-multiplicity
    require_rectangle: bool = False

    def __post_init__(self):
        if self.vertical not in _VERTICAL.values():
            raise ValueError(f"bad vertical relation {self.vertical!r}")
        if self.horizontal not in _HORIZONTAL.values():
            raise ValueError(f"bad horizontal relation {self.horizontal!r}")
        if self.length_mode not in ("count", "entry-sum", "entry-multiplicity"):
            raise ValueError(f"bad length mode {self.length_mode!r}")

    @property
    def goes_up(self) -> bool:
        return self.vertical in ("weak-up", "strict-up")

    @property
    def code(self) -> str:
        v = {v: k for k, v in _VERTICAL.items()}[self.vertical]
        h = {v: k for k, v in _HORIZONTAL.items()}[self.horizontal]
        return v + h

    def step_ok(self, a, b) -> bool:
        """May cell b follow cell a in a chain?"""
        ca, ra = a
        cb, rb = b
        if (ca, ra) == (cb, rb):
            return False
        vert = {"weak-up": rb >= ra, "strict-up": rb > ra,
                "weak-down": rb <= ra, "strict-down": rb < ra}[self.vertical]
        horiz = cb >= ca if self.horizontal == "weak-right" else cb > ca
        return vert and horiz


def chain_spec(code: str, length_mode: str = "count",
               require_rectangle: bool = False) -> ChainSpec:
    """Build a ChainSpec from a two-letter compass code like 'NE' or 'se'."""
    if len(code) != 2 or code[0] not in _VERTICAL or code[1] not in _HORIZONTAL:
        raise ValueError(f"bad chain code {code!r}")
    return ChainSpec(_VERTICAL[code[0]], _HORIZONTAL[code[1]],
                     length_mode, require_rectangle)


def _sorted_cells(cells, spec: ChainSpec):
    if spec.goes_up:
        return sorted(cells)
    return sorted(cells, key=lambda cr: (cr[0], -cr[1]))


def _box_in_shape(shape, cells) -> bool:
    lo_c = min(c for c, _ in cells)
    hi_c = max(c for c, _ in cells)
    lo_r = min(r for _, r in cells)
    hi_r = max(r for _, r in cells)
    return all((c, r) in shape
               for c in range(lo_c, hi_c + 1) for r in range(lo_r, hi_r + 1))


def _chain_value(f: Filling, spec: ChainSpec, cells) -> int:
    if spec.length_mode == "entry-sum":
        return sum(f.entry(c, r) for c, r in cells)
    return len(cells)


def longest_chain(f: Filling, spec: ChainSpec) -> int:
    """Length of the longest single chain of the given flavor.

    With ``require_rectangle`` the bounding rectangle of the chain must lie
    inside the shape.  For a single chain the multiset mode coincides with
    plain counting.
    """
    cells = _sorted_cells(f.entries, spec)
    best = 0

    def extend(chain, start):
        nonlocal best
        if chain and (not spec.require_rectangle or _box_in_shape(f.shape, chain)):
            best = max(best, _chain_value(f, spec, chain))
        for i in range(start, len(cells)):
            if not chain or spec.step_ok(chain[-1], cells[i]):
                chain.append(cells[i])
                extend(chain, i + 1)
                chain.pop()

    extend([], 0)
    return best


def greene_oracle(f: Filling, spec: ChainSpec, k: int, corner=None,
                  max_cells: int = 16, max_entry_sum: int = 8,
                  max_k: int = 3) -> int:
    """Maximal total length of a collection of k chains, by exhaustive search.

    The collection semantics depend on the length mode:

    * ``count``: k chains, maximizing the cardinality of the union of their
      cells (equivalently: the largest cell set decomposable into k chains);
    * ``entry-sum``: k pairwise disjoint chains, maximizing the sum of the
      entries they cover;
    * ``entry-multiplicity``: k chains where a cell with entry e may appear
      in up to e of them, maximizing the cardinality of the multiset union.

    ``corner=(x, y)`` restricts attention to the cells weakly left of
    column x and weakly below row y.  This search is deliberately
    independent of the growth-diagram machinery; it is the reference
    implementation the fast invariants are tested against.
    """
    region = list(f.entries)
    if corner is not None:
        x, y = corner
        region = [(c, r) for (c, r) in region if c <= x and r <= y]
    if len(f.shape.cells()) > max_cells or f.entry_sum > max_entry_sum or k > max_k:
        raise InstanceTooLarge(
            f"oracle budget exceeded (cells={len(f.shape.cells())}, "
            f"sum={f.entry_sum}, k={k})")
    cells = _sorted_cells(region, spec)

    if spec.length_mode == "entry-multiplicity":
        caps = [min(f.entry(c, r), k) for c, r in cells]
        gain = [1] * len(cells)
    elif spec.length_mode == "entry-sum":
        caps = [1] * len(cells)
        gain = [f.entry(c, r) for c, r in cells]
    else:
        caps = [1] * len(cells)
        gain = [1] * len(cells)

    best = 0

    def search(idx, lasts, value):
        nonlocal best
        if value + sum(gain[idx:]) * max(caps[idx:], default=1) <= best:
            return
        if idx == len(cells):
            best = max(best, value)
            return
        cell = cells[idx]
        nonempty = [j for j in range(k)
                    if lasts[j] is not None and spec.step_ok(lasts[j], cell)]
        empties = [j for j in range(k) if lasts[j] is None]
        base = [()]
        for j in nonempty:
            base.extend(sub + (j,) for sub in list(base) if len(sub) < caps[idx])
        # empty chains are interchangeable, so only prefixes of them are used
        choices = []
        for sub in base:
            for t in range(min(caps[idx] - len(sub), len(empties)) + 1):
                choices.append(sub + tuple(empties[:t]))
        for subset in choices:
            new_lasts = list(lasts)
            for j in subset:
                new_lasts[j] = cell
            search(idx + 1, tuple(new_lasts), value + gain[idx] * len(subset))

    search(0, tuple([None] * k), 0)
    return best
