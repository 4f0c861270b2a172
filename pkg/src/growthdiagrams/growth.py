"""Growth diagrams on Ferrers shapes.

A growth diagram assigns a partition label to every lattice corner of a
shape so that each cell obeys the local rules of its variant.  Labels are
kept in a dict keyed by corner coordinates (x, y): corner (x, y) is the
point x cells from the left and y cells up from the bottom.

The reading word may carry extra leading D steps and trailing R steps
beyond the normalized boundary word of the shape; these encode zero-length
rows at the top and zero-height columns at the right, which contribute
extra border corners (used e.g. when a staircase is read with a word of
length 2n).
"""

import json
from dataclasses import dataclass, field

from .fillings import Filling, filling_class, in_class
from .local_rules import get_variant
from .partitions import make_partition, differs_by_one_square
from .shapes import FerrersShape, shape_from_word

EMPTY = ()


def grid_from_word(word: str):
    """Row lengths (bottom-up, possibly with zero-length top rows) and the
    total number of columns encoded by a reading word."""
    lengths_top_down = []
    x = 0
    for step in word:
        if step == "R":
            x += 1
        elif step == "D":
            lengths_top_down.append(x)
        else:
            raise ValueError(f"bad step {step!r} in word {word!r}")
    rows = tuple(reversed(lengths_top_down))
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"word {word!r} does not trace a Ferrers boundary")
    return rows, x


def trace_corners(word: str):
    """The corner points visited by the reading word, top-left to bottom-right."""
    rows, _ = grid_from_word(word)
    x, y = 0, len(rows)
    pts = [(x, y)]
    for step in word:
        if step == "R":
            x += 1
        else:
            y -= 1
        pts.append((x, y))
    return pts


@dataclass(frozen=True)
class GrowthTableau:
    """A sequence of partitions read along a boundary word."""

    word: str
    seq: tuple
    variant: str = "standard"

    def __post_init__(self):
        object.__setattr__(self, "seq", tuple(make_partition(p) for p in self.seq))
        if len(self.seq) != len(self.word) + 1:
            raise ValueError(
                f"need {len(self.word) + 1} partitions for word {self.word!r}, "
                f"got {len(self.seq)}")

    def validate_steps(self):
        v = get_variant(self.variant)
        for i, step in enumerate(self.word):
            prev, nxt = self.seq[i], self.seq[i + 1]
            ok = v.right_step(prev, nxt) if step == "R" else v.down_step(prev, nxt)
            if not ok:
                raise ValueError(
                    f"step {i + 1} ({step}) from {prev} to {nxt} is not a valid "
                    f"{self.variant} step")

    def conjugate(self) -> "GrowthTableau":
        from .partitions import conjugate
        conj_variant = {"standard": "standard",
                        "rsk": "dual-rsk-prime", "dual-rsk-prime": "rsk",
                        "dual-rsk": "rsk-prime", "rsk-prime": "dual-rsk"}
        return GrowthTableau(self.word, tuple(conjugate(p) for p in self.seq),
                             conj_variant[self.variant])


def tableau_to_json(t: GrowthTableau) -> str:
    return json.dumps({"word": t.word, "seq": [list(p) for p in t.seq],
                       "variant": t.variant})


def tableau_from_json(text: str) -> GrowthTableau:
    data = json.loads(text)
    return GrowthTableau(data["word"], tuple(tuple(p) for p in data["seq"]),
                         data.get("variant", "standard"))


@dataclass
class GrowthDiagram:
    word: str
    row_lens: tuple          # bottom-up, may include zero-length top rows
    n_cols: int
    variant: str
    filling: Filling
    labels: dict = field(default_factory=dict)

    def label(self, x: int, y: int):
        return self.labels[(x, y)]

    def corners(self):
        out = []
        for y in range(len(self.row_lens) + 1):
            width = self.n_cols if y == 0 else self.row_lens[y - 1]
            out.extend((x, y) for x in range(width + 1))
        return out

    def cells(self, order: str = "column-major"):
        rows = self.row_lens
        if order == "column-major":
            return [(c, r) for c in range(1, self.n_cols + 1)
                    for r in range(1, len(rows) + 1) if rows[r - 1] >= c]
        return [(c, r) for r in range(1, len(rows) + 1)
                for c in range(1, rows[r - 1] + 1)]


def _default_boundary(n):
    return [EMPTY] * (n + 1)


def label_diagram(filling: Filling, variant: str = "standard",
                  word: str | None = None,
                  bottom=None, left=None,
                  order: str = "column-major") -> GrowthDiagram:
    """Propagate corner labels across a filled shape.

    ``bottom`` and ``left`` give the labels of the corners along the bottom
    and left sides (defaulting to empty partitions everywhere); nontrivial
    boundary labels are only supported for the standard rules.
    """
    v = get_variant(variant)
    if not in_class(filling, v.filling_class):
        raise ValueError(
            f"{variant} rules need a {v.filling_class} filling, got "
            f"{filling_class(filling)}")
    if word is None:
        word = filling.shape.word
    rows, n_cols = grid_from_word(word)
    if shape_from_word(word).rows != filling.shape.rows:
        raise ValueError(
            f"word {word!r} traces {shape_from_word(word)}, not {filling.shape}")

    bottom = list(bottom) if bottom is not None else _default_boundary(n_cols)
    left = list(left) if left is not None else _default_boundary(len(rows))
    if len(bottom) != n_cols + 1 or len(left) != len(rows) + 1:
        raise ValueError("boundary label sequences have the wrong length")
    bottom = [make_partition(p) for p in bottom]
    left = [make_partition(p) for p in left]
    if bottom[0] != left[0]:
        raise ValueError("bottom-left corner labelled inconsistently")
    nontrivial = any(p != EMPTY for p in bottom + left)
    if nontrivial and variant != "standard":
        raise ValueError("nontrivial boundary labels need the standard rules")

    col_heights = [sum(1 for r in rows if r >= c) for c in range(1, n_cols + 1)]
    for x in range(1, n_cols + 1):
        prev, cur = bottom[x - 1], bottom[x]
        if not (prev == cur or differs_by_one_square(cur, prev)):
            raise ValueError(f"bottom labels at {x - 1},{x} differ by more "
                             "than one square")
        if prev != cur and any(filling.entry(x, r)
                               for r in range(1, col_heights[x - 1] + 1)):
            raise ValueError(f"bottom labels change under occupied column {x}")
    for y in range(1, len(rows) + 1):
        prev, cur = left[y - 1], left[y]
        if not (prev == cur or differs_by_one_square(cur, prev)):
            raise ValueError(f"left labels at {y - 1},{y} differ by more "
                             "than one square")
        if prev != cur and any(filling.entry(c, y)
                               for c in range(1, rows[y - 1] + 1)):
            raise ValueError(f"left labels change beside occupied row {y}")

    labels = {(x, 0): bottom[x] for x in range(n_cols + 1)}
    labels.update({(0, y): left[y] for y in range(len(rows) + 1)})
    for c, r in GrowthDiagram(word, rows, n_cols, variant, filling).cells(order):
        labels[(c, r)] = v.forward(labels[(c - 1, r - 1)], labels[(c, r - 1)],
                                   labels[(c - 1, r)], filling.entry(c, r))
    return GrowthDiagram(word, rows, n_cols, variant, filling, labels)


def border_tableau(diagram: GrowthDiagram) -> GrowthTableau:
    """Read the labels along the right/up boundary, top-left to bottom-right."""
    seq = tuple(diagram.labels[pt] for pt in trace_corners(diagram.word))
    return GrowthTableau(diagram.word, seq, diagram.variant)


def reconstruct(word: str, tableau, variant: str | None = None):
    """Run the backward rules from a border tableau.

    Returns (filling, bottom labels, left labels); the boundary labels are
    what the backward pass leaves on the bottom and left sides.
    """
    if isinstance(tableau, GrowthTableau):
        if variant is None:
            variant = tableau.variant
        seq = tableau.seq
    else:
        seq = tuple(make_partition(p) for p in tableau)
    if variant is None:
        variant = "standard"
    t = GrowthTableau(word, seq, variant)
    t.validate_steps()
    v = get_variant(variant)
    rows, n_cols = grid_from_word(word)

    labels = dict(zip(trace_corners(word), t.seq))
    entries = {}
    shape = FerrersShape(tuple(r for r in rows if r))
    dummy = Filling(shape, {})
    grid = GrowthDiagram(word, rows, n_cols, variant, dummy)
    for c, r in reversed(grid.cells("row-major")):
        rho, m = v.backward(labels[(c, r - 1)], labels[(c - 1, r)],
                            labels[(c, r)])
        labels[(c - 1, r - 1)] = rho
        if m:
            entries[(c, r)] = m
    filling = Filling(shape, entries)
    bottom = [labels[(x, 0)] for x in range(n_cols + 1)]
    left = [labels[(0, y)] for y in range(len(rows) + 1)]
    return filling, bottom, left


def growth_tableau(filling: Filling, variant: str = "standard",
                   word: str | None = None, bottom=None, left=None) -> GrowthTableau:
    """Shorthand: label the diagram and read off the border."""
    return border_tableau(label_diagram(filling, variant, word, bottom, left))


# ---------------------------------------------------------------------------
# blow-up and shrink-back

# Within-line placement when an entry m is expanded into m crosses.  Each
# original row (column) is refined into one line per cross it carries, at
# least one.  'up' means the crosses of the line are arranged from
# bottom/left to top/right, 'down' from top/left to bottom/right.
_ARRANGE = {
    "rsk": ("up", "up"),
    "dual-rsk": ("down", "up"),          # rows down, columns up
    "rsk-prime": ("up", "down"),
    "dual-rsk-prime": ("down", "down"),
}


def blow_up(filling: Filling, variant: str):
    """Expand a filling into a partial permutation filling of a refined shape.

    Returns (refined filling, row_blocks, col_blocks) where the blocks map
    each original line to (first refined line, number of refined lines),
    1-based.
    """
    if variant not in _ARRANGE:
        raise ValueError(f"blow-up is defined for the variants {sorted(_ARRANGE)}")
    row_dir, col_dir = _ARRANGE[variant]
    shape = filling.shape

    # tokens: one per unit of each entry; within one entry the crosses are
    # chained bottom/left -> top/right for the rsk-style rules and
    # top/left -> bottom/right for the dual-rsk-prime rule
    token_up = variant in ("rsk", "dual-rsk", "rsk-prime")

    def row_tokens(r):
        toks = []
        for c in range(1, shape.row_length(r) + 1):
            toks.extend((c, r, j) for j in range(filling.entry(c, r)))
        return sorted(toks)  # left to right; within an entry by index

    def col_tokens(c):
        toks = []
        for r in range(1, shape.col_height(c) + 1):
            toks.extend((c, r, j) for j in range(filling.entry(c, r)))
        # bottom to top; within an entry, index j goes up for rsk-style
        # chains and down for the dual-rsk-prime chains
        return sorted(toks, key=lambda t: (t[1], t[2] if token_up else -t[2]))

    row_blocks, col_blocks = [], []
    base = 0
    for r in range(1, shape.n_rows + 1):
        n = max(1, len(row_tokens(r)))
        row_blocks.append((base + 1, n))
        base += n
    base = 0
    for c in range(1, shape.n_cols + 1):
        n = max(1, len(col_tokens(c)))
        col_blocks.append((base + 1, n))
        base += n

    fine_row = {}
    for r in range(1, shape.n_rows + 1):
        toks = row_tokens(r)
        first, n = row_blocks[r - 1]
        ranks = range(n) if row_dir == "up" else range(n - 1, -1, -1)
        for tok, rank in zip(toks, ranks):
            fine_row[tok] = first + rank
    fine_col = {}
    for c in range(1, shape.n_cols + 1):
        toks = col_tokens(c)
        first, n = col_blocks[c - 1]
        if col_dir == "down":
            toks = list(reversed(toks))
        for rank, tok in enumerate(toks):
            fine_col[tok] = first + rank

    fine_rows = []
    for r in range(1, shape.n_rows + 1):
        width = sum(col_blocks[c - 1][1] for c in range(1, shape.row_length(r) + 1))
        fine_rows.extend([width] * row_blocks[r - 1][1])
    fine_shape = FerrersShape(tuple(fine_rows))
    entries = {(fine_col[tok], fine_row[tok]): 1 for tok in fine_row}
    return Filling(fine_shape, entries), tuple(row_blocks), tuple(col_blocks)


def shrink_back(fine_diagram: GrowthDiagram, row_blocks, col_blocks) -> dict:
    """Corner labels of the coarse diagram, read off a refined diagram at the
    crossings of the block boundaries."""
    col_base = [0]
    for _, n in col_blocks:
        col_base.append(col_base[-1] + n)
    row_base = [0]
    for _, n in row_blocks:
        row_base.append(row_base[-1] + n)
    out = {}
    for (x, y) in fine_diagram.labels:
        if x in col_base and y in row_base:
            out[(col_base.index(x), row_base.index(y))] = fine_diagram.labels[(x, y)]
    return out
