"""Ferrers shapes in French notation, plus stack polyominoes.

A Ferrers shape is a left- and bottom-justified arrangement of unit cells
whose row lengths, read from the bottom up, are weakly decreasing.  Cells
are addressed as (col, row), both 1-based, with row 1 at the bottom.

The right/up boundary of a shape is encoded as a word over {D, R}, traced
from the top-left end to the bottom-right end: R moves one cell to the
right, D moves one cell down.
"""

from dataclasses import dataclass

from .partitions import conjugate, make_partition


@dataclass(frozen=True)
class FerrersShape:
    """Row lengths from the bottom up (weakly decreasing, positive)."""

    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", make_partition(self.rows))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def n_cells(self) -> int:
        return sum(self.rows)

    @property
    def col_heights(self) -> tuple[int, ...]:
        return conjugate(self.rows)

    def row_length(self, r: int) -> int:
        return self.rows[r - 1] if 1 <= r <= self.n_rows else 0

    def col_height(self, c: int) -> int:
        heights = self.col_heights
        return heights[c - 1] if 1 <= c <= len(heights) else 0

    def __contains__(self, cell) -> bool:
        c, r = cell
        return 1 <= r <= self.n_rows and 1 <= c <= self.rows[r - 1]

    def cells(self):
        """All cells in column-major order (col, then row, ascending)."""
        return [(c, r) for c in range(1, self.n_cols + 1)
                for r in range(1, self.col_height(c) + 1)]

    @property
    def word(self) -> str:
        out = []
        x = 0
        for length in reversed(self.rows):
            out.append("R" * (length - x))
            out.append("D")
            x = length
        return "".join(out)

    def transpose(self) -> "FerrersShape":
        return FerrersShape(self.col_heights)

    def is_symmetric(self) -> bool:
        return self.rows == self.col_heights

    def __str__(self) -> str:
        return self.word or "(empty)"


def shape_from_word(word: str) -> FerrersShape:
    """Decode a D/R boundary word.

    Zero-length rows (D steps before any R) and zero-height columns
    (R steps after the last D) are normalized away.
    """
    lengths_top_down = []
    x = 0
    for step in word:
        if step == "R":
            x += 1
        elif step == "D":
            lengths_top_down.append(x)
        else:
            raise ValueError(f"boundary word may only contain D and R: {word!r}")
    rows = [length for length in reversed(lengths_top_down) if length > 0]
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"word {word!r} does not trace a Ferrers boundary")
    return FerrersShape(tuple(rows))


def shape_from_text(text: str) -> FerrersShape:
    """Read a shape given either as a boundary word or as 'h1,h2,...' row lengths."""
    text = text.strip()
    if not text:
        return FerrersShape(())
    if set(text) <= {"D", "R"}:
        return shape_from_word(text)
    return FerrersShape(tuple(sorted((int(x) for x in text.split(",")), reverse=True)))


def staircase(n: int) -> FerrersShape:
    """Triangular shape with n-1 cells in the bottom row down to 1 at the top."""
    return FerrersShape(tuple(range(n - 1, 0, -1)))


@dataclass(frozen=True)
class StackPolyomino:
    """Columns of cells, bottom-justified, with unimodal column heights."""

    col_heights: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.col_heights)
        if any(x <= 0 for x in h):
            raise ValueError(f"column heights must be positive: {h}")
        if h:
            peak = h.index(max(h))
            rising, falling = h[: peak + 1], h[peak:]
            if any(a > b for a, b in zip(rising, rising[1:])) or \
               any(a < b for a, b in zip(falling, falling[1:])):
                raise ValueError(f"column heights must be unimodal: {h}")
        object.__setattr__(self, "col_heights", h)

    @property
    def n_cols(self) -> int:
        return len(self.col_heights)

    @property
    def n_rows(self) -> int:
        return max(self.col_heights, default=0)

    @property
    def n_cells(self) -> int:
        return sum(self.col_heights)

    def col_height(self, c: int) -> int:
        return self.col_heights[c - 1] if 1 <= c <= self.n_cols else 0

    def __contains__(self, cell) -> bool:
        c, r = cell
        return 1 <= c <= self.n_cols and 1 <= r <= self.col_heights[c - 1]

    def cells(self):
        return [(c, r) for c in range(1, self.n_cols + 1)
                for r in range(1, self.col_heights[c - 1] + 1)]

    def sort_columns(self) -> FerrersShape:
        """Rearrange the columns into decreasing height order."""
        heights = tuple(sorted(self.col_heights, reverse=True))
        return FerrersShape(conjugate(heights))

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.col_heights)


def stack_from_text(text: str) -> StackPolyomino:
    return StackPolyomino(tuple(int(x) for x in text.strip().split(",")))


def rectangle_in_shape(shape, lo_col: int, lo_row: int, hi_col: int, hi_row: int) -> bool:
    """True if every cell of the axis-parallel rectangle lies in the shape."""
    return all((c, r) in shape
               for c in range(lo_col, hi_col + 1)
               for r in range(lo_row, hi_row + 1))
