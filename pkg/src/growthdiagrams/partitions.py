"""Integer partitions as tuples of weakly decreasing positive parts.

Partitions are stored without trailing zeros; reading a part beyond the
length of the tuple yields 0.  Lattice operations (union, intersection,
containment) are coordinatewise.
"""

from itertools import count


def make_partition(parts) -> tuple[int, ...]:
    """Normalize an iterable of parts into a partition tuple.

    Trailing zeros are stripped.  Raises ValueError if the parts are not
    weakly decreasing or contain a negative entry.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if b > a:
            raise ValueError(f"parts not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {p}")
    return p


def part(p: tuple[int, ...], i: int) -> int:
    """The i-th part (1-based); 0 beyond the length of the partition."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def size(p: tuple[int, ...]) -> int:
    return sum(p)


def conjugate(p: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose the diagram: row lengths become column heights."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def union(mu: tuple[int, ...], nu: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinatewise maximum."""
    n = max(len(mu), len(nu))
    return make_partition(max(part(mu, i), part(nu, i)) for i in range(1, n + 1))


def intersect(mu: tuple[int, ...], nu: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinatewise minimum."""
    n = min(len(mu), len(nu))
    return make_partition(min(part(mu, i), part(nu, i)) for i in range(1, n + 1))


def contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    """True if the diagram of ``inner`` fits inside ``outer``."""
    return all(part(outer, i) >= part(inner, i) for i in range(1, len(inner) + 1))


def is_horizontal_strip(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    """True if outer/inner is a horizontal strip (at most one square per column).

    Equivalently: outer_i >= inner_i >= outer_{i+1} for all i.
    """
    n = max(len(outer), len(inner))
    for i in range(1, n + 1):
        if not (part(outer, i) >= part(inner, i) >= part(outer, i + 1)):
            return False
    return True


def is_vertical_strip(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    """True if outer/inner is a vertical strip (at most one square per row)."""
    n = max(len(outer), len(inner))
    return all(part(outer, i) - part(inner, i) in (0, 1) for i in range(1, n + 1)) \
        and contains(outer, inner)


def differs_by_one_square(bigger: tuple[int, ...], smaller: tuple[int, ...]) -> bool:
    return contains(bigger, smaller) and size(bigger) == size(smaller) + 1


def add_square_in_row(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Add one square to the k-th row; the result must still be a partition."""
    parts = list(p) + [0] * (k - len(p))
    parts[k - 1] += 1
    return make_partition(parts)


def diff_row(bigger: tuple[int, ...], smaller: tuple[int, ...]) -> int:
    """The unique row where two partitions differing by one square differ."""
    for i in count(1):
        a, b = part(bigger, i), part(smaller, i)
        if a != b:
            if a != b + 1 or not differs_by_one_square(bigger, smaller):
                raise ValueError(f"{bigger} and {smaller} do not differ by one square")
            return i
        if i > len(bigger) and i > len(smaller):
            raise ValueError(f"{bigger} and {smaller} are equal")


def to_compact(p: tuple[int, ...]) -> str:
    """Digit-string display form; the empty partition renders as 'e'."""
    if not p:
        return "e"
    if p[0] > 9:
        return to_brackets(p)
    return "".join(str(x) for x in p)


def to_brackets(p: tuple[int, ...]) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse either the compact digit form ('21', 'e') or '[2,1]'."""
    text = text.strip()
    if text in ("e", "", "[]"):
        return ()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unbalanced brackets in {text!r}")
        return make_partition(int(x) for x in text[1:-1].split(","))
    if not text.isdigit():
        raise ValueError(f"cannot parse partition {text!r}")
    return make_partition(int(c) for c in text)


def sort_key(p: tuple[int, ...]):
    """Order partitions by size, then lexicographically."""
    return (size(p), p)


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of n in lexicographically decreasing order."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int):
    """All partitions of 0, 1, ..., n in size-then-lex order."""
    for m in range(n + 1):
        yield from sorted(partitions_of(m))
