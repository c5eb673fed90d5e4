"""Partitions, compositions, Young tableaux, descents, Kostka numbers and charge.

Partitions and compositions are plain tuples of positive integers (weakly
decreasing for partitions); subsets of [K] encode compositions of K+1 through
``co`` and its inverse.  Standard tableaux carry the two statistics that drive
the generalized-exponent formulas: the non-descent height and the charge of
the right-to-left reading word, which agree on every standard tableau.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Iterator

if TYPE_CHECKING:
    from .weights import Weight


# -- partitions and compositions ------------------------------------------


def is_partition(parts: tuple[int, ...]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse a comma-separated weakly decreasing sequence of positive integers."""
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    if not parts or not is_partition(parts):
        raise ValueError(f"{text!r} is not a weakly decreasing sequence of positive integers")
    return parts


def partitions(total: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of ``total``, largest part first, in descending lex order."""
    if total == 0:
        return [()]
    if max_part is None or max_part > total:
        max_part = total
    result = []
    for first in range(max_part, 0, -1):
        for rest in partitions(total - first, first):
            result.append((first,) + rest)
    return result


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Column lengths of the Young diagram."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def compositions(total: int) -> list[tuple[int, ...]]:
    """All compositions of ``total`` into positive parts."""
    if total == 0:
        return [()]
    result = []
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            result.append((first,) + rest)
    return result


# -- subset <-> composition encodings --------------------------------------


def co(subset: Iterable[int], size: int) -> tuple[int, ...]:
    """The composition of size+1 encoded by a subset of [size].

    Successive differences of the sorted subset, closed off with the gap up to
    size+1; the empty set encodes the one-part composition (size+1,).
    """
    elements = sorted(subset)
    if any(s < 1 or s > size for s in elements):
        raise ValueError(f"subset {elements} not contained in [1..{size}]")
    parts = []
    previous = 0
    for s in elements:
        parts.append(s - previous)
        previous = s
    parts.append(size + 1 - previous)
    return tuple(parts)


def co_inverse(composition: tuple[int, ...]) -> frozenset[int]:
    """Partial sums of all but the last part; inverse of ``co``."""
    if not composition or any(p < 1 for p in composition):
        raise ValueError(f"{composition} is not a composition of a positive integer")
    acc = 0
    out = []
    for part in composition[:-1]:
        acc += part
        out.append(acc)
    return frozenset(out)


def phi_set(subset: Iterable[int], rank: int) -> frozenset[int]:
    """The anti-involution A -> (rank+1) - complement(A) of subsets of [rank]."""
    chosen = set(subset)
    if any(a < 1 or a > rank for a in chosen):
        raise ValueError(f"subset {sorted(chosen)} not contained in [1..{rank}]")
    return frozenset(rank + 1 - a for a in range(1, rank + 1) if a not in chosen)


def phi_weight(weight: "Weight") -> tuple[int, ...]:
    """Shift a quasi-dominant first-layer weight by one and drop the trailing zeros.

    The result is a composition of rank+1; on dominant weights it is the
    partition indexing the corresponding irreducible.
    """
    coords = weight.coords
    negative = sum(1 for x in coords if x < 0)
    head, tail = coords[: len(coords) - negative], coords[len(coords) - negative :]
    if min(coords) < -1 or any(x != -1 for x in tail) or any(x < 0 for x in head):
        raise ValueError(f"{weight} is not quasi-dominant (first layer, -1 entries rightmost)")
    return tuple(x + 1 for x in head)


# -- tableaux ---------------------------------------------------------------


class StandardTableau:
    """A bijective filling of a Young diagram by 1..m, increasing along rows and columns."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(row) for row in rows)
        shape = tuple(len(row) for row in rows)
        if not is_partition(shape):
            raise ValueError(f"row lengths {shape} do not form a partition")
        size = sum(shape)
        if sorted(x for row in rows for x in row) != list(range(1, size + 1)):
            raise ValueError("entries must be a bijection onto 1..m")
        for row in rows:
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise ValueError("rows must increase left to right")
        for r in range(len(rows) - 1):
            if any(rows[r][c] >= rows[r + 1][c] for c in range(len(rows[r + 1]))):
                raise ValueError("columns must increase top to bottom")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("StandardTableau is immutable")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"StandardTableau({[list(row) for row in self.rows]!r})"

    def row_of(self, value: int) -> int:
        for r, row in enumerate(self.rows):
            if value in row:
                return r
        raise ValueError(f"{value} not in tableau")

    def descent_set(self) -> frozenset[int]:
        """Values i such that i+1 sits in a strictly lower row than i."""
        row_index = {}
        for r, row in enumerate(self.rows):
            for value in row:
                row_index[value] = r
        return frozenset(
            i for i in range(1, self.size) if row_index[i + 1] > row_index[i]
        )

    def height(self) -> int:
        """Sum of m - a over the non-descents a of the tableau (m = size)."""
        m = self.size
        descents = self.descent_set()
        return sum(m - a for a in range(1, m) if a not in descents)

    def reading_word(self) -> tuple[int, ...]:
        """Entries read right to left in consecutive rows starting from the top."""
        return tuple(x for row in self.rows for x in reversed(row))

    def charge(self) -> int:
        """Charge of the reading word.

        Each value i >= 2 contributes m - (i-1) when it appears to the left of
        i-1 in the word, and zero otherwise.
        """
        word = self.reading_word()
        m = len(word)
        position = {value: k for k, value in enumerate(word)}
        return sum(m - (i - 1) for i in range(2, m + 1) if position[i] < position[i - 1])

    def to_rows(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def ssyt_enumerate(
    shape: tuple[int, ...], content: tuple[int, ...]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All semistandard fillings of ``shape`` using exactly content[v-1] copies of v.

    Rows increase weakly, columns strictly.  Fillings are produced in
    lexicographic order of their row-major reading.
    """
    if not is_partition(shape) and shape != ():
        raise ValueError(f"{shape} is not a partition")
    if sum(shape) != sum(content):
        raise ValueError(f"shape size {sum(shape)} != content size {sum(content)}")
    if not shape:
        yield ()
        return
    remaining = list(content)
    alphabet = len(content)
    rows = [[0] * width for width in shape]
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]

    def fill(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(cells):
            yield tuple(tuple(row) for row in rows)
            return
        r, c = cells[k]
        lowest = 1
        if c > 0:
            lowest = max(lowest, rows[r][c - 1])
        if r > 0:
            lowest = max(lowest, rows[r - 1][c] + 1)
        for v in range(lowest, alphabet + 1):
            if remaining[v - 1] > 0:
                remaining[v - 1] -= 1
                rows[r][c] = v
                yield from fill(k + 1)
                remaining[v - 1] += 1
        rows[r][c] = 0

    yield from fill(0)


@lru_cache(maxsize=None)
def _syt_tuple(shape: tuple[int, ...]) -> tuple[StandardTableau, ...]:
    content = (1,) * sum(shape)
    return tuple(StandardTableau(rows) for rows in ssyt_enumerate(shape, content))


def syt_enumerate(shape: tuple[int, ...]) -> list[StandardTableau]:
    """All standard Young tableaux of the given shape, in a fixed lexicographic order."""
    if not is_partition(shape) and shape != ():
        raise ValueError(f"{shape} is not a partition")
    return list(_syt_tuple(tuple(shape)))


@lru_cache(maxsize=None)
def _kostka_sorted(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    return sum(1 for _ in ssyt_enumerate(shape, content))


def kostka_number(shape: tuple[int, ...], content: Iterable[int]) -> int:
    """Number of semistandard tableaux of the given shape and content.

    Counted by direct enumeration; invariant under permuting the content, so
    results are cached keyed on the sorted content.
    """
    content = tuple(content)
    if any(c < 0 for c in content):
        raise ValueError(f"content {content} has negative entries")
    if sum(shape) != sum(content):
        raise ValueError(f"shape size {sum(shape)} != content size {sum(content)}")
    key = tuple(sorted((c for c in content if c > 0), reverse=True))
    return _kostka_sorted(tuple(shape), key)


@lru_cache(maxsize=None)
def kostka_number_strip(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Kostka number by the horizontal-strip recursion; fast path, same contract.

    Peels the cells holding the largest letter: they form a horizontal strip,
    so the count is the sum over all ways to remove one of size content[-1].
    """
    if sum(shape) != sum(content):
        raise ValueError(f"shape size {sum(shape)} != content size {sum(content)}")
    if not content:
        return 1 if not shape else 0
    last = content[-1]
    rest = content[:-1]
    total = 0
    for inner in _strip_removals(shape, last):
        total += kostka_number_strip(inner, rest)
    return total


def _strip_removals(shape: tuple[int, ...], cells: int) -> Iterator[tuple[int, ...]]:
    """Inner shapes mu <= shape with shape/mu a horizontal strip of the given size."""

    def recurse(row: int, left: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if row == len(shape):
            if left == 0:
                yield prefix
            return
        below = shape[row + 1] if row + 1 < len(shape) else 0
        # mu_row may shrink from shape[row] down to below (keeps column strictness)
        for mu_row in range(shape[row], below - 1, -1):
            removed = shape[row] - mu_row
            if removed > left:
                continue
            yield from recurse(row + 1, left - removed, prefix + (mu_row,))

    for inner in recurse(0, cells, ()):
        yield tuple(p for p in inner if p > 0)


def schur_fundamental_expansion(shape: tuple[int, ...]) -> Counter:
    """Multiset of descent compositions co(Des(T)) over the standard tableaux of ``shape``.

    These are the fundamental-basis coefficients of the Schur polynomial; the
    expansion is not multiplicity free in general.
    """
    size = sum(shape)
    return Counter(co(t.descent_set(), size - 1) for t in syt_enumerate(shape))
