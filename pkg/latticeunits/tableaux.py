"""
Module for partitions, skew tableaux and filtrations of modules of cyclic p-groups.

A module of a cyclic p-group over a field of characteristic p is a direct sum of
uniserial modules, and so is recorded as a partition of its dimension. Whether a
module has a submodule with a given quotient is decided through skew tableaux
which are semistandard and satisfy the lattice property. Their number is the
Littlewood-Richardson coefficient, computed with lrcalc; `enumerate_fillings`
lists the tableaux themselves.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import lrcalc
from sympy.utilities.iterables import partitions as sympy_partitions

from latticeunits.errors import PartitionError

logger = logging.getLogger(__name__)

Partition = tuple[int, ...]

# Entries kept of the Littlewood-Richardson coefficient cache
LR_CACHE_SIZE = 65536


def make_partition(parts: Sequence[int], bound: Optional[int] = None) -> Partition:
    """
    Build a partition, checking that the parts are positive and weakly decreasing.

    :param parts: parts of the partition
    :param bound: optional upper bound for every part (the order of the cyclic group)
    :return: partition
    """
    parts = tuple(int(x) for x in parts)
    for i, part in enumerate(parts):
        if part < 1:
            err = f"Partition {list(parts)} has a non-positive part {part}"
            logger.error(err)
            raise PartitionError(err)
        if i > 0 and part > parts[i - 1]:
            err = f"Partition {list(parts)} is not weakly decreasing"
            logger.error(err)
            raise PartitionError(err)
    if bound is not None and len(parts) > 0 and parts[0] > bound:
        err = f"Partition {list(parts)} has a part exceeding the bound {bound}"
        logger.error(err)
        raise PartitionError(err)
    return parts


def parse_partition(text: str, bound: Optional[int] = None) -> Partition:
    """
    Parse a comma-separated partition such as '3,2,2'. An empty string is the
    empty partition.

    :param text: text to parse
    :param bound: optional upper bound for every part
    :return: partition
    """
    text = text.strip().strip("[]()")
    if text == "":
        return ()
    try:
        parts = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        err = f"Could not parse partition '{text}'"
        logger.error(err)
        raise PartitionError(err) from exc
    return make_partition(parts, bound=bound)


def canonical(parts: Sequence[int]) -> Partition:
    """
    Sort parts into weakly decreasing order and drop zeros

    :param parts: parts in any order
    :return: partition
    """
    return tuple(sorted((int(x) for x in parts if x != 0), reverse=True))


def size(partition: Partition) -> int:
    """
    Number of boxes, i.e. the dimension of the module

    :param partition: partition
    :return: size
    """
    return sum(partition)


def conjugate(partition: Partition) -> Partition:
    """
    Transpose of a partition

    :param partition: partition
    :return: conjugate partition
    """
    if len(partition) == 0:
        return ()
    return tuple(
        sum(1 for part in partition if part > i) for i in range(partition[0])
    )


def uniserial_sum(length: int, count: int) -> Partition:
    """
    The module consisting of `count` uniserial summands of dimension `length`

    :param length: dimension of each summand
    :param count: number of summands
    :return: partition
    """
    if count < 0 or length < 0:
        err = f"Cannot build {count} copies of a uniserial module of length {length}"
        logger.error(err)
        raise PartitionError(err)
    if length == 0:
        return ()
    return (length,) * count


def gamma(partition: Partition, j: int) -> int:
    """
    Number of uniserial summands of dimension at least j

    :param partition: partition
    :param j: positive integer
    :return: number of parts >= j
    """
    if j < 1:
        raise ValueError(f"gamma is only defined for j >= 1, got {j}")
    return sum(1 for part in partition if part >= j)


def contains(outer: Partition, inner: Partition) -> bool:
    """
    Whether the Young diagram of `inner` lies inside that of `outer`

    :param outer: outer partition
    :param inner: inner partition
    :return: boolean
    """
    if len(inner) > len(outer):
        return False
    return all(x <= y for x, y in zip(inner, outer))


def partitions(
    n: int, max_part: Optional[int] = None, max_length: Optional[int] = None
) -> Iterator[Partition]:
    """
    Iterate over the partitions of n in reverse lexicographic order

    :param n: integer to partition
    :param max_part: largest allowed part
    :param max_length: largest allowed number of parts
    :return: iterator of partitions
    """
    found = []
    for multiplicities in sympy_partitions(n, m=max_length, k=max_part):
        # sympy yields {} when the bounds leave no partition of n
        parts = tuple(
            sorted(
                (part for part, count in multiplicities.items() for _ in range(count)),
                reverse=True,
            )
        )
        if size(parts) == n:
            found.append(parts)
    yield from sorted(found, reverse=True)


def subpartitions(partition: Partition, total: int) -> Iterator[Partition]:
    """
    Iterate over the partitions contained in `partition` with `total` boxes

    :param partition: ambient partition
    :param total: number of boxes of the subpartitions
    :return: iterator of partitions
    """

    def build(row: int, remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if row >= len(partition):
            return
        room = sum(min(x, largest) for x in partition[row:])
        if room < remaining:
            return
        for part in range(min(partition[row], largest, remaining), 0, -1):
            for rest in build(row + 1, remaining - part, part):
                yield (part,) + rest

    yield from build(0, total, total)


@dataclass(frozen=True)
class SkewShape:
    """
    Skew diagram outer/inner
    """

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            err = (
                f"Inner partition {list(self.inner)} does not lie inside "
                f"outer partition {list(self.outer)}"
            )
            logger.error(err)
            raise PartitionError(err)

    def inner_part(self, row: int) -> int:
        """
        Length of the inner partition in a given row

        :param row: row index, starting at 0
        :return: inner part (0 beyond the inner partition)
        """
        return self.inner[row] if row < len(self.inner) else 0

    def row_range(self, row: int) -> range:
        """
        Columns occupied by a row of the skew diagram

        :param row: row index
        :return: range of column indices
        """
        return range(self.inner_part(row), self.outer[row])

    def boxes(self) -> list[tuple[int, int]]:
        """
        Boxes of the skew diagram in row-major order

        :return: list of (row, column)
        """
        return [
            (row, col) for row in range(len(self.outer)) for col in self.row_range(row)
        ]

    def n_boxes(self) -> int:
        """
        Number of boxes

        :return: number of boxes
        """
        return size(self.outer) - size(self.inner)

    def has_box(self, row: int, col: int) -> bool:
        """
        Whether the skew diagram has a box at (row, col)

        :param row: row index
        :param col: column index
        :return: boolean
        """
        if row < 0 or row >= len(self.outer):
            return False
        return self.inner_part(row) <= col < self.outer[row]


@dataclass(frozen=True)
class SkewTableau:
    """
    Skew diagram with a positive integer in every box, stored row-major
    """

    shape: SkewShape
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.shape.n_boxes():
            err = (
                f"Skew shape {list(self.shape.outer)}/{list(self.shape.inner)} has "
                f"{self.shape.n_boxes()} boxes but {len(self.entries)} entries given"
            )
            logger.error(err)
            raise PartitionError(err)
        if any(x < 1 for x in self.entries):
            err = f"Tableau entries must be positive, got {list(self.entries)}"
            logger.error(err)
            raise PartitionError(err)

    def grid(self) -> dict[tuple[int, int], int]:
        """
        Map from box to entry

        :return: dictionary keyed by (row, column)
        """
        return dict(zip(self.shape.boxes(), self.entries))

    def rows(self) -> list[list[int]]:
        """
        Entries row by row

        :return: list of rows
        """
        rows, position = [], 0
        for row in range(len(self.shape.outer)):
            length = len(self.shape.row_range(row))
            rows.append(list(self.entries[position : position + length]))
            position += length
        return rows

    def reading_word(self) -> list[int]:
        """
        Entries read right-to-left, top-to-bottom

        :return: reading word
        """
        return [x for row in self.rows() for x in reversed(row)]


def is_semistandard(tableau: SkewTableau) -> bool:
    """
    Whether rows weakly increase and columns strictly increase

    :param tableau: tableau
    :return: boolean
    """
    grid = tableau.grid()
    for (row, col), value in grid.items():
        if (row, col - 1) in grid and grid[(row, col - 1)] > value:
            return False
        if (row - 1, col) in grid and grid[(row - 1, col)] >= value:
            return False
    return True


def has_lattice_property(tableau: SkewTableau) -> bool:
    """
    Whether every prefix of the reading word has at least as many i's as (i+1)'s

    :param tableau: tableau
    :return: boolean
    """
    counts: dict[int, int] = {}
    for value in tableau.reading_word():
        counts[value] = counts.get(value, 0) + 1
        if value > 1 and counts[value] > counts.get(value - 1, 0):
            return False
    return True


def content(tableau: SkewTableau) -> Partition:
    """
    Number of boxes carrying each entry

    :param tableau: tableau with the lattice property
    :return: partition (nu_i = number of entries equal to i)
    """
    if not has_lattice_property(tableau):
        err = "The content of a tableau without the lattice property is not a partition"
        logger.error(err)
        raise PartitionError(err)
    word = tableau.reading_word()
    if len(word) == 0:
        return ()
    return tuple(word.count(i) for i in range(1, max(word) + 1))


def _row_fillings(
    shape: SkewShape,
    row: int,
    above: dict[int, int],
    totals: tuple[int, ...],
    target: Partition,
) -> Iterator[tuple[int, ...]]:
    """
    Fillings of one row which keep the tableau semistandard and lattice,
    given the entries of the row above and the counts used so far.
    Entries of row i (from 0) never exceed i + 1.
    """
    columns = shape.row_range(row)
    top = min(row + 1, len(target))
    row_counts = [0] * (len(target) + 1)
    values: list[int] = []

    def extend(position: int, least: int) -> Iterator[tuple[int, ...]]:
        if position == len(columns):
            yield tuple(values)
            return
        col = columns[position]
        low = max(least, above.get(col, 0) + 1)
        for value in range(low, top + 1):
            used = totals[value - 1] + row_counts[value] + 1
            if used > target[value - 1]:
                continue
            # entries of this row equal to value - 1 are read after those equal to value
            if value > 1 and used > totals[value - 2]:
                continue
            row_counts[value] += 1
            values.append(value)
            yield from extend(position + 1, value)
            values.pop()
            row_counts[value] -= 1

    yield from extend(0, 1)


def _next_state(
    shape: SkewShape, row: int, values: tuple[int, ...], totals: tuple[int, ...]
) -> tuple[dict[int, int], tuple[int, ...]]:
    above = dict(zip(shape.row_range(row), values))
    new_totals = list(totals)
    for value in values:
        new_totals[value - 1] += 1
    return above, tuple(new_totals)


def _compatible(outer: Partition, inner: Partition, target: Partition) -> bool:
    return contains(outer, inner) and size(outer) - size(inner) == size(target)


def enumerate_fillings(shape: SkewShape, target: Partition) -> list[SkewTableau]:
    """
    All semistandard fillings of a skew shape with the lattice property and the
    given content, in a deterministic order

    :param shape: skew shape
    :param target: content
    :return: list of tableaux
    """
    target = canonical(target)
    if shape.n_boxes() != size(target):
        return []
    if len(target) == 0:
        return [SkewTableau(shape=shape, entries=())]

    results = []

    def fill(row: int, above: dict[int, int], totals: tuple[int, ...], acc: list):
        if row == len(shape.outer):
            if totals == target:
                results.append(SkewTableau(shape=shape, entries=tuple(acc)))
            return
        for values in _row_fillings(shape, row, above, totals, target):
            new_above, new_totals = _next_state(shape, row, values, totals)
            fill(row + 1, new_above, new_totals, acc + list(values))

    fill(0, {}, (0,) * len(target), [])
    return results


@lru_cache(maxsize=LR_CACHE_SIZE)
def _lr_coefficient(outer: Partition, inner: Partition, target: Partition) -> int:
    return int(lrcalc.lrcoef(list(outer), list(inner), list(target)))


def lr_count(outer: Partition, inner: Partition, target: Partition) -> int:
    """
    Number of Littlewood-Richardson fillings of outer/inner with given content

    :param outer: outer partition
    :param inner: inner partition
    :param target: content
    :return: count
    """
    outer, inner, target = canonical(outer), canonical(inner), canonical(target)
    if not _compatible(outer, inner, target):
        return 0
    if len(target) == 0:
        return 1
    if len(inner) == 0:
        return int(outer == target)
    return _lr_coefficient(outer, inner, target)


def lr_exists(outer: Partition, inner: Partition, target: Partition) -> bool:
    """
    Whether a semistandard skew tableau of shape outer/inner with the lattice
    property and the given content exists. Equivalently, whether the module
    `outer` has a submodule `inner` with quotient `target`.

    :param outer: outer partition
    :param inner: inner partition
    :param target: content
    :return: boolean
    """
    return lr_count(outer, inner, target) > 0


def filtration_exists(total: Partition, factors: Sequence[Partition]) -> bool:
    """
    Whether the module `total` has a filtration whose successive quotients are
    the given factors. For cyclic groups of prime order the order of the factors
    does not matter, and the factors are handled largest first.

    :param total: module
    :param factors: successive quotients
    :return: boolean
    """
    total = canonical(total)
    factors = [canonical(x) for x in factors]
    factors = tuple(sorted((x for x in factors if len(x) > 0), reverse=True))
    if size(total) != sum(size(x) for x in factors):
        return False

    memo: dict[tuple[Partition, tuple[Partition, ...]], bool] = {}

    def search(module: Partition, remaining: tuple[Partition, ...]) -> bool:
        key = (module, remaining)
        if key in memo:
            return memo[key]
        if len(remaining) == 0:
            found = len(module) == 0
        elif len(remaining) == 1:
            found = module == remaining[0]
        else:
            top, rest = remaining[-1], remaining[:-1]
            found = any(
                lr_exists(module, sub, top) and search(sub, rest)
                for sub in subpartitions(module, size(module) - size(top))
            )
        memo[key] = found
        return found

    return search(total, factors)


def full_rectangle_height(shape: SkewShape, width: int) -> int:
    """
    Largest h such that the skew diagram contains an h x width rectangle of boxes

    :param shape: skew shape
    :param width: width of the rectangle
    :return: largest height
    """
    n_cols = shape.outer[0] if len(shape.outer) > 0 else 0
    best = 0
    for col in range(n_cols - width + 1):
        run = 0
        for row in range(len(shape.outer)):
            if all(shape.has_box(row, c) for c in range(col, col + width)):
                run += 1
                best = max(best, run)
            else:
                run = 0
    return best


def occupied_columns(shape: SkewShape) -> range:
    """
    Columns from the leftmost box to the rightmost box

    :param shape: skew shape
    :return: range of column indices
    """
    boxes = shape.boxes()
    if len(boxes) == 0:
        return range(0)
    return range(min(col for _, col in boxes), max(col for _, col in boxes) + 1)


def column_band(shape: SkewShape, n_columns: int) -> Optional[tuple[int, int]]:
    """
    Rows spanned by the boxes in the first `n_columns` occupied columns

    :param shape: skew shape
    :param n_columns: number of leading columns
    :return: (first row, last row), or None if those columns are empty
    """
    columns = occupied_columns(shape)
    leading = set(columns[:n_columns])
    rows = [row for row, col in shape.boxes() if col in leading]
    if len(rows) == 0:
        return None
    return min(rows), max(rows)


def split_left_columns(tableau: SkewTableau, n_columns: int) -> SkewTableau:
    """
    Remove the first `n_columns` occupied columns and return the tableau on the right

    :param tableau: tableau
    :param n_columns: number of columns to split off on the left
    :return: right-hand tableau
    """
    shape = tableau.shape
    columns = occupied_columns(shape)
    cut = columns.start + n_columns
    new_inner = [
        max(shape.inner_part(row), min(cut, shape.outer[row]))
        for row in range(len(shape.outer))
    ]
    right = SkewShape(outer=shape.outer, inner=canonical(new_inner))
    grid = tableau.grid()
    entries = tuple(grid[box] for box in right.boxes())
    return SkewTableau(shape=right, entries=entries)
