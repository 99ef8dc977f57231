"""Two-row tableau combinatorics: the oracle side that owns no linear algebra.

Everything here is exhaustive enumeration over tiny search spaces, which
is exactly what an independent oracle should be.  The only closed form
(the two-row standard tableau count) is cross-validated against the
enumeration by the test suite before anything relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, prod

__all__ = [
    "two_row_partitions",
    "StandardTableau",
    "standard_tableaux",
    "standard_tableau_count",
    "kostka",
    "dimension_identity_check",
]

Partition = tuple[int, int]


def _check_partition(shape) -> Partition:
    if len(shape) != 2:
        raise ValueError("only two-row shapes are supported")
    l1, l2 = shape
    if l1 < l2 or l2 < 0:
        raise ValueError(f"not a partition: {shape}")
    return (l1, l2)


def two_row_partitions(total: int) -> list[Partition]:
    """All (l1, l2) with l1 + l2 = total and l1 >= l2 >= 0, l1 descending."""
    if total < 0:
        raise ValueError("total must be nonnegative")
    return [(total - k, k) for k in range(total // 2 + 1)]


@dataclass(frozen=True)
class StandardTableau:
    """Rows of a standard filling: entries 1..n, rows and columns increasing."""

    shape: Partition
    row1: tuple[int, ...]
    row2: tuple[int, ...]

    def __post_init__(self):
        l1, l2 = _check_partition(self.shape)
        n = l1 + l2
        if len(self.row1) != l1 or len(self.row2) != l2:
            raise ValueError("row lengths do not match the shape")
        if sorted(self.row1 + self.row2) != list(range(1, n + 1)):
            raise ValueError("entries must be exactly 1..n")
        if any(a >= b for a, b in zip(self.row1, self.row1[1:])):
            raise ValueError("first row must increase")
        if any(a >= b for a, b in zip(self.row2, self.row2[1:])):
            raise ValueError("second row must increase")
        if any(self.row1[c] >= self.row2[c] for c in range(l2)):
            raise ValueError("columns must increase")

    def column_reading_permutation(self) -> tuple[int, ...]:
        """The permutation sigma with sigma(2a-1), sigma(2a) the a-th column.

        Columns of height two are read top-bottom, left to right, then the
        remaining first-row cells left to right.  Returned 1-based as a
        tuple sigma with sigma[k-1] = sigma(k).
        """
        l1, l2 = self.shape
        out = []
        for c in range(l2):
            out.append(self.row1[c])
            out.append(self.row2[c])
        out.extend(self.row1[l2:])
        return tuple(out)


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[StandardTableau, ...]:
    """Exhaustive enumeration, ordered by row-reading word."""
    l1, l2 = _check_partition(shape)
    n = l1 + l2
    found = []
    for row2 in combinations(range(1, n + 1), l2):
        row1 = tuple(sorted(set(range(1, n + 1)) - set(row2)))
        if all(row1[c] < row2[c] for c in range(l2)):
            found.append(StandardTableau((l1, l2), row1, row2))
    found.sort(key=lambda t: t.row1 + t.row2)
    return tuple(found)


def standard_tableau_count(shape: Partition) -> int:
    """Closed form C(n, l2) * (l1 - l2 + 1) / (l1 + 1) for two-row shapes."""
    l1, l2 = _check_partition(shape)
    return comb(l1 + l2, l2) * (l1 - l2 + 1) // (l1 + 1)


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard fillings of shape with the given content.

    Entries come from 1..len(content) with entry i used content[i-1]
    times; rows weakly increase and columns strictly increase.  Counted by
    direct enumeration: pick the multiset of the second row, sort both
    rows, check the column condition.
    """
    l1, l2 = _check_partition(shape)
    if l1 + l2 != sum(content):
        raise ValueError("shape size must equal the content total")
    if any(k < 0 for k in content):
        raise ValueError("content entries must be nonnegative")
    letters = []
    for i, k in enumerate(content, start=1):
        letters.extend([i] * k)
    count = 0
    seen = set()
    for picks in combinations(range(len(letters)), l2):
        row2 = tuple(letters[p] for p in picks)
        if row2 in seen:
            continue
        seen.add(row2)
        remaining = list(letters)
        for p in reversed(picks):
            del remaining[p]
        row1 = tuple(remaining)
        # letters is sorted, so both rows weakly increase; only the strict
        # column condition can fail
        if all(row1[c] < row2[c] for c in range(l2)):
            count += 1
    return count


def dimension_identity_check(content: tuple[int, ...]) -> bool:
    """prod(n_i + 1) == sum over two-row shapes of kostka * (l1 - l2 + 1).

    Both sides count a component dimension through independent routes; a
    mismatch can only mean an implementation bug.
    """
    total = sum(content)
    lhs = prod(k + 1 for k in content)
    rhs = sum(
        kostka(shape, tuple(content)) * (shape[0] - shape[1] + 1)
        for shape in two_row_partitions(total)
    )
    return lhs == rhs
