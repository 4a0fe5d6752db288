from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from tools.common import checked, parse_parts
from tools.models import Cell, InvalidPartitionError, Partition, PartitionFilter


EMPTY = Partition(())


def make_partition(parts: Iterable[int]) -> Partition:
    values = list(parts)
    while values and values[-1] == 0:
        values.pop()
    for value in values:
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidPartitionError(f"Parts must be integers, got {value!r}")
        if value < 1:
            raise InvalidPartitionError(f"Parts must be positive, got {value}")
    for left, right in zip(values, values[1:]):
        if left < right:
            raise InvalidPartitionError(f"Parts are not weakly decreasing: {left} < {right} in {tuple(values)}")
    return Partition(tuple(values))


def parse_partition(text: str) -> Partition:
    return make_partition(parse_parts(text))


def partition_from_json(text: str) -> Partition:
    value = json.loads(text)
    if not isinstance(value, list):
        raise InvalidPartitionError("Partition JSON must be an array of integers")
    return make_partition(value)


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return EMPTY
    return Partition(tuple(sum(1 for p in lam.parts if p >= col) for col in range(1, lam.parts[0] + 1)))


def is_e_regular(lam: Partition, e: int) -> bool:
    return all(count < e for count in Counter(lam.parts).values())


def is_distinct(lam: Partition) -> bool:
    return len(set(lam.parts)) == len(lam.parts)


def rim(lam: Partition) -> list[Cell]:
    """Cells (i,j) with (i+1,j+1) outside the diagram, top-right to bottom-left.

    Row i contributes columns lam_i down to max(lam_{i+1}, 1); its last cell
    sits directly above the first rim cell of row i+1.
    """
    if not lam.parts:
        raise InvalidPartitionError("The empty partition has no rim")
    cells: list[Cell] = []
    for row in range(1, len(lam) + 1):
        low = max(lam.part(row + 1), 1)
        cells.extend(Cell(row, col) for col in range(lam.part(row), low - 1, -1))
    return cells


def remove_cells(lam: Partition, cells: Iterable[Cell]) -> Partition:
    """Remove cells row by row; each row must lose a block at its right end."""
    per_row = Counter(cell.row for cell in cells)
    rows = list(lam.parts)
    for row, removed in per_row.items():
        if not 1 <= row <= len(rows) or removed > rows[row - 1]:
            raise InvalidPartitionError(f"Cannot remove {removed} cells from row {row} of {lam}")
        rows[row - 1] -= removed
    while rows and rows[-1] == 0:
        rows.pop()
    if any(r == 0 for r in rows):
        raise InvalidPartitionError(f"Removing cells from {lam} leaves an empty interior row")
    return make_partition(rows)


def _stream(n: int, max_part: int, flt: PartitionFilter) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for value in range(min(n, max_part), 0, -1):
        if not flt.allows(value):
            continue
        for mult in range(flt.max_repeat(value, n), 0, -1):
            head = (value,) * mult
            for rest in _stream(n - value * mult, value - 1, flt):
                yield head + rest


def enumerate_partitions(n: int, flt: PartitionFilter | None = None) -> Iterator[Partition]:
    if n < 0:
        raise InvalidPartitionError(f"Cannot enumerate partitions of a negative number ({n})")
    flt = flt or PartitionFilter.all()
    for parts in _stream(n, n, flt):
        yield Partition(parts)


@lru_cache(maxsize=None)
def count(n: int, flt: PartitionFilter | None = None) -> int:
    total = 0
    for _ in enumerate_partitions(n, flt):
        total += 1
    return checked(total, f"partition count for n={n}")


def self_conjugate_from_hooks(hooks: Sequence[int]) -> Partition:
    """Self-conjugate partition whose diagonal hook lengths are `hooks`.

    Hook h on the d-th diagonal cell has arm = leg = (h-1)/2, so the first
    d rows are arm+d and lower rows count the columns reaching them.
    """
    ordered = sorted(hooks, reverse=True)
    if any(h % 2 == 0 or h < 1 for h in ordered) or len(set(ordered)) != len(ordered):
        raise InvalidPartitionError(f"Diagonal hooks must be distinct odd positives, got {tuple(hooks)}")
    arms = [(h - 1) // 2 for h in ordered]
    d = len(arms)
    rows = [arms[i] + i + 1 for i in range(d)]
    depth = rows[0] if rows else 0
    for row in range(d + 1, depth + 1):
        rows.append(sum(1 for i in range(d) if arms[i] + i + 1 >= row))
    return make_partition(rows)


def self_conjugate_partitions(n: int) -> list[Partition]:
    found = [self_conjugate_from_hooks(p.parts) for p in enumerate_partitions(n, PartitionFilter.distinct_odd())]
    return sorted(found, reverse=True)
