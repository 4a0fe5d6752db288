from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from tools.models import Cell, InvalidPartitionError, InvalidSymbolError, MullineuxSymbol, Partition, PartitionFilter
from tools.partitions import EMPTY, enumerate_partitions, is_e_regular, make_partition, remove_cells, rim


def epsilon(a: int, e: int) -> int:
    return 0 if a % e == 0 else 1


def epsilons(a: Sequence[int], e: int) -> tuple[int, ...]:
    return tuple(epsilon(v, e) for v in a)


def e_rim_cells(lam: Partition, e: int) -> list[Cell]:
    """Segments of e rim cells; after each, restart at the rightmost rim cell
    of the row below the segment's last cell. Stops once a segment ends in
    the last row, so the final segment may be short."""
    cells = rim(lam)
    first_in_row: dict[int, int] = {}
    for idx, cell in enumerate(cells):
        first_in_row.setdefault(cell.row, idx)
    taken: list[Cell] = []
    idx = 0
    while True:
        segment = cells[idx: idx + e]
        taken.extend(segment)
        end_row = segment[-1].row
        if end_row == len(lam):
            return taken
        idx = first_in_row[end_row + 1]


def compute_symbol(lam: Partition, e: int) -> MullineuxSymbol:
    if e < 2:
        raise InvalidSymbolError(f"e must be >= 2, got {e}")
    if not is_e_regular(lam, e):
        raise InvalidPartitionError(f"{lam} is not {e}-regular")
    a: list[int] = []
    r: list[int] = []
    current = lam
    while current.parts:
        layer = e_rim_cells(current, e)
        a.append(len(layer))
        r.append(len(current))
        current = remove_cells(current, layer)
    return MullineuxSymbol(e, tuple(a), tuple(r))


def validate_symbol(a: Sequence[int], r: Sequence[int], e: int) -> bool:
    """Mullineux's criteria for a two-row array to be the symbol of an e-regular partition."""
    if e < 2 or len(a) != len(r):
        return False
    if any(not isinstance(v, int) or v < 1 for v in list(a) + list(r)):
        return False
    if not a:
        return True
    for i in range(len(a) - 1):
        dr = r[i] - r[i + 1]
        da = a[i] - a[i + 1]
        eps_next = epsilon(a[i + 1], e)
        if not 0 <= dr <= e:
            return False
        if not dr + eps_next <= da < dr + eps_next + e:
            return False
        if dr == 0 and a[i] % e != 0:
            return False
        if dr == e and a[i] % e == 0:
            return False
    if not 0 <= a[-1] - r[-1] < e:
        return False
    if not 1 <= r[-1] <= e:
        return False
    if r[-1] == e and a[-1] - r[-1] <= 0:
        return False
    return True


def make_symbol(e: int, a: Sequence[int], r: Sequence[int]) -> MullineuxSymbol:
    if not validate_symbol(a, r, e):
        raise InvalidSymbolError(f"Not a Mullineux symbol for e={e}: a={tuple(a)}, r={tuple(r)}")
    return MullineuxSymbol(e, tuple(a), tuple(r))


def image_symbol(sym: MullineuxSymbol) -> MullineuxSymbol:
    s = tuple(a - r + epsilon(a, sym.e) for a, r in zip(sym.a, sym.r))
    return MullineuxSymbol(sym.e, sym.a, s)


def _add_layer(inner: Partition, a: int, r: int, e: int) -> list[int]:
    """Rows of the partition whose e-rim has a cells over r rows and leaves `inner`.

    Segments are placed bottom-up. A segment of `size` cells ending in row t
    and starting in row s has first row size + inner_t - (t - s); its other
    rows are fixed at inner_{j-1} + 1. The start row is the first s (moving
    up) where that first row still fits under inner_{s-1} + 1.
    """
    if r < len(inner):
        raise InvalidSymbolError(f"Layer touches {r} rows but the inner partition already has {len(inner)}")
    segments = -(-a // e)
    sizes = [a - e * (segments - 1)] + [e] * (segments - 1)
    if sizes[0] < e and inner.part(r) != 0:
        raise InvalidSymbolError(f"Short final segment of {sizes[0]} cells cannot leave row {r} nonempty")
    rows = [0] * (r + 1)
    t = r
    for size in sizes:
        if t < 1:
            raise InvalidSymbolError(f"Layer ({a}, {r}) needs more rows than it touches")
        base = size + inner.part(t) - t

        def head(s: int) -> int:
            return base + s

        if head(t) < inner.part(t) + 1:
            raise InvalidSymbolError(f"Segment of {size} cells cannot end in row {t}")
        s = t
        while s > 1 and head(s) > inner.part(s - 1) + 1:
            s -= 1
        rows[s] = head(s)
        for j in range(s + 1, t + 1):
            rows[j] = inner.part(j - 1) + 1
        t = s - 1
    if t != 0:
        raise InvalidSymbolError(f"Layer ({a}, {r}) does not reach the first row")
    return rows[1:]


def reconstruct(sym: MullineuxSymbol) -> Partition:
    current = EMPTY
    for a, r in zip(reversed(sym.a), reversed(sym.r)):
        try:
            current = make_partition(_add_layer(current, a, r, sym.e))
        except InvalidPartitionError as exc:
            raise InvalidSymbolError(f"No partition realizes {sym.to_json()}: {exc}") from exc
    if compute_symbol(current, sym.e) != sym:
        raise InvalidSymbolError(f"No partition realizes {sym.to_json()}")
    return current


def mullineux_map(lam: Partition, e: int) -> Partition:
    return reconstruct(image_symbol(compute_symbol(lam, e)))


def is_fixed_symbol(sym: MullineuxSymbol) -> bool:
    return all(2 * r == a + epsilon(a, sym.e) for a, r in zip(sym.a, sym.r))


def is_fixed(lam: Partition, e: int) -> bool:
    sym = compute_symbol(lam, e)
    direct = reconstruct(image_symbol(sym)) == lam
    assert direct == is_fixed_symbol(sym), f"fixed-point criteria disagree on {lam} for e={e}"
    return direct


@lru_cache(maxsize=None)
def fixed_points(n: int, e: int) -> tuple[Partition, ...]:
    """All e-regular partitions of n fixed by m_e, lexicographically decreasing."""
    if n < 0:
        raise InvalidPartitionError(f"n must be >= 0, got {n}")
    return tuple(lam for lam in enumerate_partitions(n, PartitionFilter.e_regular(e)) if is_fixed_symbol(compute_symbol(lam, e)))


def in_me_set(parts: Sequence[int], e: int) -> bool:
    for a in parts:
        if (a % 2 == 0) != (a % e == 0):
            return False
    for a, b in zip(parts, parts[1:]):
        gap = a - b
        if not 0 <= gap <= 2 * e:
            return False
        if gap == 0 and a % 2 == 1:
            return False
        if gap == 2 * e and a % 2 == 0:
            return False
    return not parts or parts[-1] < 2 * e


def enumerate_Me(n: int, e: int) -> list[Partition]:
    return [lam for lam in enumerate_partitions(n) if in_me_set(lam.parts, e)]
