# A bead at p slides to p - t when that spot is vacant, or a first-row pair a, t - a drops out.
# Cores are well defined for t = 2e with e even and all parts odd.
from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

from tools.common import checked
from tools.models import Abacus, BarCoreDecomposition, InvalidPartitionError, Partition, PartitionFilter
from tools.partitions import count, enumerate_partitions, is_distinct, make_partition


def abacus_display(lam: Partition, t: int) -> Abacus:
    if t < 2:
        raise InvalidPartitionError(f"t must be >= 2, got {t}")
    if not is_distinct(lam):
        raise InvalidPartitionError(f"Bar partitions need distinct parts, got {lam}")
    return Abacus(t, frozenset(lam.parts))


def abacus_partition(abacus: Abacus) -> Partition:
    return make_partition(sorted(abacus.beads, reverse=True))


def render_abacus(abacus: Abacus) -> str:
    width = len(str(abacus.t - 1))
    depth = max((abacus.row(b) for b in abacus.beads), default=0) + 1
    lines = [" ".join(str(i).rjust(width) for i in range(abacus.t))]
    for row in range(depth):
        marks = ["o" if row * abacus.t + i in abacus.beads else "." for i in range(abacus.t)]
        lines.append(" ".join(m.rjust(width) for m in marks))
    return "\n".join(lines)


def in_canonical_domain(lam: Partition, t: int) -> bool:
    return t % 4 == 0 and all(p % 2 == 1 for p in lam.parts)


def _moves(beads: frozenset[int], t: int) -> list[tuple[str, int]]:
    """Applicable operations, slides first (lowest runner, then lowest bead), then pairs."""
    slides = sorted((p % t, p) for p in beads if p >= t and p - t not in beads)
    pairs = [a for a in range(1, (t + 1) // 2) if a in beads and t - a in beads and a != t - a]
    return [("slide", p) for _, p in slides] + [("pair", a) for a in pairs]


def _apply(beads: frozenset[int], t: int, move: tuple[str, int]) -> frozenset[int]:
    kind, pos = move
    if kind == "slide":
        moved = set(beads - {pos})
        if pos - t > 0:
            moved.add(pos - t)
        return frozenset(moved)
    return beads - {pos, t - pos}


def bar_core_steps(lam: Partition, t: int, rng: random.Random | None = None) -> Iterator[Abacus]:
    """Every abacus state from the display of lam down to its t-bar core.

    Without rng the canonical order is used; with one, each step picks
    uniformly among the applicable operations.
    """
    abacus = abacus_display(lam, t)
    yield abacus
    beads = abacus.beads
    while True:
        moves = _moves(beads, t)
        if not moves:
            return
        move = rng.choice(moves) if rng is not None else moves[0]
        beads = _apply(beads, t, move)
        yield Abacus(t, beads)


def bar_core(lam: Partition, t: int, rng: random.Random | None = None) -> BarCoreDecomposition:
    steps = -1
    last = None
    for last in bar_core_steps(lam, t, rng):
        steps += 1
    assert last is not None
    core = abacus_partition(last)
    assert core.n + t * steps == lam.n
    return BarCoreDecomposition(core, steps, t, in_canonical_domain(lam, t))


def partition_count(n: int) -> int:
    return count(n)


def odd_parts_count(n: int) -> int:
    return count(n, PartitionFilter.odd_parts())


@lru_cache(maxsize=None)
def tuple_count(r: int, s: int) -> int:
    """Number of r-tuples of partitions with total size s."""
    if r < 0 or s < 0:
        raise InvalidPartitionError(f"tuple_count needs r, s >= 0, got ({r}, {s})")
    if r == 0:
        return 1 if s == 0 else 0
    total = sum(partition_count(k) * tuple_count(r - 1, s - k) for k in range(s + 1))
    return checked(total, f"tuple_count({r}, {s})")


@lru_cache(maxsize=None)
def kappa(r: int, s: int) -> int:
    """Tuples of r partitions plus an odd-parts partition tau with |tau| + 2 * (their total) = s."""
    if r < 0 or s < 0:
        raise InvalidPartitionError(f"kappa needs r, s >= 0, got ({r}, {s})")
    total = sum(tuple_count(r, k) * odd_parts_count(s - 2 * k) for k in range(s // 2 + 1))
    return checked(total, f"kappa({r}, {s})")


def same_barcore_count(mu: Partition, t: int, w: int) -> int:
    """Distinct-odd-part partitions of |mu| + t*w with t-bar core mu and bar weight w."""
    if w < 0:
        return 0
    found = 0
    for lam in enumerate_partitions(mu.n + t * w, PartitionFilter.distinct_odd()):
        dec = bar_core(lam, t)
        if dec.core == mu and dec.bar_weight == w:
            found += 1
    return found


def bar_cores(size: int, t: int) -> list[Partition]:
    """Distinct-odd-part t-bar cores of the given size."""
    return [lam for lam in enumerate_partitions(size, PartitionFilter.distinct_odd()) if bar_core(lam, t).bar_weight == 0]
