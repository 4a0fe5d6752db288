# n-vectors: with m*e beta-set beads, runner i holding c_i beads gives n_i = c_i - m.
from __future__ import annotations

from typing import Literal, Sequence

from tools.models import CoreDecomposition, InvalidPartitionError, InvalidSymbolError, InvalidVectorError, MullineuxSymbol, NVector, Partition
from tools.mullineux import epsilon, is_fixed_symbol
from tools.partitions import make_partition, remove_cells, rim, self_conjugate_partitions


def beta_set(lam: Partition, beads: int | None = None) -> set[int]:
    beads = len(lam) if beads is None else beads
    if beads < len(lam):
        raise InvalidPartitionError(f"{beads} beads cannot display {lam} with {len(lam)} parts")
    return {lam.part(j) - j + beads for j in range(1, beads + 1)}


def partition_from_beta(beta: set[int] | Sequence[int]) -> Partition:
    ordered = sorted(beta, reverse=True)
    size = len(ordered)
    return make_partition([b - (size - j) for j, b in enumerate(ordered, start=1)])


def is_e_core(lam: Partition, e: int) -> bool:
    beta = beta_set(lam)
    return all(b - e in beta for b in beta if b >= e)


def _removable_hook(lam: Partition, e: int) -> list | None:
    """Highest rim e-hook: e rim cells from some row end whose removal keeps a diagram."""
    cells = rim(lam)
    starts: dict[int, int] = {}
    for idx, cell in enumerate(cells):
        starts.setdefault(cell.row, idx)
    for row in range(1, len(lam) + 1):
        segment = cells[starts[row]: starts[row] + e]
        if len(segment) < e:
            return None
        last = segment[-1]
        if last.col - 1 >= lam.part(last.row + 1):
            return segment
    return None


def _core_by_rim(lam: Partition, e: int) -> CoreDecomposition:
    weight = 0
    current = lam
    while current.parts:
        hook = _removable_hook(current, e)
        if hook is None:
            break
        current = remove_cells(current, hook)
        weight += 1
    return CoreDecomposition(current, weight, e)


def _core_by_abacus(lam: Partition, e: int) -> CoreDecomposition:
    beta = beta_set(lam)
    weight = 0
    while True:
        movable = [b for b in sorted(beta) if b >= e and b - e not in beta]
        if not movable:
            break
        beta.remove(movable[0])
        beta.add(movable[0] - e)
        weight += 1
    return CoreDecomposition(partition_from_beta(beta), weight, e)


def e_core(lam: Partition, e: int, strategy: Literal["rim", "abacus"] = "rim") -> CoreDecomposition:
    if e < 2:
        raise InvalidPartitionError(f"e must be >= 2, got {e}")
    if strategy == "rim":
        return _core_by_rim(lam, e)
    if strategy == "abacus":
        return _core_by_abacus(lam, e)
    raise InvalidPartitionError(f"Unknown core strategy: {strategy}")


def core_size_from_nvector(v: NVector | Sequence[int], e: int | None = None) -> int:
    if isinstance(v, NVector):
        e, entries = v.e, v.n
    else:
        entries = tuple(v)
        e = len(entries) if e is None else e
        if sum(entries) != 0:
            raise InvalidVectorError(f"n-vector entries must sum to 0, got {sum(entries)}")
    squares = sum(x * x for x in entries)
    size = e * squares // 2 + sum(i * x for i, x in enumerate(entries))
    assert size >= 0, f"negative core size {size} from {entries}"
    return size


def default_beads(lam: Partition, e: int) -> int:
    return e * (len(lam) // e + 1)


def nvector_from_core(mu: Partition, e: int, beads: int | None = None) -> NVector:
    if not is_e_core(mu, e):
        raise InvalidPartitionError(f"{mu} is not an {e}-core (positive {e}-weight)")
    beads = default_beads(mu, e) if beads is None else beads
    if beads % e or beads < len(mu):
        raise InvalidPartitionError(f"Bead count {beads} must be a multiple of {e} covering {len(mu)} parts")
    level = beads // e
    runners = [0] * e
    for b in beta_set(mu, beads):
        runners[b % e] += 1
    return NVector(e, tuple(c - level for c in runners))


def core_from_nvector(v: NVector) -> Partition:
    level = max(0, -min(v.n))
    beta = {i + k * v.e for i, x in enumerate(v.n) for k in range(level + x)}
    return partition_from_beta(beta)


def nvector_from_symbol(sym: MullineuxSymbol) -> NVector:
    if not is_fixed_symbol(sym):
        raise InvalidSymbolError(f"Symbol {sym.to_json()} is not the symbol of a Mullineux fixed point")
    counts = [0] * sym.e
    for a in sym.a:
        eps = epsilon(a, sym.e)
        assert (a + eps) % 2 == 0
        counts[((a - eps) // 2) % sym.e] += 1
        counts[((-a - eps) // 2) % sym.e] -= 1
    return NVector(sym.e, tuple(counts))


def weight_from_symbol(sym: MullineuxSymbol) -> int:
    surplus = sum(sym.a) - core_size_from_nvector(nvector_from_symbol(sym))
    if surplus < 0 or surplus % sym.e:
        raise InvalidSymbolError(f"Symbol {sym.to_json()} gives non-integral weight {surplus}/{sym.e}")
    return surplus // sym.e


def self_conjugate_cores(n: int, e: int) -> list[Partition]:
    return [mu for mu in self_conjugate_partitions(n) if is_e_core(mu, e)]
