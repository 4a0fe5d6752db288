from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator


class MullineuxError(RuntimeError):
    pass


class InvalidPartitionError(MullineuxError):
    pass


class InvalidSymbolError(MullineuxError):
    pass


class InvalidVectorError(MullineuxError):
    pass


class SeriesError(MullineuxError):
    pass


class CountOverflowError(MullineuxError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts; build through make_partition."""

    parts: tuple[int, ...] = ()
    n: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", sum(self.parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "()"

    def part(self, row: int) -> int:
        """1-based row length, zero below the last row."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True, order=True)
class Cell:
    row: int
    col: int


FILTER_KINDS = ("all", "e_regular", "distinct", "distinct_odd", "distinct_odd_not_div", "odd_or_odd_multiple", "odd_parts")
FILTERS_NEEDING_E = {"e_regular", "distinct_odd_not_div", "odd_or_odd_multiple"}


@dataclass(frozen=True)
class PartitionFilter:
    kind: str = "all"
    e: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in FILTER_KINDS:
            raise MullineuxError(f"Unknown partition filter: {self.kind}")
        if self.kind in FILTERS_NEEDING_E:
            if self.e is None or self.e < 2:
                raise MullineuxError(f"Filter {self.kind} needs e >= 2")
        elif self.e is not None:
            raise MullineuxError(f"Filter {self.kind} takes no e")

    @classmethod
    def all(cls) -> PartitionFilter:
        return cls("all")

    @classmethod
    def e_regular(cls, e: int) -> PartitionFilter:
        return cls("e_regular", e)

    @classmethod
    def distinct(cls) -> PartitionFilter:
        return cls("distinct")

    @classmethod
    def distinct_odd(cls) -> PartitionFilter:
        return cls("distinct_odd")

    @classmethod
    def distinct_odd_not_div(cls, e: int) -> PartitionFilter:
        return cls("distinct_odd_not_div", e)

    @classmethod
    def odd_or_odd_multiple(cls, e: int) -> PartitionFilter:
        return cls("odd_or_odd_multiple", e)

    @classmethod
    def odd_parts(cls) -> PartitionFilter:
        return cls("odd_parts")

    def allows(self, part: int) -> bool:
        if self.kind in ("all", "e_regular", "distinct"):
            return True
        if self.kind in ("distinct_odd", "odd_parts"):
            return part % 2 == 1
        if self.kind == "distinct_odd_not_div":
            return part % 2 == 1 and part % self.e != 0
        # odd_or_odd_multiple
        return part % 2 == 1 or (part % self.e == 0 and (part // self.e) % 2 == 1)

    def max_repeat(self, part: int, budget: int) -> int:
        """Largest multiplicity of `part` allowed when `budget` cells remain."""
        fit = budget // part
        if self.kind == "e_regular":
            return min(fit, self.e - 1)
        if self.kind in ("distinct", "distinct_odd", "distinct_odd_not_div"):
            return min(fit, 1)
        if self.kind == "odd_or_odd_multiple" and part % 2 == 1:
            return min(fit, 1)
        return fit


@dataclass(frozen=True)
class MullineuxSymbol:
    e: int
    a: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.e < 2:
            raise InvalidSymbolError(f"Symbol parameter e must be >= 2, got {self.e}")
        if len(self.a) != len(self.r):
            raise InvalidSymbolError("Symbol rows must have equal length")
        if any(v < 1 for v in self.a) or any(v < 1 for v in self.r):
            raise InvalidSymbolError("Symbol entries must be positive integers")

    def __len__(self) -> int:
        return len(self.a)

    def to_json(self) -> dict[str, Any]:
        return {"e": self.e, "a": list(self.a), "r": list(self.r)}


@dataclass(frozen=True)
class NVector:
    e: int
    n: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.e < 2 or len(self.n) != self.e:
            raise InvalidVectorError(f"n-vector for e={self.e} needs exactly {self.e} entries")
        if sum(self.n) != 0:
            raise InvalidVectorError(f"n-vector entries must sum to 0, got {sum(self.n)}")

    def to_json(self) -> dict[str, Any]:
        return {"e": self.e, "n": list(self.n)}


@dataclass(frozen=True)
class CoreDecomposition:
    core: Partition
    weight: int
    e: int

    def to_json(self) -> dict[str, Any]:
        return {"core": self.core.to_json(), "weight": self.weight, "e": self.e}


@dataclass(frozen=True)
class Abacus:
    t: int
    beads: frozenset[int]

    def runner(self, position: int) -> int:
        return position % self.t

    def row(self, position: int) -> int:
        return position // self.t

    def to_json(self) -> dict[str, Any]:
        return {"t": self.t, "beads": sorted(self.beads)}


@dataclass(frozen=True)
class BarCoreDecomposition:
    core: Partition
    bar_weight: int
    t: int
    # False outside distinct odd parts with t = 2e, e even
    canonical_domain: bool = True

    def to_json(self) -> dict[str, Any]:
        return {"core": self.core.to_json(), "bar_weight": self.bar_weight, "t": self.t, "canonical_domain": self.canonical_domain}


@dataclass
class VerificationReport:
    check: str
    parameters: dict[str, Any]
    passed: bool
    checked: int
    counterexample: dict[str, Any] | None = None
    duration_s: float = 0.0
    claims: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class GoldenTable:
    e: int
    # grid[n - 1][w]; rows are ragged, a row stops at its last printed entry
    grid: tuple[tuple[int, ...], ...]
    provenance: str

    def cell(self, n: int, w: int) -> int | None:
        """Entry at (n, w), None where the row has no cell."""
        row = self.grid[n - 1]
        return row[w] if 0 <= w < len(row) else None

    @property
    def n_max(self) -> int:
        return len(self.grid)

    @property
    def w_max(self) -> int:
        return max((len(row) for row in self.grid), default=0) - 1
