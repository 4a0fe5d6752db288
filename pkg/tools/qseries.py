from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Literal

from tools.common import checked
from tools.models import MullineuxError, PartitionFilter, SeriesError
from tools.partitions import count


@dataclass(frozen=True)
class Series1:
    N: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.N < 0 or len(self.coeffs) != self.N + 1:
            raise SeriesError(f"Series truncated at {self.N} needs {self.N + 1} coefficients, got {len(self.coeffs)}")
        for n, c in enumerate(self.coeffs):
            checked(c, f"coefficient of q^{n}")

    @classmethod
    def from_list(cls, coeffs: Iterable[int], N: int) -> Series1:
        values = list(coeffs)[: N + 1]
        values += [0] * (N + 1 - len(values))
        return cls(N, tuple(values))

    @classmethod
    def one(cls, N: int) -> Series1:
        return cls.from_list([1], N)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n <= self.N else 0

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.N:
            raise SeriesError(f"Coefficient q^{n} is outside the truncation 0..{self.N}")
        return self.coeffs[n]

    def truncate(self, N: int) -> Series1:
        return Series1.from_list(self.coeffs, min(N, self.N))

    def add(self, other: Series1) -> Series1:
        N = min(self.N, other.N)
        return Series1(N, tuple(self[n] + other[n] for n in range(N + 1)))

    def neg(self) -> Series1:
        return Series1(self.N, tuple(-c for c in self.coeffs))

    def mul(self, other: Series1) -> Series1:
        N = min(self.N, other.N)
        out = [0] * (N + 1)
        for i, a in enumerate(self.coeffs[: N + 1]):
            if a:
                for j in range(N - i + 1):
                    out[i + j] += a * other.coeffs[j]
        return Series1(N, tuple(out))

    def div(self, other: Series1) -> Series1:
        lead = other.coeffs[0]
        if lead not in (1, -1):
            raise SeriesError(f"Divisor must have constant term +-1 to stay integral, got {lead}")
        N = min(self.N, other.N)
        out = [0] * (N + 1)
        for k in range(N + 1):
            acc = self.coeffs[k] - sum(other.coeffs[j] * out[k - j] for j in range(1, k + 1))
            out[k] = acc * lead
        return Series1(N, tuple(out))

    def pow(self, k: int) -> Series1:
        if k < 0:
            return Series1.one(self.N).div(self.pow(-k))
        result = Series1.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result.mul(base)
            base = base.mul(base)
            k >>= 1
        return result

    def substitute_sign(self) -> Series1:
        """q -> -q."""
        return Series1(self.N, tuple(c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)))

    def dilate(self, k: int) -> Series1:
        """q -> q^k, keeping the same truncation."""
        if k < 1:
            raise SeriesError(f"Dilation factor must be >= 1, got {k}")
        out = [0] * (self.N + 1)
        for n, c in enumerate(self.coeffs):
            if n * k > self.N:
                break
            out[n * k] = c
        return Series1(self.N, tuple(out))

    def to_json(self) -> dict[str, Any]:
        return {"N": self.N, "coeffs": list(self.coeffs)}


@dataclass(frozen=True)
class Series2:
    """Coefficients of x^w q^n, stored as one q-series per power of x."""

    N: int
    columns: tuple[Series1, ...]

    def coefficient(self, w: int, n: int) -> int:
        if w < 0 or w >= len(self.columns):
            return 0
        return self.columns[w][n]

    def column(self, w: int) -> Series1:
        if 0 <= w < len(self.columns):
            return self.columns[w]
        return Series1.from_list([], self.N)

    def at_x_one(self) -> Series1:
        total = Series1.from_list([], self.N)
        for col in self.columns:
            total = total.add(col)
        return total

    def to_rows(self) -> list[dict[str, int]]:
        rows = [
            {"w": w, "n": n, "c": c}
            for w, col in enumerate(self.columns)
            for n, c in enumerate(col.coeffs)
            if c
        ]
        return sorted(rows, key=lambda row: (row["n"], row["w"]))

    def to_json(self) -> list[dict[str, int]]:
        return self.to_rows()


def _require_e(e: int) -> None:
    if e < 2:
        raise SeriesError(f"e must be >= 2, got {e}")


def pochhammer(sign: int, a: int, b: int, N: int) -> Series1:
    """prod_{k>=0} (1 + sign * q^(a + k*b)), truncated at q^N."""
    if sign not in (1, -1) or a < 1 or b < 1:
        raise SeriesError(f"pochhammer needs sign +-1 and a, b >= 1, got ({sign}, {a}, {b})")
    if N < 0:
        raise SeriesError(f"Truncation must be >= 0, got {N}")
    out = [0] * (N + 1)
    out[0] = 1
    for d in range(a, N + 1, b):
        for n in range(N, d - 1, -1):
            out[n] += sign * out[n - d]
    return Series1(N, tuple(out))


def chi(N: int) -> Series1:
    """(-q; q^2)_inf, distinct odd parts."""
    return pochhammer(1, 1, 2, N)


def euler(b: int, N: int) -> Series1:
    """(q^b; q^b)_inf."""
    return pochhammer(-1, b, b, N)


@lru_cache(maxsize=None)
def mf_series(e: int, N: int) -> Series1:
    _require_e(e)
    if e % 2:
        return chi(N).div(pochhammer(1, e, 2 * e, N))
    return chi(N).div(pochhammer(-1, e, 2 * e, N))


def mf_alternating(e: int, N: int, method: Literal["substitute", "product"] = "substitute") -> Series1:
    _require_e(e)
    if method == "substitute":
        return mf_series(e, N).substitute_sign()
    if method == "product":
        return pochhammer(1, e, e, N).div(pochhammer(1, 1, 1, N))
    raise SeriesError(f"Unknown method for the alternating series: {method}")


def mf_parts_product(e: int, N: int) -> Series1:
    """Counts of the partitions the fixed points are equinumerous with, by enumeration.

    Odd e: distinct odd parts not divisible by e. Even e: distinct odd parts
    plus any number of parts that are e times an odd number.
    """
    _require_e(e)
    flt = PartitionFilter.distinct_odd_not_div(e) if e % 2 else PartitionFilter.odd_or_odd_multiple(e)
    return Series1(N, tuple(count(n, flt) for n in range(N + 1)))


@lru_cache(maxsize=None)
def sc_series(e: int, N: int) -> Series1:
    _require_e(e)
    if e % 2 == 0:
        return chi(N).mul(euler(2 * e, N).pow(e // 2))
    return chi(N).mul(euler(2 * e, N).pow((e - 1) // 2)).div(pochhammer(1, e, 2 * e, N))


@lru_cache(maxsize=None)
def f_series(e: int, N: int) -> Series1:
    if e < 2 or e % 2:
        raise SeriesError(f"f_e is defined for even e >= 2, got {e}")
    denominator = euler(2, N).pow(e // 2).mul(pochhammer(-1, 1, 2, N))
    return Series1.one(N).div(denominator)


@lru_cache(maxsize=None)
def g_series(e: int, N: int) -> Series1:
    if e < 3 or e % 2 == 0:
        raise SeriesError(f"g_e is defined for odd e >= 3, got {e}")
    return euler(1, N).pow(-((e - 1) // 2))


def mf_by_weight(e: int, w: int, n: int) -> int:
    """Number of e-fixed points of n with e-weight w, from the closed form."""
    _require_e(e)
    if w < 0 or n < e * w:
        return 0
    rest = n - e * w
    sc = sc_series(e, n)[rest]
    if e % 2 == 0:
        return checked(f_series(e, n)[w] * sc, f"mf_{e},{w}({n})")
    if w % 2:
        return 0
    return checked(g_series(e, n)[w // 2] * sc, f"mf_{e},{w}({n})")


def _times_geometric(grid: list[list[int]], i: int, j: int, N: int) -> None:
    """Multiply in place by 1/(1 - x^i q^j)."""
    for w in range(i, len(grid)):
        for n in range(j, N + 1):
            grid[w][n] += grid[w - i][n - j]


def _two_var_product(e: int, N: int) -> list[list[int]]:
    width = N // e + 1
    grid = [[0] * (N + 1) for _ in range(width)]
    grid[0] = list(sc_series(e, N).coeffs)
    # every factor is 1/(1 - x^m q^(e*m)), so the x-degree never passes N // e
    even_copies = e // 2 if e % 2 == 0 else (e - 1) // 2
    for m in range(2, width, 2):
        for _ in range(even_copies):
            _times_geometric(grid, m, e * m, N)
    if e % 2 == 0:
        for m in range(1, width, 2):
            _times_geometric(grid, m, e * m, N)
    return grid


def _two_var_reindex(e: int, N: int) -> list[list[int]]:
    width = N // e + 1
    sc = sc_series(e, N)
    grid = [[0] * (N + 1) for _ in range(width)]
    if e % 2 == 0:
        multiplier = f_series(e, N)
        weights = {w: multiplier[w] for w in range(width)}
    else:
        multiplier = g_series(e, N)
        weights = {w: (multiplier[w // 2] if w % 2 == 0 else 0) for w in range(width)}
    for w, factor in weights.items():
        for n in range(e * w, N + 1):
            grid[w][n] = factor * sc[n - e * w]
    return grid


def mf_two_var(e: int, N: int, method: Literal["product", "reindex"] = "product") -> Series2:
    _require_e(e)
    if method == "product":
        grid = _two_var_product(e, N)
    elif method == "reindex":
        grid = _two_var_reindex(e, N)
    else:
        raise SeriesError(f"Unknown method for the two-variable series: {method}")
    return Series2(N, tuple(Series1(N, tuple(row)) for row in grid))


def build_series(name: str, e: int, N: int) -> Series1 | Series2:
    builders = {
        "mf": mf_series,
        "mf-alt": mf_alternating,
        "sc": sc_series,
        "f": f_series,
        "g": g_series,
        "mf2": mf_two_var,
    }
    if name not in builders:
        raise MullineuxError(f"Unknown series {name!r}; choose from {', '.join(builders)}")
    return builders[name](e, N)
