from __future__ import annotations

import random
import time
from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from tqdm import tqdm

from settings import (
    BARCORE_E_RANGE,
    BARCORE_SIZE_MAX,
    BLOCK_E_RANGE,
    BLOCK_N_MAX,
    CORE_SIZE_MAX,
    DEFAULT_E_RANGE,
    INVOLUTION_N_MAX,
    KAPPA_E_RANGE,
    MAIN_E_RANGE,
    MAP_N_MAX,
    ROUNDTRIP_N_MAX,
    SC_N_MAX,
)
from utils import log_info, log_warn

from tools.barcores import bar_core, bar_core_steps, kappa, tuple_count
from tools.common import worker_count
from tools.cores import core_from_nvector, core_size_from_nvector, e_core, is_e_core, nvector_from_core, nvector_from_symbol, self_conjugate_cores, weight_from_symbol
from tools.golden import ALTERNATING_PREFIXES, CUBIC_PARTITIONS_PREFIX, OEIS_LABELS, PRINTED_TABLE_E4, SELF_CONJUGATE_4_CORES_PREFIX, table_for
from tools.models import GoldenTable, MullineuxError, PartitionFilter, VerificationReport
from tools.mullineux import compute_symbol, enumerate_Me, fixed_points, image_symbol, is_fixed, mullineux_map, reconstruct, validate_symbol
from tools.partitions import conjugate, enumerate_partitions, is_e_regular, make_partition
from tools.qseries import f_series, g_series, mf_alternating, mf_by_weight, mf_parts_product, mf_series, mf_two_var, sc_series


CLAIMS = (
    "involution",
    "fixed-point-symbols",
    "me-set-cardinality",
    "main-result-odd",
    "main-result-even",
    "alternating-product",
    "self-conjugate-cores",
    "count-by-weight",
    "kappa-blocks",
    "odd-weight-vanishes",
    "nvector-from-symbol",
    "core-size-formula",
    "barcore-count",
    "barcore-example",
    "multipliers",
    "joint-generating-function",
    "weight-table",
    "symbol-roundtrip",
)

BARCORE_EXAMPLE = ((23, 21, 17, 13, 11, 9, 7), 6, (9, 5, 3), 14)


class _Checker:
    """Counts checks and keeps the smallest failing case by (n, w)."""

    def __init__(self) -> None:
        self.checked = 0
        self.failures = 0
        self.worst: tuple[tuple[int, int], dict[str, Any]] | None = None

    def expect(self, actual: Any, expected: Any, n: int = 0, w: int = 0, **detail: Any) -> bool:
        self.checked += 1
        if actual == expected:
            return True
        self.failures += 1
        key = (n, w)
        if self.worst is None or key < self.worst[0]:
            self.worst = (key, {"n": n, "w": w, "actual": _jsonable(actual), "expected": _jsonable(expected), **{k: _jsonable(v) for k, v in detail.items()}})
        return False

    def report(self, check: str, parameters: dict[str, Any], started: float, notes: list[str] | None = None) -> VerificationReport:
        return VerificationReport(
            check=check,
            parameters=parameters,
            passed=self.failures == 0,
            checked=self.checked,
            counterexample=self.worst[1] if self.worst else None,
            duration_s=round(time.perf_counter() - started, 3),
            claims=list(SUITES[check].claims) if check in SUITES else [],
            notes=notes or [],
        )


def _jsonable(value: Any) -> Any:
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class Suite:
    name: str
    runner: Callable[..., VerificationReport]
    claims: tuple[str, ...]
    description: str


SUITES: dict[str, Suite] = {}


def suite(name: str, claims: Sequence[str], description: str) -> Callable[[Callable[..., VerificationReport]], Callable[..., VerificationReport]]:
    def register(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
        unknown = set(claims) - set(CLAIMS)
        if unknown:
            raise MullineuxError(f"Suite {name} claims unknown items: {sorted(unknown)}")
        SUITES[name] = Suite(name, fn, tuple(claims), description)
        return fn

    return register


def _params(e_range: Sequence[int], n_max: int) -> dict[str, Any]:
    return {"e_range": list(e_range), "n_max": n_max}


@suite("involution", ["involution", "fixed-point-symbols"], "m_e is an involution on e-regular partitions")
def verify_involution(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    e_range = e_range or DEFAULT_E_RANGE
    n_max = INVOLUTION_N_MAX if n_max is None else n_max
    started = time.perf_counter()
    chk = _Checker()
    for e in e_range:
        for n in range(n_max + 1):
            for lam in enumerate_partitions(n, PartitionFilter.e_regular(e)):
                image = mullineux_map(lam, e)
                chk.expect(is_e_regular(image, e) and image.n == n, True, n, e=e, partition=lam)
                chk.expect(mullineux_map(image, e), lam, n, e=e, partition=lam)
                if e == 2:
                    chk.expect(image, lam, n, e=e, partition=lam)
                if image == lam:
                    chk.expect(is_fixed(lam, e), True, n, e=e, partition=lam)
    return chk.report("involution", _params(e_range, n_max), started)


@suite("me-set", ["me-set-cardinality"], "|M_e(n)| equals the number of fixed points")
def verify_me_set(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    e_range = e_range or DEFAULT_E_RANGE
    n_max = MAP_N_MAX if n_max is None else n_max
    started = time.perf_counter()
    chk = _Checker()
    for e in e_range:
        for n in range(n_max + 1):
            chk.expect(len(enumerate_Me(n, e)), len(fixed_points(n, e)), n, e=e)
    return chk.report("me-set", _params(e_range, n_max), started)


@suite("main", ["main-result-odd", "main-result-even", "alternating-product"], "MF_e(q) coefficients against fixed-point counts")
def verify_main(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    e_range = e_range or MAIN_E_RANGE
    n_max = MAP_N_MAX if n_max is None else n_max
    started = time.perf_counter()
    chk = _Checker()
    notes: list[str] = []
    for e in e_range:
        series = mf_series(e, n_max)
        parts = mf_parts_product(e, n_max)
        alt_sub = mf_alternating(e, n_max, "substitute")
        alt_prod = mf_alternating(e, n_max, "product")
        for n in range(n_max + 1):
            mf = len(fixed_points(n, e))
            chk.expect(series[n], mf, n, e=e, route="product")
            chk.expect(parts[n], mf, n, e=e, route="parts")
            chk.expect(alt_prod[n], (-1) ** n * mf, n, e=e, route="alternating")
            chk.expect(alt_sub[n], alt_prod[n], n, e=e, route="alternating-substitute")
        prefix = ALTERNATING_PREFIXES.get(e)
        if prefix:
            for n, value in enumerate(prefix[: n_max + 1]):
                chk.expect(alt_prod[n], value, n, e=e, route="golden-prefix")
            notes.append(f"e={e}: alternating prefix of {min(len(prefix), n_max + 1)} terms matched against {OEIS_LABELS[f'alt{e}']}")
    return chk.report("main", _params(e_range, n_max), started, notes)


def _blocks(n: int, e: int) -> Counter:
    """Fixed points of n keyed by (e-core, e-weight)."""
    found: Counter = Counter()
    for lam in fixed_points(n, e):
        dec = e_core(lam, e)
        found[(dec.core, dec.weight)] += 1
    return found


@suite("blocks", ["count-by-weight", "kappa-blocks", "odd-weight-vanishes"], "Per-core and per-weight fixed-point counts")
def verify_blocks(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    e_range = e_range or BLOCK_E_RANGE
    n_max = BLOCK_N_MAX if n_max is None else n_max
    started = time.perf_counter()
    chk = _Checker()
    for e in e_range:
        for n in range(n_max + 1):
            blocks = _blocks(n, e)
            for core, _ in blocks:
                chk.expect(conjugate(core), core, n, e=e, core=core, check="core-self-conjugate")
            by_weight: Counter = Counter()
            for (_, w), found in blocks.items():
                by_weight[w] += found
            for w in range(n // e + 1):
                chk.expect(by_weight[w], mf_by_weight(e, w, n), n, w, e=e, check="count-by-weight")
                for mu in self_conjugate_cores(n - e * w, e):
                    if e % 2 == 0:
                        expected = kappa(e // 2, w)
                    else:
                        expected = 0 if w % 2 else tuple_count((e - 1) // 2, w // 2)
                    chk.expect(blocks[(mu, w)], expected, n, w, e=e, core=mu, check="block")
    return chk.report("blocks", _params(e_range, n_max), started)


@suite("nvector", ["nvector-from-symbol", "core-size-formula"], "n-vector read off the symbol against the rim-hook core")
def verify_nvector(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    e_range = e_range or MAIN_E_RANGE
    n_max = BLOCK_N_MAX if n_max is None else n_max
    started = time.perf_counter()
    chk = _Checker()
    for e in e_range:
        for n in range(n_max + 1):
            for lam in fixed_points(n, e):
                sym = compute_symbol(lam, e)
                dec = e_core(lam, e)
                v = nvector_from_symbol(sym)
                chk.expect(core_from_nvector(v), dec.core, n, dec.weight, e=e, partition=lam)
                chk.expect(core_size_from_nvector(v), dec.core.n, n, dec.weight, e=e, partition=lam)
                chk.expect(weight_from_symbol(sym), dec.weight, n, dec.weight, e=e, partition=lam)
    return chk.report("nvector", _params(e_range, n_max), started)


@suite("barcore", ["barcore-count", "barcore-example"], "2e-bar cores of distinct odd partitions")
def verify_barcore(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    e_range = e_range or BARCORE_E_RANGE
    n_max = BARCORE_SIZE_MAX if n_max is None else n_max
    started = time.perf_counter()
    chk = _Checker()
    parts, t, core, weight = BARCORE_EXAMPLE
    dec = bar_core(make_partition(parts), t)
    chk.expect((dec.core.parts, dec.bar_weight), (core, weight), sum(parts), t=t, check="worked-example")
    rng = random.Random(0)
    for e in e_range:
        if e % 2:
            continue
        t = 2 * e
        groups: Counter = Counter()
        for size in range(n_max + 1):
            for lam in enumerate_partitions(size, PartitionFilter.distinct_odd()):
                for state in bar_core_steps(lam, t):
                    runners = {state.runner(b) for b in state.beads}
                    chk.expect(bool(runners & {0, e}), False, size, t=t, partition=lam, state=sorted(state.beads), check="runner-avoidance")
                dec = bar_core(lam, t)
                shuffled = bar_core(lam, t, rng)
                chk.expect((shuffled.core, shuffled.bar_weight), (dec.core, dec.bar_weight), size, t=t, partition=lam, check="order-independence")
                groups[(dec.core, dec.bar_weight)] += 1
        for mu in sorted({mu for mu, _ in groups}):
            for w in range((n_max - mu.n) // t + 1):
                chk.expect(groups[(mu, w)], tuple_count(e // 2, w), mu.n + t * w, w, t=t, core=mu, check="same-core-count")
    return chk.report("barcore", _params(e_range, n_max), started)


def computed_table(e: int, n_max: int, w_max: int) -> list[list[int]]:
    """Brute-force grid, row n (1-based) listing weights 0..w_max."""
    grid = []
    for n in range(1, n_max + 1):
        weights = Counter(e_core(lam, e).weight for lam in fixed_points(n, e))
        grid.append([weights[w] for w in range(w_max + 1)])
    return grid


def _table_rows(table: GoldenTable, w_max: int) -> list[list[int]]:
    return [[table.cell(n, w) or 0 for w in range(w_max + 1)] for n in range(1, table.n_max + 1)]


def printed_table_discrepancies(printed: GoldenTable = PRINTED_TABLE_E4) -> tuple[int, ...]:
    """Rows of the printed table that differ from the brute-force grid."""
    computed = computed_table(printed.e, printed.n_max, printed.w_max)
    mismatched = []
    for n in range(1, printed.n_max + 1):
        if tuple(computed[n - 1][: n // printed.e + 1]) != printed.grid[n - 1]:
            mismatched.append(n)
    return tuple(mismatched)


@suite("table", ["weight-table", "joint-generating-function"], "The e=4 weight table three ways")
def verify_table(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    table = table_for(4)
    e = table.e
    skipped = sorted({x for x in (e_range or ()) if table_for(x) is None})
    if skipped:
        log_warn(f"No reference weight table for e={', '.join(str(x) for x in skipped)}; checking e={e} only")
    n_max = min(table.n_max, n_max or table.n_max)
    w_max = table.w_max
    started = time.perf_counter()
    chk = _Checker()
    brute = computed_table(e, n_max, w_max)
    expected = _table_rows(table, w_max)
    by_product = mf_two_var(e, n_max, "product")
    by_reindex = mf_two_var(e, n_max, "reindex")
    cells = 0
    for n in range(1, n_max + 1):
        for w in range(w_max + 1):
            cells += 1
            want = expected[n - 1][w]
            chk.expect(brute[n - 1][w], want, n, w, route="enumeration")
            chk.expect(mf_by_weight(e, w, n), want, n, w, route="closed-form")
            chk.expect(by_product.coefficient(w, n), want, n, w, route="two-variable-product")
            chk.expect(by_reindex.coefficient(w, n), want, n, w, route="two-variable-reindex")
    at_one = by_product.at_x_one()
    mf = mf_series(e, n_max)
    for n in range(n_max + 1):
        chk.expect(at_one[n], mf[n], n, route="x=1")
    rows = printed_table_discrepancies()
    notes = [
        f"{cells} grid cells checked",
        "printed rows differing from the computed grid: " + ", ".join(str(n) for n in rows),
    ]
    if skipped:
        notes.append(f"skipped e={', '.join(str(x) for x in skipped)}: no reference table")
    if rows:
        log_warn(f"Printed weight table disagrees with enumeration in rows {', '.join(str(n) for n in rows)}")
    report = chk.report("table", {"e": e, "n_max": n_max, "w_max": w_max}, started, notes)
    report.checked = cells
    return report


@suite("selfconjugate", ["self-conjugate-cores"], "SC_e(q) against self-conjugate e-core enumeration")
def verify_selfconjugate(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    e_range = e_range or DEFAULT_E_RANGE
    n_max = SC_N_MAX if n_max is None else n_max
    started = time.perf_counter()
    chk = _Checker()
    notes: list[str] = []
    for e in e_range:
        sc = sc_series(e, n_max)
        for n in range(n_max + 1):
            chk.expect(sc[n], len(self_conjugate_cores(n, e)), n, e=e)
        if e == 4:
            for n, value in enumerate(SELF_CONJUGATE_4_CORES_PREFIX[: n_max + 1]):
                chk.expect(sc[n], value, n, e=e, route="golden-prefix")
            notes.append(f"e=4: prefix matched against {OEIS_LABELS['sc4']}")
    return chk.report("selfconjugate", _params(e_range, n_max), started, notes)


@suite("multipliers", ["multipliers"], "f_e against kappa and g_e against tuples of partitions")
def verify_multipliers(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    e_range = e_range or KAPPA_E_RANGE
    n_max = MAP_N_MAX if n_max is None else n_max
    started = time.perf_counter()
    chk = _Checker()
    for e in e_range:
        if e % 2 == 0:
            f = f_series(e, n_max)
            for n in range(n_max + 1):
                chk.expect(f[n], kappa(e // 2, n), n, e=e)
        else:
            g = g_series(e, n_max)
            for n in range(n_max + 1):
                chk.expect(g[n], tuple_count((e - 1) // 2, n), n, e=e)
    f4 = f_series(4, len(CUBIC_PARTITIONS_PREFIX) - 1)
    for n, value in enumerate(CUBIC_PARTITIONS_PREFIX):
        chk.expect(f4[n], value, n, e=4, route="golden-prefix")
    return chk.report("multipliers", _params(e_range, n_max), started, [f"f_4 prefix matched against {OEIS_LABELS['f4']}"])


@suite("roundtrip", ["symbol-roundtrip"], "Symbols and n-vectors round-trip")
def verify_roundtrip(e_range: Sequence[int] | None = None, n_max: int | None = None) -> VerificationReport:
    e_range = e_range or DEFAULT_E_RANGE
    n_max = ROUNDTRIP_N_MAX if n_max is None else n_max
    started = time.perf_counter()
    chk = _Checker()
    for e in e_range:
        for n in range(n_max + 1):
            for lam in enumerate_partitions(n, PartitionFilter.e_regular(e)):
                sym = compute_symbol(lam, e)
                chk.expect(sum(sym.a), n, n, e=e, partition=lam, check="symbol-size")
                chk.expect(validate_symbol(sym.a, sym.r, e), True, n, e=e, partition=lam, check="symbol-valid")
                chk.expect(validate_symbol(sym.a, image_symbol(sym).r, e), True, n, e=e, partition=lam, check="image-valid")
                chk.expect(reconstruct(sym), lam, n, e=e, partition=lam, check="reconstruct")
        for size in range(min(n_max, CORE_SIZE_MAX) + 1):
            for mu in enumerate_partitions(size):
                if not is_e_core(mu, e):
                    continue
                v = nvector_from_core(mu, e)
                chk.expect(core_from_nvector(v), mu, size, e=e, core=mu, check="core-vector-core")
                chk.expect(nvector_from_core(core_from_nvector(v), e), v, size, e=e, core=mu, check="vector-core-vector")
                chk.expect(core_size_from_nvector(v), size, size, e=e, core=mu, check="core-size")
    return chk.report("roundtrip", _params(e_range, n_max), started)


def claim_coverage() -> dict[str, list[str]]:
    """Owners of each claim; raises when a claim has none or several."""
    owners: dict[str, list[str]] = defaultdict(list)
    for s in SUITES.values():
        for claim in s.claims:
            owners[claim].append(s.name)
    bad = [c for c in CLAIMS if len(owners.get(c, [])) != 1]
    if bad:
        raise MullineuxError(f"Claims without exactly one owning suite: {', '.join(bad)}")
    return {c: owners[c] for c in CLAIMS}


def select_suites(selectors: Sequence[str] | None) -> list[Suite]:
    if not selectors or "all" in selectors:
        return list(SUITES.values())
    unknown = [s for s in selectors if s not in SUITES]
    if unknown:
        raise MullineuxError(f"Unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    return [SUITES[s] for s in selectors]


def run_suites(
    selectors: Sequence[str] | None = None,
    e_range: Sequence[int] | None = None,
    n_max: int | None = None,
    workers: int | None = None,
    progress: bool = True,
) -> list[VerificationReport]:
    claim_coverage()
    chosen = select_suites(selectors)
    workers = max(1, min(workers or worker_count(), len(chosen)))
    log_info(f"Running {len(chosen)} suite(s) on {workers} worker(s)")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(s.runner, e_range, n_max) for s in chosen]
        reports = [f.result() for f in tqdm(futures, desc="suites", unit="suite", disable=not progress)]
    for report in reports:
        if not report.passed:
            log_warn(f"{report.check}: FAILED after {report.checked} checks")
    return reports
