from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, is_dataclass
from pathlib import Path
from typing import Any, Iterable, Sequence

import pandas as pd

from tools.barcores import render_abacus
from tools.models import Abacus, BarCoreDecomposition, CoreDecomposition, MullineuxError, MullineuxSymbol, NVector, Partition, VerificationReport
from tools.qseries import Series1, Series2


def to_plain(value: Any) -> Any:
    if hasattr(value, "to_json"):
        return value.to_json()
    if is_dataclass(value):
        return {k: to_plain(v) for k, v in asdict(value).items()}
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    return value


def dumps_json(value: Any) -> str:
    return json.dumps(to_plain(value), ensure_ascii=False, separators=(",", ":"))


def write_json(path: Path, value: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(to_plain(value), ensure_ascii=False, indent=2, default=str), encoding="utf-8")


def _csv_rows(f: Any, rows: list[dict[str, Any]], fieldnames: list[str] | None) -> None:
    fields = fieldnames or (list(rows[0].keys()) if rows else [])
    if not fields:
        return
    writer = csv.DictWriter(f, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def dumps_csv(rows: Iterable[dict[str, Any]], fieldnames: list[str] | None = None) -> str:
    buf = io.StringIO()
    _csv_rows(buf, [to_plain(r) for r in rows], fieldnames)
    return buf.getvalue()


def write_csv(path: Path, rows: Iterable[dict[str, Any]], fieldnames: list[str] | None = None) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as f:
        _csv_rows(f, [to_plain(r) for r in rows], fieldnames)


def _check_format(fmt: str) -> None:
    if fmt not in ("plain", "json", "csv"):
        raise MullineuxError(f"Unknown output format: {fmt}")


def render_partition(lam: Partition, fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json":
        return dumps_json(lam)
    if fmt == "csv":
        return dumps_csv([{"partition": str(lam), "n": lam.n}])
    return str(lam)


def render_partitions(items: Sequence[Partition], fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json":
        return dumps_json(list(items))
    if fmt == "csv":
        return dumps_csv([{"partition": str(lam), "n": lam.n} for lam in items], ["partition", "n"])
    return "\n".join(str(lam) for lam in items)


def render_symbol(sym: MullineuxSymbol, fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json":
        return dumps_json(sym)
    if fmt == "csv":
        return dumps_csv([{"i": i, "a": a, "r": r} for i, (a, r) in enumerate(zip(sym.a, sym.r), start=1)], ["i", "a", "r"])
    return " ".join(str(a) for a in sym.a) + "\n" + " ".join(str(r) for r in sym.r)


def render_decomposition(
    dec: CoreDecomposition | BarCoreDecomposition,
    fmt: str = "plain",
    abacus: Abacus | None = None,
    nvector: NVector | None = None,
) -> str:
    _check_format(fmt)
    payload = to_plain(dec)
    if fmt == "json":
        if nvector is not None:
            payload["nvector"] = list(nvector.n)
        if abacus is not None:
            payload["abacus"] = abacus.to_json()
        return dumps_json(payload)
    payload["core"] = str(dec.core)
    if nvector is not None:
        payload["nvector"] = " ".join(str(x) for x in nvector.n)
    if fmt == "csv":
        return dumps_csv([payload])
    lines = [f"{key}: {value}" for key, value in payload.items()]
    if abacus is not None:
        lines.append(render_abacus(abacus))
    return "\n".join(lines)


def render_series(series: Series1 | Series2, fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json":
        return dumps_json(series)
    if isinstance(series, Series2):
        if fmt == "csv":
            return dumps_csv(series.to_rows(), ["w", "n", "c"])
        return "\n".join(f"x^{row['w']} q^{row['n']}: {row['c']}" for row in series.to_rows())
    if fmt == "csv":
        return dumps_csv([{"n": n, "c": c} for n, c in enumerate(series.coeffs)], ["n", "c"])
    return " ".join(str(c) for c in series.coeffs)


def grid_frame(grid: Sequence[Sequence[int]], e: int, w_max: int) -> pd.DataFrame:
    """Rows n = 1.. with one column per weight; cells with e*w > n or past the row stay empty."""
    records = []
    for n, row in enumerate(grid, start=1):
        record: dict[str, Any] = {"n": n}
        for w in range(w_max + 1):
            record[f"w={w}"] = row[w] if e * w <= n and w < len(row) else None
        records.append(record)
    return pd.DataFrame(records, columns=["n"] + [f"w={w}" for w in range(w_max + 1)]).astype("Int64")


def render_grid(frame: pd.DataFrame, fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json":
        return frame.to_json(orient="records")
    if fmt == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    header = list(frame.columns)
    cells = [[("" if pd.isna(v) else str(v)) for v in row] for row in frame.itertuples(index=False)]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(header)]
    lines = [" | ".join(h.rjust(widths[i]) for i, h in enumerate(header))]
    lines.append("-+-".join("-" * w for w in widths))
    for row in cells:
        lines.append(" | ".join(v.rjust(widths[i]) for i, v in enumerate(row)).rstrip())
    return "\n".join(lines)


def report_rows(reports: Sequence[VerificationReport]) -> list[dict[str, Any]]:
    return [
        {
            "check": r.check,
            "passed": r.passed,
            "checked": r.checked,
            "duration_s": r.duration_s,
            "parameters": json.dumps(r.parameters, sort_keys=True),
            "counterexample": json.dumps(r.counterexample, sort_keys=True) if r.counterexample else "",
        }
        for r in reports
    ]


def render_reports(reports: Sequence[VerificationReport], fmt: str = "plain") -> str:
    _check_format(fmt)
    if fmt == "json":
        return dumps_json(list(reports))
    if fmt == "csv":
        return dumps_csv(report_rows(reports), ["check", "passed", "checked", "duration_s", "parameters", "counterexample"])
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.check}: {r.checked} checks in {r.duration_s:.2f}s")
        if r.counterexample:
            lines.append(f"  counterexample: {json.dumps(r.counterexample, sort_keys=True)}")
        lines.extend(f"  {note}" for note in r.notes)
    return "\n".join(lines)


def write_reports(outdir: Path, reports: Sequence[VerificationReport]) -> None:
    write_json(outdir / "reports.json", list(reports))
    write_csv(outdir / "reports.csv", report_rows(reports))
