from __future__ import annotations

import os
import re

from settings import INT64_MAX, THREADS_ENV
from utils import log_warn

from tools.models import CountOverflowError, InvalidPartitionError


PARTITION_TEXT_RE = re.compile(r"^\s*\(?\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\)?\s*$")
EMPTY_PARTITION_TEXTS = {"", "()", "[]", "0", "-"}


def checked(value: int, what: str = "count") -> int:
    if abs(value) > INT64_MAX:
        raise CountOverflowError(f"{what} left the signed 64-bit range: {value}")
    return value


def parse_parts(text: str) -> list[int]:
    """Comma-separated CLI syntax, e.g. 7,7,7,4,4,1,1; empty partition as () or 0."""
    stripped = text.strip()
    if stripped in EMPTY_PARTITION_TEXTS:
        return []
    if not PARTITION_TEXT_RE.match(stripped):
        raise InvalidPartitionError(f"Cannot read partition from {text!r}; expected comma-separated integers")
    return [int(p) for p in re.findall(r"\d+", stripped)]


def env_int(name: str, default: int, minimum: int = 1) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return max(minimum, int(raw))
    except ValueError:
        log_warn(f"Ignoring {name}={raw!r}; expected an integer")
        return default


def worker_count() -> int:
    return env_int(THREADS_ENV, 1)
