import pytest

from settings import INT64_MAX, THREADS_ENV
from tools.common import checked, env_int, parse_parts, worker_count
from tools.models import CountOverflowError, InvalidPartitionError


def test_parse_parts():
    assert parse_parts("7, 7, 4") == [7, 7, 4]
    assert parse_parts(" () ") == []
    assert parse_parts("0") == []
    with pytest.raises(InvalidPartitionError):
        parse_parts("3,,1")


def test_checked_keeps_64_bit_range():
    assert checked(INT64_MAX) == INT64_MAX
    assert checked(-INT64_MAX) == -INT64_MAX
    with pytest.raises(CountOverflowError):
        checked(INT64_MAX + 1, "p(n)")


def test_worker_count_reads_environment(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    assert worker_count() == 1
    monkeypatch.setenv(THREADS_ENV, "4")
    assert worker_count() == 4
    monkeypatch.setenv(THREADS_ENV, "0")
    assert worker_count() == 1


def test_env_int_ignores_garbage(monkeypatch):
    monkeypatch.setenv("MULLINEUX_TEST_INT", "many")
    assert env_int("MULLINEUX_TEST_INT", 7) == 7
