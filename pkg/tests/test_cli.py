import csv
import json

from tools.golden import SELF_CONJUGATE_4_CORES_PREFIX


PLAIN_TABLE_E4 = """\
 n | w=0 | w=1 | w=2 | w=3 | w=4 | w=5
---+-----+-----+-----+-----+-----+----
 1 |   1 |     |     |     |     |
 2 |   0 |     |     |     |     |
 3 |   1 |     |     |     |     |
 4 |   1 |   1 |     |     |     |
 5 |   1 |   1 |     |     |     |
 6 |   1 |   0 |     |     |     |
 7 |   1 |   1 |     |     |     |
 8 |   0 |   1 |   3 |     |     |
 9 |   0 |   1 |   3 |     |     |
10 |   2 |   1 |   0 |     |     |
11 |   0 |   1 |   3 |     |     |
12 |   1 |   0 |   3 |   4 |     |
13 |   1 |   0 |   3 |   4 |     |
14 |   1 |   2 |   3 |   0 |     |
15 |   2 |   0 |   3 |   4 |     |
16 |   0 |   1 |   0 |   4 |   9 |
17 |   0 |   1 |   0 |   4 |   9 |
18 |   1 |   1 |   6 |   4 |   0 |
19 |   1 |   2 |   0 |   4 |   9 |
20 |   0 |   0 |   3 |   0 |   9 |  12
"""


def test_symbol_plain(run_cli):
    code, out = run_cli("symbol", "7,7,7,4,4,1,1", "--e", 5)
    assert code == 0
    assert out == "12 8 5 4 2\n7 4 3 3 2\n"


def test_symbol_json(run_cli):
    code, out = run_cli("symbol", "7,7,7,4,4,1,1", "--e", 5, "--format", "json")
    assert code == 0
    assert json.loads(out) == {"e": 5, "a": [12, 8, 5, 4, 2], "r": [7, 4, 3, 3, 2]}


def test_map(run_cli):
    assert run_cli("map", "7,7,7,4,4,1,1", "--e", 5) == (0, "12,9,4,2,2,2\n")


def test_fixed_count_and_filters(run_cli):
    assert run_cli("fixed", 9, "--e", 4, "--count") == (0, "4\n")
    code, out = run_cli("fixed", 9, "--e", 4, "--weight", 2, "--count", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 9, "e": 4, "count": 3}
    code, out = run_cli("fixed", 8, "--e", 4, "--core", "()", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 3


def test_core_with_nvector(run_cli):
    code, out = run_cli("core", "3,2,1", "--e", 3, "--strategy", "abacus", "--nvector")
    assert code == 0
    assert out.splitlines() == ["core: ()", "weight: 2", "e: 3", "nvector: 0 0 0"]


def test_core_nvector_stays_parseable(run_cli):
    code, out = run_cli("core", "3,1", "--e", 2, "--nvector", "--format", "csv")
    assert code == 0
    assert out == "core,weight,e,nvector\n(),2,2,0 0\n"
    code, out = run_cli("core", "3,1", "--e", 2, "--nvector", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"core": [], "weight": 2, "e": 2, "nvector": [0, 0]}


def test_barcore_with_abacus(run_cli):
    code, out = run_cli("barcore", "23,21,17,13,11,9,7", "--t", 6, "--abacus")
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["core: 9,5,3", "bar_weight: 14", "t: 6"]
    assert lines[-3:] == ["0 1 2 3 4 5", ". . . o . o", ". . . o . ."]


def test_series_json(run_cli):
    code, out = run_cli("series", "sc", "--e", 4, "--trunc", 20, "--format", "json")
    assert code == 0
    assert json.loads(out) == {"N": 20, "coeffs": list(SELF_CONJUGATE_4_CORES_PREFIX)}


def test_two_variable_series_plain(run_cli):
    code, out = run_cli("series", "mf2", "--e", 4, "--trunc", 5)
    assert code == 0
    assert out.splitlines()[:2] == ["x^0 q^0: 1", "x^0 q^1: 1"]
    assert "x^1 q^4: 1" in out.splitlines()


def test_table_csv(run_cli):
    code, out = run_cli("table", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()))
    assert len(rows) == 20
    row10 = next(r for r in rows if r["n"] == "10")
    assert (row10["w=0"], row10["w=1"], row10["w=2"], row10["w=3"]) == ("2", "1", "0", "")


def test_printed_table_keeps_blanks(run_cli):
    code, out = run_cli("table", "--printed", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[3] == {"n": 4, "w=0": 1, "w=1": None, "w=2": None, "w=3": None, "w=4": None, "w=5": None}
    assert rows[19]["w=5"] == 12


def test_verify_table_writes_reports(run_cli, tmp_path):
    code, out = run_cli("verify", "table", "--quiet", "--output", tmp_path)
    assert code == 0
    assert out.startswith("PASS table: 120 checks")
    saved = json.loads((tmp_path / "reports.json").read_text(encoding="utf-8"))
    assert saved[0]["check"] == "table"
    assert saved[0]["passed"] is True
    with (tmp_path / "reports.csv").open(encoding="utf-8") as f:
        assert next(csv.DictReader(f))["checked"] == "120"


def test_bad_input_exits_with_two(run_cli):
    assert run_cli("map", "1,2", "--e", 3)[0] == 2
    assert run_cli("series", "f", "--e", 3, "--trunc", 5)[0] == 2
    assert run_cli("series", "mf", "--e", 4, "--trunc", -1)[0] == 2
    assert run_cli("symbol", "1,1,1", "--e", 3)[0] == 2
    assert run_cli("table", "--printed", "--e", 3)[0] == 2
    assert run_cli("verify", "nope")[0] == 2


def test_table_plain_matches_golden_text(run_cli):
    assert run_cli("table") == (0, PLAIN_TABLE_E4)


def test_verify_table_flags_unsupported_e(run_cli):
    code, out = run_cli("verify", "table", "--e", 1, "--quiet")
    assert code == 0
    assert "  skipped e=1: no reference table" in out.splitlines()
