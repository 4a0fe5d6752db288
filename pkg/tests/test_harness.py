import pytest

from tools.golden import CORRECTED_TABLE_E4, PRINTED_TABLE_E4, PRINTED_TABLE_MISMATCHED_ROWS
from tools.harness import (
    CLAIMS,
    SUITES,
    _Checker,
    claim_coverage,
    computed_table,
    printed_table_discrepancies,
    run_suites,
    select_suites,
    verify_barcore,
    verify_blocks,
    verify_involution,
    verify_main,
    verify_me_set,
    verify_multipliers,
    verify_nvector,
    verify_roundtrip,
    verify_selfconjugate,
    verify_table,
)
from tools.models import MullineuxError, VerificationReport


def test_every_claim_has_one_owner():
    owners = claim_coverage()
    assert set(owners) == set(CLAIMS)
    assert all(len(names) == 1 for names in owners.values())
    assert set(SUITES) == {"involution", "me-set", "main", "blocks", "nvector", "barcore", "table", "selfconjugate", "multipliers", "roundtrip"}


def test_checker_keeps_smallest_counterexample():
    chk = _Checker()
    assert chk.expect(3, 3, 1)
    assert not chk.expect(1, 2, 5, 1, e=4)
    assert not chk.expect(7, 8, 3, 2, e=4)
    assert not chk.expect(0, 1, 3, 4, e=4)
    report = chk.report("scratch", {}, 0.0)
    assert isinstance(report, VerificationReport)
    assert not report.passed
    assert report.checked == 4
    assert report.counterexample == {"n": 3, "w": 2, "actual": 7, "expected": 8, "e": 4}
    assert report.claims == []


def test_weight_table_checks_every_cell():
    report = verify_table()
    assert report.passed, report.counterexample
    assert report.checked == 120
    assert "120 grid cells checked" in report.notes


def test_printed_table_rows_are_shifted():
    assert printed_table_discrepancies() == PRINTED_TABLE_MISMATCHED_ROWS
    assert printed_table_discrepancies(CORRECTED_TABLE_E4) == ()
    assert PRINTED_TABLE_E4.cell(20, 5) == 12
    assert PRINTED_TABLE_E4.cell(3, 1) is None


def test_computed_table_rows():
    grid = computed_table(4, 12, 3)
    assert grid[9] == [2, 1, 0, 0]
    assert grid[11] == [1, 0, 3, 4]


@pytest.mark.parametrize(
    "runner, kwargs",
    [
        (verify_involution, {"e_range": [2, 3, 4], "n_max": 10}),
        (verify_me_set, {"e_range": [3, 4], "n_max": 10}),
        (verify_main, {"e_range": [3, 4, 5, 6], "n_max": 12}),
        (verify_blocks, {"e_range": [3, 4], "n_max": 12}),
        (verify_nvector, {"e_range": [3, 4, 5], "n_max": 12}),
        (verify_barcore, {"e_range": [2, 4], "n_max": 15}),
        (verify_selfconjugate, {"e_range": [3, 4, 5], "n_max": 20}),
        (verify_multipliers, {"e_range": [2, 3, 4, 6], "n_max": 12}),
        (verify_roundtrip, {"e_range": [2, 3, 4], "n_max": 10}),
    ],
)
def test_suites_pass_at_small_bounds(runner, kwargs):
    report = runner(**kwargs)
    assert report.passed, report.counterexample
    assert report.checked > 0
    assert report.parameters == {"e_range": kwargs["e_range"], "n_max": kwargs["n_max"]}
    assert report.claims


def test_run_suites_keeps_requested_order():
    reports = run_suites(["table", "multipliers"], n_max=10, workers=2, progress=False)
    assert [r.check for r in reports] == ["table", "multipliers"]
    assert all(r.passed for r in reports)


def test_suite_selection():
    assert len(select_suites(["all"])) == len(SUITES)
    assert [s.name for s in select_suites(["main"])] == ["main"]
    with pytest.raises(MullineuxError):
        run_suites(["nope"], progress=False)


def test_table_suite_reports_foreign_e():
    report = verify_table(e_range=[1, 4], n_max=12)
    assert report.passed, report.counterexample
    assert report.parameters["e"] == 4
    assert "skipped e=1: no reference table" in report.notes
    assert not any(note.startswith("skipped") for note in verify_table(e_range=[4], n_max=12).notes)


def test_golden_checks_name_their_sequences():
    assert "e=4: alternating prefix of 13 terms matched against A261734" in verify_main(e_range=[4], n_max=12).notes
    assert verify_selfconjugate(e_range=[4], n_max=20).notes == ["e=4: prefix matched against A053692"]
    assert verify_multipliers(e_range=[2], n_max=6).notes == ["f_4 prefix matched against A002513"]


def test_default_multiplier_range_covers_both_parities():
    report = verify_multipliers(n_max=8)
    assert report.passed, report.counterexample
    assert {e % 2 for e in report.parameters["e_range"]} == {0, 1}
