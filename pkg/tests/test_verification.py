import json

from siegel_dims import dimensions
from siegel_dims.verification import run_all_checks


def test_fresh_build_passes_everything():
    report = run_all_checks()
    assert report.passed
    assert len(report.checks) >= 50
    assert report.failures == []


def test_report_is_deterministic():
    a = run_all_checks().to_json()
    b = run_all_checks().to_json()
    assert a == b


def test_json_shape():
    payload = run_all_checks().to_json_dict()
    json.dumps(payload)
    assert payload["version"] == 1
    assert payload["overall"] == "pass"
    assert payload["total"] == len(payload["checks"])
    assert payload["failed"] == 0
    for check in payload["checks"]:
        assert set(check) == {"name", "source", "expected", "computed", "passed"}


def test_text_has_one_line_per_check():
    report = run_all_checks()
    lines = report.to_text().splitlines()
    assert len(lines) == len(report.checks) + 1  # plus the summary line
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_check_names_are_unique():
    names = [c.name for c in run_all_checks().checks]
    assert len(names) == len(set(names))


def test_corrupted_constant_table_is_caught(monkeypatch):
    # Fault injection: poison one entry of the constant-term table and the
    # full-level checks must fail by name.
    corrupted = list(dimensions._CONST_TERM_BY_K_MOD_12)
    corrupted[10] += 3456  # shifts every k = 10 mod 12 value by 1
    monkeypatch.setattr(dimensions, "_CONST_TERM_BY_K_MOD_12", corrupted)

    report = run_all_checks()
    assert not report.passed
    failing = {c.name for c in report.failures}
    assert "full_level.k10" in failing
    assert all(name.startswith("full_level.") for name in failing)
    assert report.to_json_dict()["overall"] == "fail"


def test_corrupted_reference_table_is_caught(monkeypatch):
    monkeypatch.setitem(dimensions.GAMMA0_WEIGHT4, 7, 4)
    report = run_all_checks()
    assert {c.name for c in report.failures} == {"gamma0.weight4.p7"}
