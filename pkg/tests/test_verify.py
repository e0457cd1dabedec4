import pytest

from fliess_prelie.errors import DomainError
from fliess_prelie.report import build_report_text, write_report
from fliess_prelie.verify import SUITES, CheckResult, RandomInputs, run_suite, verify


@pytest.mark.parametrize("suite", SUITES)
def test_every_suite_passes_at_small_size(suite):
    results = run_suite(suite, size=2, seed=1, instances=4)
    assert results
    failed = [f"{r.name}: {r.example}" for r in results if not r.passed]
    assert failed == []


@pytest.mark.slow
def test_all_suites_at_default_size():
    ctx = verify("all", size=4, seed=0, instances=20)
    assert ctx["passed"], ctx["failed"]


def test_unknown_suite():
    with pytest.raises(DomainError):
        run_suite("topology")
    with pytest.raises(DomainError):
        verify("topology")


def test_size_must_be_positive():
    with pytest.raises(DomainError):
        run_suite("hopf", size=0)


def test_seeded_inputs_are_reproducible():
    a, b = RandomInputs(3, 4), RandomInputs(3, 4)
    assert [a.word() for _ in range(10)] == [b.word() for _ in range(10)]
    assert [a.ptree(3, 2) for _ in range(5)] == [b.ptree(3, 2) for _ in range(5)]


def test_verify_context(capsys):
    ctx = verify("prelie", size=2, seed=0, instances=3, verbose=1)
    assert ctx["suite"] == "prelie"
    assert ctx["passed"]
    assert ctx["failed"] == []
    assert {r.suite for r in ctx["results"]} == {"prelie"}
    out = capsys.readouterr().out
    assert "[verify] suite=prelie check=prelie-axiom PASS" in out
    assert f"[verify] prelie: {len(ctx['results'])}/{len(ctx['results'])} checks passed" in out


def _result(name, failures=0, example=""):
    return CheckResult("hopf", name, "a | b", 3, failures, 0.01, example)


def test_check_result_dict():
    d = _result("counit").to_dict()
    assert d["passed"] is True
    assert d["cases"] == 3


def test_report_text():
    ctx = {
        "suite": "hopf",
        "size": 2,
        "seed": 0,
        "instances": 3,
        "asof": "20260101-000000",
        "results": [_result("counit"), _result("duality", failures=1, example="(01, 1, e)")],
        "sources": ["reports/verify_hopf_s2_seed0.parquet"],
    }
    text = build_report_text(ctx)
    assert text.startswith("# Verification Report: hopf")
    assert "- Verdict: **FAIL**" in text
    assert "- Checks passed: 1/2" in text
    assert "- Failed checks: hopf/duality" in text
    assert "| counit | a \\| b | 3 | 0.01 | PASS |" in text
    assert "first case: `(01, 1, e)`" in text
    assert "- reports/verify_hopf_s2_seed0.parquet" in text


def test_write_report(tmp_path, capsys):
    path = tmp_path / "nested" / "report.md"
    write_report(path, {"suite": "all", "results": [_result("counit")]})
    assert "- Verdict: **PASS**" in path.read_text(encoding="utf-8")
    assert "[report] Report saved at:" in capsys.readouterr().out
