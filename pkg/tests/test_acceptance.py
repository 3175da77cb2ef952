import logging

import pytest

import acceptance_diagnostic as diagnostic


@pytest.fixture(autouse=True)
def fresh_results(monkeypatch):
    monkeypatch.setattr(diagnostic, "check_results", [])


@pytest.mark.parametrize("name", sorted(diagnostic.FIXTURES))
def test_fixture_checks_pass(name):
    assert diagnostic.check_fixture(name) == (True, "")


@pytest.mark.parametrize(
    "check",
    [
        diagnostic.check_shimura_interval,
        diagnostic.check_rankin_trace,
        diagnostic.check_codimension_one_trace,
        diagnostic.check_splitting_oracle,
        diagnostic.check_branching_sum,
        diagnostic.check_tate_support,
        diagnostic.check_witness_flag,
        diagnostic.check_engine_registry,
    ],
)
def test_acceptance_checks_pass(check):
    assert check() == (True, "")


def test_run_check_records_failures():
    result = diagnostic.run_check("failing", lambda: (False, "nope"))
    assert not result.passed
    assert result.message == "nope"
    assert diagnostic.check_results == [result]


def test_run_check_reports_exceptions():
    def broken():
        raise KeyError("missing")

    result = diagnostic.run_check("broken", broken)
    assert not result.passed
    assert result.message.startswith("KeyError")


def test_unexpected_warnings_fail_the_check():
    def noisy():
        logging.getLogger("critnum.test").warning("unexpected")
        return True, ""

    result = diagnostic.run_check("noisy", noisy)
    assert not result.passed
    assert "WARNING: unexpected" in result.message


def test_expected_warnings_are_counted_not_failed():
    def noisy():
        log = logging.getLogger("critnum.test")
        log.warning("Witness t0 = 1 is not critical")
        log.warning("Witness t0 was not critical in 3 of 5 trials")
        return True, ""

    result = diagnostic.run_check("noisy", noisy, expected_warnings=(diagnostic.WITNESS_WARNING,))
    assert result.passed
    assert result.expected_warnings == 2
    assert result.message == ""


def test_only_the_expected_prefix_is_tolerated():
    def noisy():
        log = logging.getLogger("critnum.test")
        log.warning("Witness t0 = 1 is not critical")
        log.warning("Engine mismatch: {}")
        return True, ""

    result = diagnostic.run_check("noisy", noisy, expected_warnings=(diagnostic.WITNESS_WARNING,))
    assert not result.passed
    assert result.expected_warnings == 1
    assert "Engine mismatch" in result.message


def test_summary_exit_status():
    passed = diagnostic.CheckResult("a", True)
    failed = diagnostic.CheckResult("b", False, "nope")
    assert diagnostic.summarize([passed]) == 0
    assert diagnostic.summarize([passed, failed]) == 1
