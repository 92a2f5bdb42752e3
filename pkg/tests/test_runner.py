import pytest

from orbilat.core.base_check import BaseCheck, CheckOutcome, FunctionCheck
from orbilat.core.budget import Budget
from orbilat.core.errors import BudgetExceeded, InputError, InvariantViolation
from orbilat.core.orchestrator import SuiteRunner
from orbilat.core.shared import Shared
from orbilat.records.schemas import CheckStatus
from orbilat.suites import SUITES, build_runner


def _ok(budget):
    return CheckOutcome(True, {"value": 1})


def _fail(budget):
    return CheckOutcome.from_report({"holds": False, "other": True})


def _out_of_budget(budget):
    raise BudgetExceeded("too slow", partial=[1, 2])


def _broken(budget):
    raise InvariantViolation("bad fixture")


def _crash(budget):
    raise RuntimeError("boom")


def test_shared_initialization():
    """Test l'initialisation du Shared."""
    shared = Shared(command="verify-paper", seed=7)
    assert shared.get_metadata("seed") == 7
    assert shared.get_metadata("budget_exceeded") is False
    assert set(shared) == {"inputs", "results", "trace", "metadata"}
    shared.set_result("a", {"data": 3})
    assert shared["results"]["a"] == {"data": 3}
    assert shared.last_trace("a") is None


@pytest.mark.asyncio
async def test_function_check_traces():
    """Test : une vérification réussie est tracée et son résultat stocké."""
    shared = Shared()
    outcome = await FunctionCheck("ok", _ok).run(shared)
    assert outcome.passed
    assert shared["results"]["ok"].data == {"value": 1}
    assert shared.last_trace("ok").status == CheckStatus.PASSED
    assert len(shared["trace"]) == 1


@pytest.mark.asyncio
async def test_check_error_is_traced_and_raised():
    shared = Shared()
    with pytest.raises(RuntimeError):
        await FunctionCheck("crash", _crash).run(shared)
    assert shared.last_trace("crash").status == CheckStatus.ERROR


@pytest.mark.asyncio
async def test_runner_pass_and_fail():
    runner = SuiteRunner("demo", [FunctionCheck("a", _ok), FunctionCheck("b", _fail), FunctionCheck("c", _ok)])
    report = await runner.run(Shared())
    assert [c.status for c in report.checks] == [CheckStatus.PASSED, CheckStatus.FAILED, CheckStatus.PASSED]
    assert report.checks[1].data["report"] == {"holds": False, "other": True}
    assert report.result["passed"] is False
    assert report.result["budget_exceeded"] is False


@pytest.mark.asyncio
async def test_runner_budget_skips_remaining():
    """Test : un budget épuisé arrête la suite et garde le résultat partiel."""
    shared = Shared(budget=Budget(1.0))
    runner = SuiteRunner("demo", [FunctionCheck("a", _ok), FunctionCheck("b", _out_of_budget), FunctionCheck("c", _ok)])
    report = await runner.run(shared)
    assert [c.status for c in report.checks] == [CheckStatus.PASSED, CheckStatus.ERROR, CheckStatus.SKIPPED]
    assert report.checks[1].data == {"partial": [1, 2]}
    assert report.result["budget_exceeded"] is True
    assert shared.get_metadata("budget_exceeded") is True


@pytest.mark.asyncio
async def test_runner_critical_errors():
    checks = [
        FunctionCheck("soft", _broken),
        FunctionCheck("hard", _crash, critical=True),
        FunctionCheck("after", _ok),
    ]
    report = await SuiteRunner("demo", checks).run(Shared())
    assert [c.status for c in report.checks] == [CheckStatus.ERROR, CheckStatus.ERROR, CheckStatus.SKIPPED]
    assert report.checks[0].error == "bad fixture"
    assert "boom" in report.checks[1].error


@pytest.mark.asyncio
async def test_run_partial():
    runner = SuiteRunner("demo", [FunctionCheck(n, _ok) for n in "abcd"])
    report = await runner.run_partial(Shared(), start_check="b", end_check="c")
    assert [c.name for c in report.checks] == ["b", "c"]
    with pytest.raises(KeyError):
        await runner.run_partial(Shared(), start_check="z")


def test_pipeline_info():
    runner = SuiteRunner("demo", [FunctionCheck("a", _ok, critical=True)])
    info = runner.get_pipeline_info()
    assert info["total_checks"] == 1
    assert info["checks"][0] == {"name": "a", "type": "FunctionCheck", "critical": True}


def test_base_check_is_abstract():
    with pytest.raises(TypeError):
        BaseCheck("abstract")


@pytest.mark.asyncio
async def test_table2_suite():
    runner = build_runner("table2")
    report = await runner.run(Shared(command="verify-paper --suite table2", inputs={"suite": "table2"}))
    assert report.passed
    assert report.inputs == {"suite": "table2"}
    assert len(report.checks) == 6
    assert report.command == "verify-paper --suite table2"


def test_suite_registry():
    assert set(SUITES) == {"table1", "table2", "triality", "leech", "uniqueC"}
    names = [c.name for c in build_runner("uniqueC").pipeline]
    assert names[0] == "uniqueC:3_6_1"
    with pytest.raises(InputError):
        build_runner("nope")
