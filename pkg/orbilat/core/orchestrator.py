from typing import Any, Dict, List, Sequence

from loguru import logger

from ..records.schemas import CheckRecord, CheckStatus, ReportDocument
from .base_check import BaseCheck
from .errors import BudgetExceeded, OrbilatError
from .shared import Shared


class SuiteRunner:
    """
    Exécute une suite de vérifications dans l'ordre.
    Une erreur sur une vérification critique arrête la suite ; un budget
    épuisé l'arrête toujours, les vérifications restantes étant sautées.
    """

    def __init__(self, name: str, pipeline: Sequence[BaseCheck]):
        self.name = name
        self.pipeline: List[BaseCheck] = list(pipeline)
        logger.debug(f"SuiteRunner {name} initialized with {len(self.pipeline)} checks")

    async def run(self, shared: Shared) -> ReportDocument:
        """Exécute la suite complète."""
        logger.info(f"Starting suite {self.name}")
        records = await self._run_checks(shared, self.pipeline)
        return self.build_report(shared, records)

    async def run_partial(
        self,
        shared: Shared,
        start_check: str | None = None,
        end_check: str | None = None,
    ) -> ReportDocument:
        """Exécute une partie de la suite, bornes incluses."""
        start_idx = 0
        end_idx = len(self.pipeline)
        if start_check:
            start_idx = self._index(start_check)
        if end_check:
            end_idx = self._index(end_check) + 1
        logger.info(f"Running partial suite {self.name} from {start_check} to {end_check}")
        records = await self._run_checks(shared, self.pipeline[start_idx:end_idx])
        return self.build_report(shared, records)

    def _index(self, name: str) -> int:
        for i, check in enumerate(self.pipeline):
            if check.name == name:
                return i
        raise KeyError(f"suite {self.name} has no check named {name!r}")

    async def _run_checks(self, shared: Shared, checks: Sequence[BaseCheck]) -> List[CheckRecord]:
        records: List[CheckRecord] = []
        stop = False
        for check in checks:
            if stop:
                records.append(CheckRecord(name=check.name, status=CheckStatus.SKIPPED))
                continue
            try:
                logger.debug(f"Executing check: {check.name}")
                outcome = await check.run(shared)
                status = CheckStatus.PASSED if outcome.passed else CheckStatus.FAILED
                if not outcome.passed:
                    logger.warning(f"Check {check.name} failed: {outcome.data}")
                records.append(self._record(shared, check.name, status, data=outcome.data))
            except BudgetExceeded as e:
                logger.error(f"Check {check.name} ran out of budget: {e}")
                shared.set_metadata("budget_exceeded", True)
                shared.set_result(check.name, {"error": str(e), "partial": e.partial})
                records.append(
                    self._record(shared, check.name, CheckStatus.ERROR, data={"partial": e.partial}, error=str(e))
                )
                stop = True
            except OrbilatError as e:
                logger.error(f"Check {check.name} failed: {e}")
                shared.set_result(check.name, {"error": str(e)})
                records.append(self._record(shared, check.name, CheckStatus.ERROR, error=str(e)))
                if check.critical:
                    logger.error(f"Critical check {check.name} failed, stopping suite")
                    stop = True
            except Exception as e:
                logger.exception(f"Check {check.name} crashed: {e}")
                shared.set_result(check.name, {"error": repr(e)})
                records.append(self._record(shared, check.name, CheckStatus.ERROR, error=repr(e)))
                stop = check.critical
        return records

    @staticmethod
    def _record(
        shared: Shared, name: str, status: CheckStatus, data: Dict[str, Any] | None = None, error: str | None = None
    ) -> CheckRecord:
        entry = shared.last_trace(name)
        return CheckRecord(
            name=name,
            status=status,
            duration_ms=round(entry.duration_ms, 3) if entry else 0.0,
            data=data or {},
            error=error,
        )

    def build_report(self, shared: Shared, records: List[CheckRecord]) -> ReportDocument:
        report = ReportDocument(
            command=shared.get_metadata("command") or f"verify-paper --suite {self.name}",
            seed=shared.get_metadata("seed"),
            inputs=shared["inputs"],
            checks=records,
            result={"suite": self.name, "budget_exceeded": bool(shared.get_metadata("budget_exceeded"))},
        )
        report.result["summary"] = report.summary
        report.result["passed"] = report.passed
        logger.info(f"Suite {self.name}: {report.summary}")
        return report

    def get_pipeline_info(self) -> Dict[str, Any]:
        """Retourne les informations sur la suite."""
        return {
            "suite": self.name,
            "checks": [
                {"name": check.name, "type": check.__class__.__name__, "critical": check.critical}
                for check in self.pipeline
            ],
            "total_checks": len(self.pipeline),
        }
