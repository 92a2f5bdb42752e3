import asyncio
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict

from ..records.schemas import CheckStatus
from .budget import Budget
from .shared import Shared, TraceEntry


@dataclass
class CheckOutcome:
    passed: bool
    data: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_report(cls, report: Dict[str, bool], **data: Any) -> "CheckOutcome":
        """Passed iff every entry of a named-boolean report holds."""
        return cls(all(report.values()), {"report": report, **data})


class BaseCheck(ABC):
    """
    Interface commune des vérifications.
    Cycle prep -> exec -> post, tracé dans le store partagé.
    """

    def __init__(self, name: str, critical: bool = False):
        self.name = name
        self.critical = critical

    def prep(self, shared: Shared) -> Any:
        """Phase de préparation : le budget de la suite par défaut."""
        return shared.get_metadata("budget")

    @abstractmethod
    async def exec(self, input_data: Any) -> CheckOutcome:
        """Phase d'exécution : le calcul lui-même."""

    def post(self, shared: Shared, prep_result: Any, exec_result: CheckOutcome) -> None:
        shared.set_result(self.name, exec_result)

    async def run(self, shared: Shared) -> CheckOutcome:
        """prep -> exec -> post avec traçabilité."""
        start = time.perf_counter()
        try:
            prep_result = self.prep(shared)
            outcome = await self.exec(prep_result)
            self.post(shared, prep_result, outcome)
            shared.add_trace(
                TraceEntry(
                    check=self.name,
                    status=CheckStatus.PASSED if outcome.passed else CheckStatus.FAILED,
                    duration_ms=(time.perf_counter() - start) * 1000,
                )
            )
            return outcome
        except Exception as e:
            shared.add_trace(
                TraceEntry(
                    check=self.name,
                    status=CheckStatus.ERROR,
                    duration_ms=(time.perf_counter() - start) * 1000,
                )
            )
            raise


class FunctionCheck(BaseCheck):
    """Wraps a synchronous ``fn(budget) -> CheckOutcome``, run in a worker thread."""

    def __init__(self, name: str, fn: Callable[[Budget | None], CheckOutcome], critical: bool = False):
        super().__init__(name, critical)
        self.fn = fn

    async def exec(self, input_data: Budget | None) -> CheckOutcome:
        return await asyncio.to_thread(self.fn, input_data)
