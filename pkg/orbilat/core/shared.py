from dataclasses import dataclass
from typing import Any, Dict, List

from ..records.schemas import CheckStatus


@dataclass
class TraceEntry:
    check: str
    status: CheckStatus
    duration_ms: float


class Shared(dict):
    """
    Store partagé d'une exécution de suite : entrées, résultats par vérification,
    trace des durées et métadonnées (commande, graine, budget).
    """

    def __init__(
        self, command: str = "", seed: int | None = None, budget: Any = None, inputs: Dict[str, Any] | None = None
    ) -> None:
        super().__init__(
            inputs=dict(inputs or {}),
            results={},
            trace=[],
            metadata={"command": command, "seed": seed, "budget": budget, "budget_exceeded": False},
        )

    def set_result(self, check: str, value: Any) -> None:
        self["results"][check] = value

    def add_trace(self, entry: TraceEntry) -> None:
        self["trace"].append(entry)

    def last_trace(self, check: str) -> TraceEntry | None:
        trace: List[TraceEntry] = self["trace"]
        return next((entry for entry in reversed(trace) if entry.check == check), None)

    def set_metadata(self, key: str, value: Any) -> None:
        self["metadata"][key] = value

    def get_metadata(self, key: str) -> Any:
        return self["metadata"].get(key)
