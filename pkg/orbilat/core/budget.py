import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded


@dataclass
class Budget:
    """
    Cooperative wall-clock budget.

    Long searches call ``check()`` at safe points; once the deadline has
    passed a ``BudgetExceeded`` is raised from inside the search so that
    partial state can be attached by the caller.
    """

    seconds: float | None = None
    label: str = "search"
    _start: float = field(default_factory=time.monotonic, init=False)

    @classmethod
    def unlimited(cls, label: str = "search") -> "Budget":
        return cls(seconds=None, label=label)

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._start

    @property
    def remaining(self) -> float | None:
        if self.seconds is None:
            return None
        return max(0.0, self.seconds - self.elapsed)

    def expired(self) -> bool:
        return self.seconds is not None and self.elapsed > self.seconds

    def check(self) -> None:
        if self.expired():
            raise BudgetExceeded(f"{self.label}: budget of {self.seconds:g}s exhausted")
