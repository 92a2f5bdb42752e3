"""Acceptance suites run by ``orbilat verify-paper``."""

from typing import Callable, Dict, List

from ..core.base_check import BaseCheck
from ..core.errors import InputError
from ..core.orchestrator import SuiteRunner
from . import leech, table1, table2, triality, unique_codes

SUITES: Dict[str, Callable[..., List[BaseCheck]]] = {
    "table1": table1.build_checks,
    "table2": table2.build_checks,
    "triality": triality.build_checks,
    "leech": leech.build_checks,
    "uniqueC": unique_codes.build_checks,
}


def build_runner(name: str, seed: int | None = None) -> SuiteRunner:
    try:
        factory = SUITES[name]
    except KeyError:
        raise InputError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    return SuiteRunner(name, factory(seed=seed))


__all__ = ["SUITES", "build_runner"]
