from typing import List

from ..core.base_check import BaseCheck, CheckOutcome, FunctionCheck
from ..core.budget import Budget
from ..triality import (
    conjugation_report,
    sfg_report,
    verify_root_space_permutation,
    verify_weight_grading,
)

K_RANGE = range(2, 10)


def check_k(k: int, budget: Budget | None = None) -> CheckOutcome:
    report = {**sfg_report(k), **conjugation_report(k)}
    if budget is not None:
        budget.check()
    report["weight_grading"] = verify_weight_grading(k)
    report["root_space_permutation"] = verify_root_space_permutation(k)
    return CheckOutcome.from_report(report, k=k)


def build_checks(seed: int | None = None) -> List[BaseCheck]:
    return [FunctionCheck(f"triality:k={k}", lambda budget, k=k: check_k(k, budget)) for k in K_RANGE]
