from fractions import Fraction
from typing import Dict, List, Tuple

from ..core.base_check import BaseCheck, CheckOutcome, FunctionCheck
from ..core.budget import Budget
from ..orbifold.invariants import CASE_SIMPLE, case2_parameter_table

# (m, |D(L)|) per odd prime
EXPECTED: Dict[int, Tuple[Tuple[int, int], ...]] = {
    3: ((12, 3**6), (18, 3**5)),
    5: ((16, 5**4), (20, 5**3)),
    7: ((18, 7**3),),
    11: ((20, 11**2),),
    23: ((22, 23),),
}


def check_prime(p: int, budget: Budget | None = None) -> CheckOutcome:
    rows = case2_parameter_table(p)
    got = tuple((r.m, r.discriminant_order) for r in rows)
    report = {
        "pairs": got == EXPECTED[p],
        "epsilon": all(
            r.epsilon == (1 - Fraction(1, p) if r.case == CASE_SIMPLE else Fraction(1)) for r in rows
        ),
    }
    return CheckOutcome.from_report(report, rows=[(r.m, r.label(), r.epsilon, r.case) for r in rows])


def check_pair_count(budget: Budget | None = None) -> CheckOutcome:
    total = sum(len(case2_parameter_table(p)) for p in EXPECTED)
    return CheckOutcome(total == 7, {"pairs": total})


def build_checks(seed: int | None = None) -> List[BaseCheck]:
    checks: List[BaseCheck] = [
        FunctionCheck(f"table2:p={p}", lambda budget, p=p: check_prime(p, budget)) for p in EXPECTED
    ]
    checks.append(FunctionCheck("table2:seven_pairs", check_pair_count))
    return checks
