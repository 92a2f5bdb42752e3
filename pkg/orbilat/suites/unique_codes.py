"""
Exhaustive classification for the catalogued parameters: each (p, t, dim)
must give exactly one class, equivalent to the catalogued code.  The two
extended parameter sets run last.
"""

from typing import List

from ..codes.catalog import CATALOG, CatalogCode
from ..codes.classify import classify_codes
from ..codes.zp import monomial_equivalent
from ..core.base_check import BaseCheck, CheckOutcome, FunctionCheck
from ..core.budget import Budget


def check_parameters(row: CatalogCode, budget: Budget | None = None) -> CheckOutcome:
    found = classify_codes(row.p, row.t, row.dim, budget=budget)
    report = {
        "one_class": len(found) == 1,
        "matches_catalog": len(found) == 1 and monomial_equivalent(found[0], row.code) is not None,
    }
    return CheckOutcome.from_report(
        report, parameters=row.parameters, classes=[[list(r) for r in c.gen] for c in found]
    )


def build_checks(seed: int | None = None) -> List[BaseCheck]:
    ordered = sorted(CATALOG, key=lambda row: (row.extended, row.p, row.t))
    return [
        FunctionCheck(
            "uniqueC:{}_{}_{}".format(*row.parameters), lambda budget, row=row: check_parameters(row, budget)
        )
        for row in ordered
    ]
