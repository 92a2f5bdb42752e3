"""
Construction B lattices of the catalogued codes: rank, D(L), ambient root
system, rootlessness, the extra-automorphism preconditions and the round
trip through the decision procedure.
"""

from typing import List

from ..codes.catalog import CATALOG, CatalogCode
from ..codes.construction import construct_B, g_delta_e, verify_extra_preconditions
from ..codes.zp import CodeZp, monomial_equivalent
from ..core.base_check import BaseCheck, CheckOutcome, FunctionCheck
from ..core.budget import Budget
from ..lattice.core import discriminant_group
from ..lattice.enumeration import is_rootless, vectors_of_norm
from ..orbifold.decide import decide_extra
from ..orbifold.extract import dual_weight_witness
from ..orbifold.invariants import case2_parameter_table
from ..records.schemas import VerdictBranch


def check_row(row: CatalogCode, budget: Budget | None = None) -> CheckOutcome:
    ctx = row.context
    code = row.code
    lattice = construct_B(ctx, code)
    ambient_roots = len(vectors_of_norm(ctx.root_lattice, 2, budget=budget))
    e = dual_weight_witness(code)
    report = {
        "rank": lattice.rank == row.rank,
        "discriminant": discriminant_group(lattice).label() == row.discriminant,
        "even": lattice.is_even(),
        "rootless": is_rootless(lattice, budget),
        "ambient_root_system": ambient_roots == row.t * row.p * (row.p - 1),
        "table2_row": any(
            r.m == lattice.rank and r.discriminant_order == lattice.determinant for r in case2_parameter_table(row.p)
        ),
        "full_weight_dual_word": e is not None,
    }
    data = {"class": row.tag, "parameters": row.parameters, "root_type": row.root_type, "e": e}
    if e is None:
        return CheckOutcome.from_report(report, **data)

    report["extra_preconditions"] = verify_extra_preconditions(ctx, code, e)
    verdict = decide_extra(lattice, g_delta_e(ctx, e, lattice), budget)
    report["branch"] = verdict.branch == VerdictBranch.B_CONSTRUCTION_ODD
    if report["branch"]:
        extracted = CodeZp.from_generators(row.p, verdict.witness["code"], row.t)
        report["round_trip"] = monomial_equivalent(extracted, code) is not None
    data["branch"] = verdict.branch
    return CheckOutcome.from_report(report, **data)


def build_checks(seed: int | None = None) -> List[BaseCheck]:
    return [FunctionCheck(f"table1:{row.tag}", lambda budget, row=row: check_row(row, budget)) for row in CATALOG]
