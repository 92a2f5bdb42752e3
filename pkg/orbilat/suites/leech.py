"""
Leech lattice fixture, coinvariant lattices of the five permutation
classes, the decision procedure on them and the glue reconstruction.
"""

from fractions import Fraction
from typing import List

from ..codes.catalog import catalog_code
from ..codes.zp import CodeZp, monomial_equivalent
from ..core.base_check import BaseCheck, CheckOutcome, FunctionCheck
from ..core.budget import Budget
from ..lattice.enumeration import count_by_norm, minimum_norm, theta_prefix
from ..leech.coinvariant import CLASS_DATA, GLUE_TAGS, coinvariant_class, reconstruct_unimodular
from ..leech.leech import build_leech
from ..orbifold.decide import decide_extra
from ..orbifold.invariants import orbifold_weight_one_dim
from ..records.schemas import VerdictBranch

LEECH_NORM4 = 196560
LEECH_THETA = [(0, 1), (2, 0), (4, LEECH_NORM4)]
ROUND_TRIP_TAGS = ("3B", "5B", "7B")
LEECH_VERDICTS = {"11A": VerdictBranch.LEECH_11A, "23A": VerdictBranch.LEECH_23A}


def check_build(budget: Budget | None = None) -> CheckOutcome:
    leech = build_leech()
    report = {
        "rank": leech.rank == 24,
        "unimodular": leech.determinant == 1,
        "even": leech.is_even(),
        "minimum_4": minimum_norm(leech, budget) == 4,
    }
    return CheckOutcome.from_report(report)


def check_norm4(budget: Budget | None = None) -> CheckOutcome:
    counts = count_by_norm(build_leech(), 4, budget=budget)
    found = counts.get(Fraction(4), 0)
    return CheckOutcome(found == LEECH_NORM4 and counts.get(Fraction(2), 0) == 0, {"norm4": found})


def check_coinvariant(tag: str, seed: int | None, budget: Budget | None = None) -> CheckOutcome:
    cc = coinvariant_class(tag, seed=seed, budget=budget)
    report = dict(cc.checks)
    report["weight_one_24"] = orbifold_weight_one_dim(cc.fixed.rank, cc.lattice.rank, cc.p).is_24
    return CheckOutcome.from_report(
        report, permutation=cc.permutation.perm, cycle_type=cc.permutation.cycle_type, rank=cc.lattice.rank
    )


def check_round_trip(tag: str, seed: int | None, budget: Budget | None = None) -> CheckOutcome:
    cc = coinvariant_class(tag, seed=seed, budget=budget)
    verdict = decide_extra(cc.lattice, cc.isometry, budget)
    report = {"branch": verdict.branch == VerdictBranch.B_CONSTRUCTION_ODD}
    data = {"branch": verdict.branch}
    if report["branch"]:
        expected = catalog_code(tag)
        extracted = CodeZp.from_generators(cc.p, verdict.witness["code"], verdict.witness["t"])
        report["code_equivalent"] = monomial_equivalent(extracted, expected.code) is not None
        data["code"] = verdict.witness["code"]
    return CheckOutcome.from_report(report, **data)


def check_leech_verdict(tag: str, seed: int | None, budget: Budget | None = None) -> CheckOutcome:
    cc = coinvariant_class(tag, seed=seed, budget=budget)
    verdict = decide_extra(cc.lattice, cc.isometry, budget)
    return CheckOutcome(verdict.branch == LEECH_VERDICTS[tag], {"branch": verdict.branch})


def check_glue(tag: str, seed: int | None, budget: Budget | None = None) -> CheckOutcome:
    glued = reconstruct_unimodular(tag, seed=seed, budget=budget)
    theta = theta_prefix(glued, 4, budget)
    return CheckOutcome(theta == LEECH_THETA, {"theta": theta})


def build_checks(seed: int | None = None) -> List[BaseCheck]:
    checks: List[BaseCheck] = [
        FunctionCheck("leech:build", check_build, critical=True),
        FunctionCheck("leech:norm4", check_norm4),
    ]
    for tag in CLASS_DATA:
        checks.append(
            FunctionCheck(f"leech:coinvariant:{tag}", lambda budget, tag=tag: check_coinvariant(tag, seed, budget))
        )
    for tag in ROUND_TRIP_TAGS:
        checks.append(
            FunctionCheck(f"leech:round_trip:{tag}", lambda budget, tag=tag: check_round_trip(tag, seed, budget))
        )
    for tag in LEECH_VERDICTS:
        checks.append(
            FunctionCheck(f"leech:decide:{tag}", lambda budget, tag=tag: check_leech_verdict(tag, seed, budget))
        )
    for tag in GLUE_TAGS:
        checks.append(FunctionCheck(f"leech:glue:{tag}", lambda budget, tag=tag: check_glue(tag, seed, budget)))
    return checks
