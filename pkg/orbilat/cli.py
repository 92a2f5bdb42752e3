"""
orbilat command line.

Exit codes: 0 success, 1 internal invariant violation or failed check,
2 invalid input or failed precondition, 3 budget exhausted (a partial report
is still printed).
"""

import asyncio
import functools
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict

import click

from . import __version__
from .codes.classify import classify_codes
from .codes.construction import ConstructionContext, construct_A, construct_B
from .codes.zp import is_self_orthogonal
from .config import get_settings
from .core.budget import Budget
from .core.errors import BudgetExceeded, InputError, OrbilatError
from .core.shared import Shared
from .lattice.core import discriminant_group
from .lattice.enumeration import is_rootless, theta_prefix
from .leech.coinvariant import GLUE_TAGS, coinvariant_class, reconstruct_unimodular
from .orbifold.decide import decide_extra
from .records.schemas import CodeDoc, IsometryDoc, LatticeDoc, ReportDocument, load_document, to_jsonable
from .suites import SUITES, build_runner
from .triality import conjugation_report, sfg_report, verify_root_space_permutation, verify_weight_grading
from .utils.logger import get_logger, setup_logger
from .utils.validators import (
    CheckExtraRequest,
    ClassifyRequest,
    ConstructRequest,
    TrialityRequest,
    VerifyRequest,
    read_json,
    validate_json_structure,
    validate_request,
)

logger = get_logger(__name__)


def _parse_seed(ctx: click.Context, param: click.Parameter, value: str | None) -> int:
    if value is None:
        return get_settings().seed
    try:
        return int(value, 0)
    except ValueError:
        raise click.BadParameter(f"not an integer: {value!r}") from None


def _write_json(path: Path | None, text: str) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text + "\n", encoding="utf-8")


def _emit(report: ReportDocument) -> None:
    click.echo(report.dump())


def guarded(command: str) -> Callable:
    """Map the error families onto exit codes."""

    def decorator(fn: Callable) -> Callable:
        @functools.wraps(fn)
        def wrapper(*args: Any, **kwargs: Any) -> None:
            ctx = click.get_current_context()
            try:
                code = fn(*args, **kwargs)
            except BudgetExceeded as exc:
                logger.error(f"{command}: {exc}")
                _emit(
                    ReportDocument(
                        command=command,
                        seed=ctx.obj["seed"],
                        inputs=to_jsonable({k: str(v) if isinstance(v, Path) else v for k, v in ctx.params.items()}),
                        result={"budget_exceeded": True, "error": str(exc), "partial": exc.partial},
                    )
                )
                code = exc.exit_code
            except InputError as exc:
                click.echo(f"error: {exc}", err=True)
                code = exc.exit_code
            except OrbilatError as exc:
                logger.error(f"{command}: {exc}")
                click.echo(f"internal error: {exc}", err=True)
                code = exc.exit_code
            ctx.exit(code or 0)

        return wrapper

    return decorator


@click.group()
@click.version_option(__version__, prog_name="orbilat")
@click.option("--seed", envvar="ORBILAT_SEED", callback=_parse_seed, help="Seed of every random search (default 0xC0FFEE).")
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR.")
@click.pass_context
def main(ctx: click.Context, seed: int, log_level: str | None) -> None:
    """Exact lattice, code and orbifold checks."""
    settings = get_settings()
    setup_logger(log_level=(log_level or settings.log_level).upper(), log_file=settings.log_file)
    ctx.ensure_object(dict)
    ctx.obj["seed"] = seed


# --- construct -----------------------------------------------------------------


def _load_code(path: Path, p: int) -> CodeDoc:
    data = read_json(path)
    validate_json_structure(data, ["generators"])
    data.setdefault("p", p)
    if data["p"] != p:
        raise InputError(f"--p {p} disagrees with p = {data['p']} in {path}")
    if "length" not in data:
        if not data["generators"]:
            raise InputError(f"{path}: length is required for a code without generators")
        data["length"] = len(data["generators"][0])
    return load_document(CodeDoc, data)


@main.command()
@click.option("--p", "p", type=int, required=True)
@click.option("--code", "code_path", type=click.Path(path_type=Path), required=True)
@click.option("--variant", type=click.Choice(["A", "B"]), default="B", show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Lattice JSON output.")
@click.pass_context
@guarded("construct")
def construct(ctx: click.Context, p: int, code_path: Path, variant: str, out: Path | None) -> int:
    """Construction A or B of a code over Z_p."""
    req = validate_request(ConstructRequest, p=p, code=code_path, variant=variant)
    doc = _load_code(req.code, req.p)
    code = doc.to_code()
    cctx = ConstructionContext.zp(req.p, code.length)
    lattice = (construct_A if req.variant == "A" else construct_B)(cctx, code)
    integral = lattice.is_integral()
    result: Dict[str, Any] = {
        "variant": req.variant,
        "rank": lattice.rank,
        "determinant": lattice.determinant,
        "self_orthogonal": is_self_orthogonal(code),
        "integral": integral,
        "even": lattice.is_even(),
        "discriminant": discriminant_group(lattice).label() if integral else None,
        "rootless": is_rootless(lattice),
        "lattice": LatticeDoc.from_lattice(lattice),
    }
    _write_json(out, LatticeDoc.from_lattice(lattice).model_dump_json(indent=2))
    _emit(
        ReportDocument(
            command="construct",
            seed=ctx.obj["seed"],
            inputs={"p": req.p, "variant": req.variant, "code": doc},
            result=result,
        )
    )
    return 0


# --- check-extra ------------------------------------------------------------------


@main.command("check-extra")
@click.option("--lattice", "lattice_path", type=click.Path(path_type=Path), required=True)
@click.option("--isometry", "isometry_path", type=click.Path(path_type=Path), required=True)
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Verdict JSON output.")
@click.option("--budget", type=float, default=None, help="Seconds; defaults to ORBILAT_DEFAULT_BUDGET.")
@click.pass_context
@guarded("check-extra")
def check_extra(
    ctx: click.Context, lattice_path: Path, isometry_path: Path, out: Path | None, budget: float | None
) -> int:
    """Decide whether the orbifold of (L, g) has an extra automorphism."""
    req = validate_request(CheckExtraRequest, lattice=lattice_path, isometry=isometry_path)
    lattice_doc = load_document(LatticeDoc, read_json(req.lattice))
    iso_data = read_json(req.isometry)
    validate_json_structure(iso_data, ["matrix"])
    iso_doc = load_document(IsometryDoc, {"lattice": lattice_doc.model_dump(), "matrix": iso_data["matrix"]})
    g = iso_doc.to_isometry()
    seconds = budget if budget is not None else get_settings().default_budget
    verdict = decide_extra(g.lattice, g, Budget(seconds, label="check-extra"))
    _write_json(out, verdict.model_dump_json(indent=2))
    _emit(
        ReportDocument(
            command="check-extra",
            seed=ctx.obj["seed"],
            inputs={"lattice": lattice_doc, "isometry": iso_data["matrix"]},
            result=verdict.model_dump(mode="json"),
        )
    )
    return 0


# --- coinvariant -----------------------------------------------------------------


@main.command()
@click.option("--tag", type=click.Choice(["3B", "5B", "7B", "11A", "23A"]), required=True)
@click.option("--lattice-out", type=click.Path(path_type=Path), default=None)
@click.option("--isometry-out", type=click.Path(path_type=Path), default=None)
@click.option("--glue", is_flag=True, help="Also rebuild an even unimodular lattice (11A, 23A).")
@click.pass_context
@guarded("coinvariant")
def coinvariant(
    ctx: click.Context, tag: str, lattice_out: Path | None, isometry_out: Path | None, glue: bool
) -> int:
    """Coinvariant lattice of a Golay permutation class acting on the Leech lattice."""
    seed = ctx.obj["seed"]
    cc = coinvariant_class(tag, seed=seed)
    iso_doc = IsometryDoc.from_isometry(cc.isometry)
    result: Dict[str, Any] = {
        "tag": tag,
        "cycle_type": cc.permutation.cycle_type,
        "permutation": cc.permutation.perm,
        "rank": cc.lattice.rank,
        "fixed_rank": cc.fixed.rank,
        "discriminant": discriminant_group(cc.lattice).label(),
        "checks": cc.checks,
    }
    if glue:
        if tag not in GLUE_TAGS:
            raise InputError(f"--glue is defined for {GLUE_TAGS}")
        glued = reconstruct_unimodular(tag, seed=seed)
        result["glued_theta"] = theta_prefix(glued, 4)
    _write_json(lattice_out, iso_doc.lattice.model_dump_json(indent=2))
    _write_json(isometry_out, json.dumps({"matrix": iso_doc.matrix}, indent=2))
    _emit(ReportDocument(command="coinvariant", seed=seed, inputs={"tag": tag}, result=result))
    return 0


# --- classify-codes --------------------------------------------------------------


@main.command("classify-codes")
@click.option("--p", "p", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--dim", type=int, required=True)
@click.option("--self-orthogonal/--any-code", default=True, show_default=True)
@click.option("--rootless/--allow-roots", default=True, show_default=True)
@click.option("--budget", type=float, default=None, help="Seconds; defaults to ORBILAT_CLASSIFICATION_BUDGET.")
@click.pass_context
@guarded("classify-codes")
def classify(
    ctx: click.Context, p: int, t: int, dim: int, self_orthogonal: bool, rootless: bool, budget: float | None
) -> int:
    """Equivalence classes of [t, dim] codes over Z_p."""
    req = validate_request(ClassifyRequest, p=p, t=t, dim=dim)
    seconds = budget if budget is not None else get_settings().classification_budget
    found = classify_codes(
        req.p,
        req.t,
        req.dim,
        require_self_orthogonal=self_orthogonal,
        require_B_rootless=rootless,
        budget=Budget(seconds, label="classify-codes"),
    )
    _emit(
        ReportDocument(
            command="classify-codes",
            seed=ctx.obj["seed"],
            inputs=req.model_dump() | {"self_orthogonal": self_orthogonal, "rootless": rootless},
            result={"classes": len(found), "representatives": [CodeDoc.from_code(c) for c in found]},
        )
    )
    return 0


# --- verify-triality -------------------------------------------------------------


@main.command("verify-triality")
@click.option("--k", "k", type=int, required=True)
@click.pass_context
@guarded("verify-triality")
def verify_triality(ctx: click.Context, k: int) -> int:
    """Exact F, G, Z identities over Q(zeta_k)."""
    req = validate_request(TrialityRequest, k=k)
    report = {**sfg_report(req.k), **conjugation_report(req.k)}
    report["weight_grading"] = verify_weight_grading(req.k)
    report["root_space_permutation"] = verify_root_space_permutation(req.k)
    passed = all(report.values())
    _emit(
        ReportDocument(
            command="verify-triality",
            seed=ctx.obj["seed"],
            inputs={"k": req.k},
            result={"passed": passed, "identities": report},
        )
    )
    return 0 if passed else 1


# --- verify-paper ----------------------------------------------------------------


def _matrix(report: ReportDocument) -> str:
    width = max((len(c.name) for c in report.checks), default=10)
    lines = [f"{'check':<{width}}  status   ms"]
    for c in report.checks:
        lines.append(f"{c.name:<{width}}  {c.status.value:<7}  {c.duration_ms:.0f}")
    lines.append(" ".join(f"{k}={v}" for k, v in report.summary.items()))
    return "\n".join(lines)


@main.command("verify-paper")
@click.option("--suite", type=click.Choice(sorted(SUITES)), required=True)
@click.option("--budget", type=float, default=None, help="Seconds for the whole suite.")
@click.option("--only", default=None, help="Run a single check by name.")
@click.option("--list", "list_only", is_flag=True, help="List the checks of the suite and exit.")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Report JSON output.")
@click.pass_context
@guarded("verify-paper")
def verify_paper(
    ctx: click.Context, suite: str, budget: float | None, only: str | None, list_only: bool, out: Path | None
) -> int:
    """Run an acceptance suite and print its pass/fail matrix."""
    req = validate_request(VerifyRequest, suite=suite, budget=budget)
    seed = ctx.obj["seed"]
    runner = build_runner(req.suite, seed=seed)
    if list_only:
        for check in runner.get_pipeline_info()["checks"]:
            click.echo(check["name"])
        return 0

    shared = Shared(
        command=f"verify-paper --suite {req.suite}",
        seed=seed,
        budget=Budget(req.budget, label=f"suite {req.suite}") if req.budget else None,
        inputs={"suite": req.suite, "budget": req.budget},
    )
    try:
        if only:
            report = asyncio.run(runner.run_partial(shared, only, only))
        else:
            report = asyncio.run(runner.run(shared))
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None

    click.echo(_matrix(report))
    _write_json(out, report.dump())
    if report.result.get("budget_exceeded"):
        return BudgetExceeded.exit_code
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
