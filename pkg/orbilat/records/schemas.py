"""
Schémas JSON des entrées et sorties.

Toutes les valeurs rationnelles circulent sous forme de chaînes "a/b" (ou
"a" pour un entier) : jamais de flottants, la sérialisation reste exacte.
"""

from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, ValidationError, field_validator, model_validator
from sympy import isprime

from ..codes.construction import ConstructionContext
from ..codes.zp import CodeZp
from ..core.errors import InputError
from ..exact.matrix import vec_mat
from ..lattice.core import Lattice
from ..lattice.isometry import LatticeIsometry

SCHEMA_VERSION = "1.0"


def _coerce_rational(value: Any) -> str:
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if not isinstance(value, str):
        raise ValueError(f"expected a fraction string, got {type(value).__name__}")
    text = value.strip()
    if any(c in text for c in ".eE"):
        raise ValueError(f"decimal notation is not exact: {value!r}")
    try:
        return str(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {value!r}") from exc


RationalStr = Annotated[str, BeforeValidator(_coerce_rational)]


def to_jsonable(value: Any) -> Any:
    """Fractions en chaînes, tuples et ensembles en listes, récursivement."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, CodeZp):
        return {"p": value.p, "length": value.length, "generators": [list(r) for r in value.gen]}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in value]
        return sorted(items, key=repr) if isinstance(value, (set, frozenset)) else items
    return value


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


class LatticeDoc(_Document):
    """Réseau : lignes de base rationnelles et facteur d'échelle du produit scalaire."""

    name: str | None = None
    ambient_dim: int = Field(..., ge=1)
    inner_scale: RationalStr = "1"
    basis: List[List[RationalStr]]

    @model_validator(mode="after")
    def check_shape(self) -> "LatticeDoc":
        bad = [i for i, row in enumerate(self.basis) if len(row) != self.ambient_dim]
        if bad:
            raise ValueError(f"basis rows {bad} do not have length ambient_dim = {self.ambient_dim}")
        if Fraction(self.inner_scale) <= 0:
            raise ValueError("inner_scale must be positive")
        return self

    def rows(self) -> List[List[Fraction]]:
        return [[Fraction(x) for x in row] for row in self.basis]

    def to_lattice(self) -> Lattice:
        return Lattice.from_basis(
            self.rows(), inner_scale=Fraction(self.inner_scale), ambient_dim=self.ambient_dim, name=self.name or ""
        )

    @classmethod
    def from_lattice(cls, lattice: Lattice) -> "LatticeDoc":
        return cls(
            name=lattice.name or None,
            ambient_dim=lattice.ambient_dim,
            inner_scale=str(lattice.inner_scale),
            basis=[[str(x) for x in row] for row in lattice.basis],
        )


def _check_prime(p: int) -> int:
    if not isprime(p):
        raise ValueError(f"p must be prime, got {p}")
    return p


class CodeDoc(_Document):
    p: int
    length: int = Field(..., ge=1)
    generators: List[List[int]] = Field(default_factory=list)

    prime_p = field_validator("p")(_check_prime)

    @model_validator(mode="after")
    def check_rows(self) -> "CodeDoc":
        for row in self.generators:
            if len(row) != self.length:
                raise ValueError(f"generator {row} does not have length {self.length}")
        return self

    def to_code(self) -> CodeZp:
        return CodeZp.from_generators(self.p, self.generators, self.length)

    @classmethod
    def from_code(cls, code: CodeZp) -> "CodeDoc":
        return cls(p=code.p, length=code.length, generators=[list(r) for r in code.gen])


class IsometryDoc(_Document):
    """Isométrie : ligne i de ``matrix`` = coordonnées de l'image de basis[i]."""

    lattice: LatticeDoc
    matrix: List[List[int]]

    @model_validator(mode="after")
    def check_square(self) -> "IsometryDoc":
        n = len(self.lattice.basis)
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError(f"matrix must be {n}x{n}")
        return self

    def to_isometry(self) -> LatticeIsometry:
        lattice = self.lattice.to_lattice()
        rows = self.lattice.rows()
        images = [vec_mat(r, rows, lattice.ambient_dim) for r in self.matrix]
        return LatticeIsometry.from_images(lattice, rows, images)

    @classmethod
    def from_isometry(cls, g: LatticeIsometry) -> "IsometryDoc":
        return cls(lattice=LatticeDoc.from_lattice(g.lattice), matrix=[list(r) for r in g.matrix])


class BundleDoc(_Document):
    """Données (C, e) d'une construction B sur Z_p."""

    p: int
    t: int = Field(..., ge=1)
    code: List[List[int]] = Field(default_factory=list)
    e: List[int]

    prime_p = field_validator("p")(_check_prime)

    @model_validator(mode="after")
    def check_lengths(self) -> "BundleDoc":
        if len(self.e) != self.t:
            raise ValueError(f"e has length {len(self.e)}, expected t = {self.t}")
        for row in self.code:
            if len(row) != self.t:
                raise ValueError(f"code generator {row} does not have length t = {self.t}")
        return self

    def context(self) -> ConstructionContext:
        return ConstructionContext.zp(self.p, self.t)

    def to_code(self) -> CodeZp:
        return CodeZp.from_generators(self.p, self.code, self.t)

    def word(self) -> Tuple[int, ...]:
        return tuple(x % self.p for x in self.e)


class LatticeFingerprint(_Document):
    """Invariants comparables d'un réseau (avec une isométrie éventuelle)."""

    rank: int
    determinant: RationalStr
    discriminant: str
    quadratic_type: str | None = None
    rootless: bool
    dual_image_equals: bool | None = None
    theta: List[Tuple[int, int]] = Field(default_factory=list)


class VerdictBranch(str, Enum):
    B_CONSTRUCTION_2 = "B-construction(p=2)"
    B_CONSTRUCTION_ODD = "B-construction(p odd)"
    LEECH_11A = "Leech-11A"
    LEECH_23A = "Leech-23A"
    NONE = "none"


class ExtraAutVerdict(_Document):
    has_extra: bool
    branch: VerdictBranch
    witness: Dict[str, Any] = Field(default_factory=dict)
    fingerprints: Dict[str, LatticeFingerprint] = Field(default_factory=dict)

    @field_validator("witness", mode="before")
    @classmethod
    def jsonable_witness(cls, value: Any) -> Any:
        return to_jsonable(value)

    @model_validator(mode="after")
    def branch_matches(self) -> "ExtraAutVerdict":
        if self.has_extra == (self.branch == VerdictBranch.NONE):
            raise ValueError(f"branch {self.branch.value!r} contradicts has_extra={self.has_extra}")
        return self


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"
    SKIPPED = "skipped"


class CheckRecord(_Document):
    name: str
    status: CheckStatus
    duration_ms: float = 0.0
    data: Dict[str, Any] = Field(default_factory=dict)
    error: str | None = None

    @field_validator("data", mode="before")
    @classmethod
    def jsonable_values(cls, value: Any) -> Any:
        return to_jsonable(value)


class ReportDocument(_Document):
    schema_version: str = SCHEMA_VERSION
    command: str
    seed: int | None = None
    inputs: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckRecord] = Field(default_factory=list)
    result: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("inputs", "result", mode="before")
    @classmethod
    def jsonable_values(cls, value: Any) -> Any:
        return to_jsonable(value)

    @property
    def passed(self) -> bool:
        return all(c.status in (CheckStatus.PASSED, CheckStatus.SKIPPED) for c in self.checks)

    @property
    def summary(self) -> Dict[str, int]:
        counts = {s.value: 0 for s in CheckStatus}
        for c in self.checks:
            counts[c.status.value] += 1
        return counts

    def dump(self) -> str:
        return self.model_dump_json(indent=2)


def load_document(model: type[_Document], payload: Dict[str, Any]) -> Any:
    """Validation pydantic, les erreurs devenant des InputError."""
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        raise InputError(f"invalid {model.__name__}: {exc.errors()[0]['msg']}") from exc
