import json
from pathlib import Path
from typing import Any, Dict, Literal

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator
from sympy import isprime

from ..core.errors import InputError


class ConstructRequest(BaseModel):
    """Validation d'une requête ``construct``."""

    p: int = Field(..., ge=2, description="Premier p du code")
    code: Path = Field(..., description="Fichier JSON du code")
    variant: Literal["A", "B"] = "B"

    @field_validator("p")
    @classmethod
    def validate_p(cls, v: int) -> int:
        if not isprime(v):
            raise ValueError(f"p must be prime, got {v}")
        return v


class CheckExtraRequest(BaseModel):
    """Validation d'une requête ``check-extra``."""

    lattice: Path
    isometry: Path


class ClassifyRequest(BaseModel):
    p: int = Field(..., ge=2)
    t: int = Field(..., ge=1, le=32)
    dim: int = Field(..., ge=0)

    @field_validator("p")
    @classmethod
    def validate_p(cls, v: int) -> int:
        if not isprime(v):
            raise ValueError(f"p must be prime, got {v}")
        return v

    @model_validator(mode="after")
    def validate_dim(self) -> "ClassifyRequest":
        if self.dim > self.t:
            raise ValueError(f"dimension {self.dim} exceeds the length {self.t}")
        return self


class TrialityRequest(BaseModel):
    k: int = Field(..., ge=2, le=64, description="Ordre de la racine de l'unité")


class VerifyRequest(BaseModel):
    suite: str
    budget: float | None = Field(default=None, gt=0, description="Budget en secondes")


def validate_request(model: type[BaseModel], **values: Any) -> Any:
    """Valide les arguments d'une commande ; les erreurs deviennent des InputError."""
    try:
        return model(**values)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(x) for x in first["loc"]) or model.__name__
        raise InputError(f"{where}: {first['msg']}") from exc


def read_json(path: Path | str) -> Dict[str, Any]:
    """
    Lit un document JSON UTF-8.

    Raises:
        InputError: fichier absent, illisible ou JSON invalide
    """
    p = Path(path)
    if not p.is_file():
        raise InputError(f"file not found: {p}")
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {p}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{p} must hold a JSON object")
    return data


def validate_json_structure(data: Any, required_keys: list[str]) -> bool:
    """
    Valide qu'un dict contient les clés requises.

    Raises:
        InputError: si des clés manquent
    """
    if not isinstance(data, dict):
        raise InputError("Data must be a dictionary")
    missing = [key for key in required_keys if key not in data]
    if missing:
        raise InputError(f"Missing required keys: {missing}")
    return True
