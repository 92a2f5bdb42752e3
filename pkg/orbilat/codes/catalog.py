"""
The five short self-orthogonal codes whose Construction B lattices are
rootless, with the invariants of those lattices.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from ..core.errors import InputError
from .construction import ConstructionContext
from .zp import CodeZp


@dataclass(frozen=True)
class CatalogCode:
    tag: str
    p: int
    t: int
    generators: Tuple[Tuple[int, ...], ...]
    rank: int
    discriminant: str
    extended: bool = False

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def code(self) -> CodeZp:
        return CodeZp.from_generators(self.p, self.generators, self.t)

    @property
    def context(self) -> ConstructionContext:
        return ConstructionContext.zp(self.p, self.t)

    @property
    def root_type(self) -> str:
        return f"A_{self.p - 1}^{self.t}"

    @property
    def parameters(self) -> Tuple[int, int, int]:
        return (self.p, self.t, self.dim)


CATALOG: Tuple[CatalogCode, ...] = (
    CatalogCode("3B", 3, 6, ((1, 1, 1, 1, 1, 1),), 12, "Z_3^6"),
    CatalogCode(
        "3C",
        3,
        9,
        (
            (1, 1, 1, 1, 1, 1, 1, 1, 1),
            (1, 1, 1, 2, 2, 2, 0, 0, 0),
            (1, 2, 0, 1, 2, 0, 1, 2, 0),
        ),
        18,
        "Z_3^5",
        extended=True,
    ),
    CatalogCode("5B", 5, 4, ((1, 1, 2, 2),), 16, "Z_5^4"),
    CatalogCode("5C", 5, 5, ((1, 1, 1, 1, 1), (1, 2, 4, 3, 0)), 20, "Z_5^3", extended=True),
    CatalogCode("7B", 7, 3, ((1, 2, 3),), 18, "Z_7^3"),
)

BY_TAG: Dict[str, CatalogCode] = {c.tag: c for c in CATALOG}
BY_PARAMETERS: Dict[Tuple[int, int, int], CatalogCode] = {c.parameters: c for c in CATALOG}


def catalog_code(key: str | Tuple[int, int, int]) -> CatalogCode:
    """Lookup by class tag ("5B") or by (p, t, dim)."""
    table = BY_TAG if isinstance(key, str) else BY_PARAMETERS
    try:
        return table[key]  # type: ignore[index]
    except KeyError:
        raise InputError(f"no catalogued code for {key!r}") from None
