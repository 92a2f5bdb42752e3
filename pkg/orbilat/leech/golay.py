"""
The extended binary Golay code used as a fixture.

The generator rows are read from ``data/golay.json`` and re-verified on
every load: wrong data raises FixtureError instead of producing a wrong
Leech lattice downstream.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..codes.zp import CodeZp, weight_distribution
from ..core.errors import FixtureError
from ..utils.logger import get_logger

logger = get_logger(__name__)

DATA_DIR = Path(__file__).parent / "data"
GOLAY_FILE = DATA_DIR / "golay.json"
AUTOMORPHISM_FILE = DATA_DIR / "golay_aut_gens.json"

GOLAY_LENGTH = 24
GOLAY_DIMENSION = 12
INFINITY = 23
GOLAY_WEIGHTS = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


@dataclass(frozen=True)
class GolayCode:
    code: CodeZp
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def preserved_by(self, perm: Sequence[int]) -> bool:
        """True when moving coordinate i to perm[i] maps the code onto itself."""
        g = self.matrix
        moved = np.zeros_like(g)
        moved[:, list(perm)] = g
        return not np.any((moved @ g.T) % 2)


def _read_json(path: Path) -> Dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise FixtureError(f"cannot read fixture {path.name}: {exc}") from exc


def _parse_rows(raw: Sequence[str]) -> List[Tuple[int, ...]]:
    rows = []
    for r in raw:
        if len(r) != GOLAY_LENGTH or set(r) - {"0", "1"}:
            raise FixtureError(f"malformed Golay generator {r!r}")
        rows.append(tuple(int(c) for c in r))
    return rows


def verify_golay(rows: Sequence[Sequence[int]]) -> CodeZp:
    """Dimension 12, self-dual and the weight distribution 1, 759, 2576, 759, 1."""
    code = CodeZp.from_generators(2, rows, GOLAY_LENGTH)
    if code.dim != GOLAY_DIMENSION:
        raise FixtureError(f"Golay fixture has dimension {code.dim}")
    g = np.array(rows, dtype=np.int64)
    if np.any((g @ g.T) % 2):
        raise FixtureError("Golay fixture is not self-orthogonal")
    dist = weight_distribution(code)
    if dist != GOLAY_WEIGHTS:
        raise FixtureError(f"Golay fixture has weight distribution {dist}")
    return code


@lru_cache(maxsize=1)
def build_golay() -> GolayCode:
    data = _read_json(GOLAY_FILE)
    rows = _parse_rows(data.get("generators", []))
    code = verify_golay(rows)
    logger.debug("Golay fixture verified")
    return GolayCode(code, tuple(rows))


@lru_cache(maxsize=1)
def golay_automorphism_generators() -> Dict[str, Tuple[int, ...]]:
    """Named permutations of the 24 coordinates, each checked to preserve the code."""
    golay = build_golay()
    data = _read_json(AUTOMORPHISM_FILE)
    gens: Dict[str, Tuple[int, ...]] = {}
    for name, perm in data.get("generators", {}).items():
        if sorted(perm) != list(range(GOLAY_LENGTH)):
            raise FixtureError(f"generator {name} is not a permutation of 24 points")
        if not golay.preserved_by(perm):
            raise FixtureError(f"generator {name} does not preserve the Golay code")
        gens[name] = tuple(perm)
    if not gens:
        raise FixtureError("no Golay automorphism generators in fixture")
    return gens
