"""
Store pour les résultats coûteux à recalculer.
Stockage en mémoire avec persistence optionnelle dans ``cache_dir``.

Deux types d'artifacts : les permutations de Golay trouvées par la
recherche aléatoire (clé : classe et graine) et les empreintes des réseaux
de référence.
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List

from loguru import logger

from ..config import get_settings

CACHE_FILE = "artifacts.json"

PERMUTATION = "permutation"
FINGERPRINT = "fingerprint"


class ArtifactStore:
    """Store centralisé pour les artifacts."""

    def __init__(self, max_artifacts: int = 256) -> None:
        self.artifacts: Dict[str, Dict[str, Any]] = {}
        self.max_artifacts = max_artifacts
        self._loaded_from: Path | None = None

    def add(self, artifact_id: str, artifact_type: str, content: Dict[str, Any], **metadata: Any) -> str:
        """
        Ajoute un artifact au store.

        Args:
            artifact_id: Clé stable (par exemple "permutation:3B:12648430")
            artifact_type: PERMUTATION ou FINGERPRINT
            content: Données JSON de l'artifact

        Returns:
            ID de l'artifact
        """
        if artifact_id not in self.artifacts and len(self.artifacts) >= self.max_artifacts:
            oldest_id = min(self.artifacts, key=lambda k: self.artifacts[k].get("created_at", ""))
            del self.artifacts[oldest_id]
            logger.warning(f"Removed oldest artifact {oldest_id} (max limit reached)")

        self.artifacts[artifact_id] = {
            "id": artifact_id,
            "type": artifact_type,
            "content": content,
            "metadata": metadata,
            "created_at": datetime.now().isoformat(),
        }
        logger.debug(f"Added artifact {artifact_id} to store")
        return artifact_id

    def get(self, artifact_id: str) -> Dict[str, Any] | None:
        """Récupère le contenu d'un artifact par son ID."""
        artifact = self.artifacts.get(artifact_id)
        return artifact["content"] if artifact else None

    def list(self, type_filter: str | None = None, limit: int = 10) -> List[Dict[str, Any]]:
        """Liste les artifacts, les plus récents d'abord."""
        artifacts = [a for a in self.artifacts.values() if not type_filter or a.get("type") == type_filter]
        artifacts.sort(key=lambda x: x.get("created_at", ""), reverse=True)
        return artifacts[:limit]

    def delete(self, artifact_id: str) -> bool:
        if artifact_id in self.artifacts:
            del self.artifacts[artifact_id]
            logger.debug(f"Deleted artifact {artifact_id}")
            return True
        return False

    def get_stats(self) -> Dict[str, Any]:
        types: Dict[str, int] = {}
        for artifact in self.artifacts.values():
            kind = artifact.get("type", "unknown")
            types[kind] = types.get(kind, 0) + 1
        return {
            "total_artifacts": len(self.artifacts),
            "by_type": types,
            "max_artifacts": self.max_artifacts,
            "cache_file": str(self._loaded_from) if self._loaded_from else None,
        }

    def export_to_file(self, filepath: str | Path) -> None:
        """Exporte tous les artifacts vers un fichier JSON."""
        path = Path(filepath)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.artifacts, f, indent=2, sort_keys=True, ensure_ascii=False)
        logger.info(f"Exported {len(self.artifacts)} artifacts to {path}")

    def import_from_file(self, filepath: str | Path) -> int:
        """Importe des artifacts depuis un fichier JSON ; un fichier illisible est ignoré."""
        path = Path(filepath)
        try:
            with open(path, "r", encoding="utf-8") as f:
                imported = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            logger.warning(f"Ignoring unreadable artifact cache {path}: {exc}")
            return 0
        count = 0
        for artifact_id, artifact in imported.items():
            if isinstance(artifact, dict) and "content" in artifact:
                self.artifacts[artifact_id] = artifact
                count += 1
        logger.info(f"Imported {count} artifacts from {path}")
        return count

    # Persistence liée à la configuration

    def _cache_path(self) -> Path | None:
        cache_dir = get_settings().cache_dir
        return Path(cache_dir) / CACHE_FILE if cache_dir else None

    def load_cache(self) -> int:
        path = self._cache_path()
        if path is None or path == self._loaded_from:
            return 0
        self._loaded_from = path
        return self.import_from_file(path) if path.exists() else 0

    def persist(self) -> bool:
        path = self._cache_path()
        if path is None:
            return False
        self.export_to_file(path)
        return True

    def clear(self) -> None:
        """Vide le store (le fichier de cache n'est pas touché)."""
        count = len(self.artifacts)
        self.artifacts.clear()
        self._loaded_from = None
        logger.debug(f"Cleared {count} artifacts from store")


# Instance globale
artifact_store = ArtifactStore()
