import json

import pytest

from orbilat.config import get_settings
from orbilat.records.artifact_store import CACHE_FILE, FINGERPRINT, PERMUTATION, ArtifactStore, artifact_store


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setattr(get_settings(), "cache_dir", tmp_path)
    return tmp_path


def test_add_and_get():
    """Test l'ajout et la lecture d'un artifact."""
    key = artifact_store.add("permutation:1^6 3^6:1", PERMUTATION, {"perm": [1, 0, 2]}, tag="3B")
    assert key == "permutation:1^6 3^6:1"
    assert artifact_store.get(key) == {"perm": [1, 0, 2]}
    assert artifact_store.artifacts[key]["metadata"] == {"tag": "3B"}
    assert artifact_store.get("nonexistent") is None


def test_list_with_filter():
    artifact_store.add("a", PERMUTATION, {})
    artifact_store.add("b", PERMUTATION, {})
    artifact_store.add("c", FINGERPRINT, {})
    assert len(artifact_store.list()) == 3
    assert [a["id"] for a in artifact_store.list(type_filter=FINGERPRINT)] == ["c"]
    assert len(artifact_store.list(limit=1)) == 1


def test_delete():
    artifact_store.add("a", PERMUTATION, {})
    assert artifact_store.delete("a")
    assert not artifact_store.delete("a")


def test_max_artifacts_evicts_oldest():
    """Test la limite du store : le plus ancien est retiré."""
    store = ArtifactStore(max_artifacts=2)
    store.add("first", PERMUTATION, {})
    store.add("second", PERMUTATION, {})
    store.add("third", PERMUTATION, {})
    assert set(store.artifacts) == {"second", "third"}
    assert store.get_stats()["total_artifacts"] == 2


def test_stats():
    artifact_store.add("a", PERMUTATION, {})
    artifact_store.add("b", FINGERPRINT, {})
    stats = artifact_store.get_stats()
    assert stats["by_type"] == {PERMUTATION: 1, FINGERPRINT: 1}


def test_export_import(tmp_path):
    artifact_store.add("a", FINGERPRINT, {"rank": 20})
    target = tmp_path / "out" / "store.json"
    artifact_store.export_to_file(target)
    store = ArtifactStore()
    assert store.import_from_file(target) == 1
    assert store.get("a") == {"rank": 20}


def test_import_ignores_unreadable_file(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert ArtifactStore().import_from_file(broken) == 0
    assert ArtifactStore().import_from_file(tmp_path / "missing.json") == 0


def test_persist_and_load_cache(cache_dir):
    """Test la persistance dans cache_dir puis le rechargement."""
    artifact_store.add("a", PERMUTATION, {"perm": [0]})
    assert artifact_store.persist()
    data = json.loads((cache_dir / CACHE_FILE).read_text())
    assert data["a"]["content"] == {"perm": [0]}

    artifact_store.clear()
    assert artifact_store.load_cache() == 1
    assert artifact_store.get("a") == {"perm": [0]}
    assert artifact_store.load_cache() == 0


def test_persist_without_cache_dir(monkeypatch):
    monkeypatch.setattr(get_settings(), "cache_dir", None)
    assert not artifact_store.persist()
    assert artifact_store.load_cache() == 0
