from .artifact_store import ArtifactStore, artifact_store
from .schemas import (
    SCHEMA_VERSION,
    BundleDoc,
    CheckRecord,
    CheckStatus,
    CodeDoc,
    ExtraAutVerdict,
    IsometryDoc,
    LatticeDoc,
    LatticeFingerprint,
    ReportDocument,
    VerdictBranch,
)

__all__ = [
    "SCHEMA_VERSION",
    "ArtifactStore",
    "artifact_store",
    "BundleDoc",
    "CheckRecord",
    "CheckStatus",
    "CodeDoc",
    "ExtraAutVerdict",
    "IsometryDoc",
    "LatticeDoc",
    "LatticeFingerprint",
    "ReportDocument",
    "VerdictBranch",
]
