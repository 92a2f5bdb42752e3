from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache
from pathlib import Path
from typing import Optional

DEFAULT_SEED = 0xC0FFEE


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env", env_prefix="ORBILAT_", case_sensitive=False, extra="ignore"
    )

    # Logging
    log_level: str = "INFO"
    log_file: Optional[str] = None

    # Randomness (ORBILAT_SEED overrides)
    seed: int = DEFAULT_SEED

    # Persistence of found permutations and lattice fingerprints
    cache_dir: Optional[Path] = None

    # Exact arithmetic limits
    lll_delta: str = "3/4"
    isometry_order_cap: int = 10_000
    code_enumeration_limit: int = 10_000_000

    # Golay automorphism search
    search_max_products: int = 1_000_000
    search_batch_size: int = 10_000

    # Fingerprints
    theta_norm: int = 6

    # Suite budgets (seconds)
    default_budget: float = 600.0
    classification_budget: float = 7200.0


@lru_cache
def get_settings() -> Settings:
    return Settings()
