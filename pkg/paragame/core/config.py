from functools import lru_cache
from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict


# This file is: paragame/core/config.py
# parent.parent -> .../paragame
PACKAGE_DIR = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    """
    All config comes from .env file (or the process environment).
    CLI flags override these values for a single run.
    """

    # ─────────────────────────────────────────────────────
    # Lattice
    # ─────────────────────────────────────────────────────
    LATTICE_MAX_ELEMENTS: int = 1_000_000

    # ─────────────────────────────────────────────────────
    # Solvers
    # ─────────────────────────────────────────────────────
    DEFAULT_ALGORITHM: str = "walt"
    TRACE_KEEP_ALL: bool = True

    # Arena validation: how many knowledge sets the partition self-test samples
    VALIDATION_SAMPLES: int = 16
    VALIDATION_SEED: int = 0

    # ─────────────────────────────────────────────────────
    # QBF
    # ─────────────────────────────────────────────────────
    QBF_DEFAULT_ALGORITHM: str = "walt"
    QBF_BRUTE_MAX_VARS: int = 24

    # ─────────────────────────────────────────────────────
    # Bench
    # ─────────────────────────────────────────────────────
    BENCH_TIMEOUT_SECONDS: float = 300.0
    BENCH_WORKERS: int = 1

    # ─────────────────────────────────────────────────────
    # App
    # ─────────────────────────────────────────────────────
    APP_ENV: str = "production"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # ─────────────────────────────────────────────────────
    # Pydantic Settings Config
    # ─────────────────────────────────────────────────────
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    @property
    def log_level_value(self) -> str:
        return self.LOG_LEVEL.strip().upper() or "WARNING"


@lru_cache()
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
